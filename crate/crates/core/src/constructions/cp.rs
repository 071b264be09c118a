//! An element of order `p` in `Sp(*, O)` for each supported ring.

use num_bigint::BigInt;
use serde::Serialize;

use super::AnyRep;
use crate::algebra::{gl_to_sp, multiplication_matrix, symplectic_basis, trace_form_gram, CycInt, Matrix, Ring, SymplecticRep};
use crate::error::Result;
use crate::invariant::RingDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CpStrategy {
    /// `diag(zeta, zeta^-1)` in `Sp(2, Z[zeta])`.
    ZetaDiagonal,
    /// Multiplication by `zeta` on `Z[zeta] = Z^(p-1)` with the trace form.
    TraceForm,
    /// Companion matrix of `X^2 - (zeta + zeta^-1) X + 1` in `SL(2, O)`.
    RealCompanion,
    /// Companion matrix of the degree-`l` minimal polynomial through `GL -> Sp`.
    CompanionGl,
}

pub fn cp_strategy(rd: &RingDescriptor) -> CpStrategy {
    let p = rd.p.get();
    if rd.zeta_in_ring {
        CpStrategy::ZetaDiagonal
    } else if rd.l == p - 1 {
        CpStrategy::TraceForm
    } else if rd.l == 2 {
        CpStrategy::RealCompanion
    } else {
        CpStrategy::CompanionGl
    }
}

/// Rank of the module `cp_generator` acts on: `l` for `l` even, else `2l`.
pub fn cp_size(rd: &RingDescriptor) -> usize {
    match cp_strategy(rd) {
        CpStrategy::ZetaDiagonal => 2,
        CpStrategy::TraceForm => rd.p.get() as usize - 1,
        CpStrategy::RealCompanion => 2,
        CpStrategy::CompanionGl => 2 * rd.l as usize,
    }
}

/// `prod_{h in H_l} (X - zeta^h)`, ascending coefficients.
fn orbit_polynomial(rd: &RingDescriptor) -> Vec<CycInt> {
    let p = rd.p;
    let mut poly = vec![CycInt::one(p)];
    for h in rd.subgroup() {
        let root = CycInt::zeta_pow(p, h as i64);
        let mut next = vec![CycInt::zero(p); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&root));
        }
        poly = next;
    }
    poly
}

/// Companion matrix of a monic polynomial: ones below the diagonal, last
/// column `-c_0, ..., -c_{d-1}`.
fn companion(p: crate::arith::Prime, poly: &[CycInt]) -> Matrix<CycInt> {
    let d = poly.len() - 1;
    Matrix::from_fn(p, d, d, |i, j| {
        if j == d - 1 {
            poly[i].neg()
        } else if i == j + 1 {
            CycInt::one(p)
        } else {
            CycInt::zero(p)
        }
    })
}

/// Order-`p` symplectic generator `c` for the ring `rd`.
pub fn cp_generator(rd: &RingDescriptor) -> Result<AnyRep> {
    let p = rd.p;
    fn one<R: Ring>(size: usize, m: Matrix<R>) -> Result<SymplecticRep<R>> {
        SymplecticRep::new(size, vec![("c".to_string(), m)])
    }
    let size = cp_size(rd);
    match cp_strategy(rd) {
        CpStrategy::ZetaDiagonal if p.get() == 2 => {
            Ok(AnyRep::Z(one(size, Matrix::from_ints((), &[&[-1, 0], &[0, -1]]))?))
        }
        CpStrategy::ZetaDiagonal => {
            let m = Matrix::from_rows(
                p,
                vec![
                    vec![CycInt::zeta(p), CycInt::zero(p)],
                    vec![CycInt::zero(p), CycInt::zeta_pow(p, -1)],
                ],
            )?;
            Ok(AnyRep::Zzeta(one(size, m)?))
        }
        CpStrategy::TraceForm => {
            let u = symplectic_basis(&trace_form_gram(p)?)?;
            let z = multiplication_matrix(&CycInt::zeta(p));
            let m: Matrix<BigInt> = u.inverse()?.mul(&z)?.mul(&u)?;
            Ok(AnyRep::Z(one(size, m)?))
        }
        CpStrategy::RealCompanion => Ok(AnyRep::Zzeta(one(size, companion(p, &orbit_polynomial(rd)))?)),
        CpStrategy::CompanionGl => Ok(AnyRep::Zzeta(one(size, gl_to_sp(&companion(p, &orbit_polynomial(rd)))?)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn check_order_and_det(rep: &AnyRep, p: u64) {
        match rep {
            AnyRep::Z(r) => {
                let m = &r.generators()[0].1;
                assert_eq!(m.order(p + 1).unwrap(), p);
                assert_eq!(m.det().unwrap(), BigInt::from(1));
            }
            AnyRep::Zzeta(r) => {
                let m = &r.generators()[0].1;
                assert_eq!(m.order(p + 1).unwrap(), p);
                assert!(m.det().unwrap().is_one());
            }
        }
    }

    #[test]
    fn p3_integers() {
        let AnyRep::Z(r) = cp_generator(&RingDescriptor::integers(pr(3))).unwrap() else { panic!() };
        assert_eq!(r.generators()[0].1, Matrix::from_ints((), &[&[-1, 1], &[-1, 0]]));
    }

    #[test]
    fn p3_cyclotomic() {
        let p = pr(3);
        let AnyRep::Zzeta(r) = cp_generator(&RingDescriptor::cyclotomic(p)).unwrap() else { panic!() };
        let m = &r.generators()[0].1;
        assert_eq!(m.get(0, 0), &CycInt::zeta(p));
        assert_eq!(m.get(1, 1), &CycInt::zeta_pow(p, 2));
    }

    #[test]
    fn p5_real() {
        let p = pr(5);
        let AnyRep::Zzeta(r) = cp_generator(&RingDescriptor::real_subfield(p)).unwrap() else { panic!() };
        let eta = CycInt::zeta(p).add(&CycInt::zeta_pow(p, 4));
        let expect = Matrix::from_rows(p, vec![vec![CycInt::zero(p), CycInt::one(p).neg()], vec![CycInt::one(p), eta]]).unwrap();
        assert_eq!(r.generators()[0].1, expect);
    }

    #[test]
    fn order_and_det_everywhere() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for l in (1..p).filter(|l| (p - 1) % l == 0) {
                let rd = RingDescriptor::custom(pr(p), l).unwrap();
                let rep = cp_generator(&rd).unwrap();
                assert_eq!(rep.size(), cp_size(&rd));
                let native = l % 2 == 0 && (l == 2 || l == p - 1);
                assert_eq!(rep.size(), if native { l as usize } else { 2 * l as usize });
                check_order_and_det(&rep, p);
            }
        }
    }
}
