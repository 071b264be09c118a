//! Integral alternating forms: the trace pairing on Z[zeta_p] and reduction
//! of a unimodular alternating Gram matrix to the standard `J`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{CycInt, CycNum};
use super::matrix::Matrix;
use super::symplectic::standard_j;
use crate::arith::Prime;
use crate::error::{Error, Result};

pub type IntMatrix = Matrix<BigInt>;

/// Matrix of `u -> x u` on the power basis of Z[zeta_p]; column `k` holds
/// the coordinates of `x zeta^k`.
pub fn multiplication_matrix(x: &CycInt) -> IntMatrix {
    let p = x.as_num().prime();
    let d = p.get() as usize - 1;
    let cols: Vec<CycInt> = (0..d)
        .map(|k| CycInt::new(x.as_num().mul(&CycNum::zeta_pow(p, k as i64))).expect("integral"))
        .collect();
    Matrix::from_fn((), d, d, |i, j| cols[j].as_num().numerators()[i].clone())
}

/// `(zeta - zeta^-1)^-(p-2)`, a generator of the inverse different with
/// `conj(lambda) = -lambda`.
pub fn inverse_different_generator(p: Prime) -> Result<CycNum> {
    if !p.is_odd() {
        return Err(Error::Unsupported("trace form needs an odd prime".into()));
    }
    let z = CycNum::zeta(p);
    let delta = z.sub(&z.conj());
    delta.pow(p.get() - 2).inv()
}

/// Gram matrix of `E(u, v) = Tr(u conj(v) lambda)` on the basis `1, zeta, ..., zeta^(p-2)`.
pub fn trace_form_gram(p: Prime) -> Result<IntMatrix> {
    let lambda = inverse_different_generator(p)?;
    let d = p.get() as usize - 1;
    // Tr(zeta^a zeta^-b lambda) only depends on a - b
    let by_shift: Vec<BigInt> = (0..p.get())
        .map(|s| {
            let t = CycNum::zeta_pow(p, s as i64).mul(&lambda).trace();
            if t.is_integer() {
                Ok(t.to_integer())
            } else {
                Err(Error::InvalidArgument(format!("non-integral trace {t}")))
            }
        })
        .collect::<Result<_>>()?;
    let pp = p.get() as i64;
    Ok(Matrix::from_fn((), d, d, |a, b| {
        by_shift[(a as i64 - b as i64).rem_euclid(pp) as usize].clone()
    }))
}

fn is_alternating(g: &IntMatrix) -> bool {
    g.is_square()
        && (0..g.rows()).all(|i| {
            g.get(i, i).is_zero() && (0..i).all(|j| *g.get(i, j) == -g.get(j, i))
        })
}

fn pair(g: &IntMatrix, u: &[BigInt], v: &[BigInt]) -> BigInt {
    let gv = g.mul_vec(v).expect("dimensions match");
    u.iter().zip(&gv).map(|(a, b)| a * b).sum()
}

/// Row-style Hermite reduction: a basis of the lattice spanned by `vectors`.
pub fn lattice_basis(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut basis = Vec::new();
    for col in 0..width {
        loop {
            let active: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
            if active.len() <= 1 {
                if let Some(&r) = active.first() {
                    basis.push(rows.swap_remove(r));
                }
                break;
            }
            let piv = *active
                .iter()
                .min_by_key(|&&r| rows[r][col].abs())
                .expect("nonempty");
            let pivot_row = rows[piv].clone();
            for &r in &active {
                if r == piv {
                    continue;
                }
                let q = rows[r][col].div_floor(&pivot_row[col]);
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
            rows.retain(|v| v.iter().any(|x| !x.is_zero()));
        }
    }
    basis
}

/// Unimodular `U` with `U^T G U = J` for an alternating unimodular `G`.
///
/// Columns of `U` are `e_1..e_n` followed by `f_1..f_n`. Each step takes the
/// first remaining basis vector as `e`, preferring a partner `f` among the
/// remaining basis vectors with pairing exactly +-1; otherwise `f` solves
/// `<b_i, f> = delta_{i0}` over the current basis. The rest is projected by
/// `v -> v - <v,f> e + <v,e> f` onto the orthogonal complement.
pub fn symplectic_basis(g: &IntMatrix) -> Result<IntMatrix> {
    if !is_alternating(g) {
        return Err(Error::InvalidArgument("Gram matrix is not alternating".into()));
    }
    let size = g.rows();
    if size % 2 != 0 {
        return Err(Error::Shape("alternating Gram matrix of odd size".into()));
    }
    if !g.det()?.abs().is_one() {
        return Err(Error::InvalidArgument("Gram matrix is not unimodular".into()));
    }
    let n = size / 2;
    let unit = |i: usize| -> Vec<BigInt> {
        (0..size).map(|k| if k == i { BigInt::one() } else { BigInt::zero() }).collect()
    };
    let mut current: Vec<Vec<BigInt>> = (0..size).map(unit).collect();
    let mut es = Vec::with_capacity(n);
    let mut fs = Vec::with_capacity(n);

    while !current.is_empty() {
        let k = current.len();
        let b0 = current[0].clone();
        let direct = (1..k).find_map(|j| {
            let v = pair(g, &b0, &current[j]);
            if v.is_one() {
                Some((j, false))
            } else if (-&v).is_one() {
                Some((j, true))
            } else {
                None
            }
        });
        let (e, f, rest): (Vec<BigInt>, Vec<BigInt>, Vec<Vec<BigInt>>) = match direct {
            Some((j, swapped)) => {
                let (e, f) = if swapped {
                    (current[j].clone(), b0.clone())
                } else {
                    (b0.clone(), current[j].clone())
                };
                let rest = current
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != 0 && *i != j)
                    .map(|(_, v)| v.clone())
                    .collect();
                (e, f, rest)
            }
            None => {
                let h = Matrix::from_fn((), k, k, |i, j| pair(g, &current[i], &current[j]));
                let c = h.inverse()?.column(0);
                let mut f = vec![BigInt::zero(); size];
                for (ci, bi) in c.iter().zip(&current) {
                    for (x, y) in f.iter_mut().zip(bi) {
                        *x += ci * y;
                    }
                }
                let e = b0.clone();
                let drop = (1..k).find(|&i| c[i].abs().is_one());
                let others: Vec<Vec<BigInt>> = current
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != 0 && Some(*i) != drop)
                    .map(|(_, v)| v.clone())
                    .collect();
                (e, f, others)
            }
        };
        let projected: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|v| {
                let vf = pair(g, v, &f);
                let ve = pair(g, v, &e);
                v.iter()
                    .zip(&e)
                    .zip(&f)
                    .map(|((x, a), b)| x - &vf * a + &ve * b)
                    .collect()
            })
            .collect();
        current = if projected.len() == k - 2 {
            projected
        } else {
            lattice_basis(&projected)
        };
        if current.len() != k - 2 {
            return Err(Error::InvalidArgument("complement lost rank".into()));
        }
        es.push(e);
        fs.push(f);
    }

    let cols: Vec<Vec<BigInt>> = es.into_iter().chain(fs).collect();
    let u = Matrix::from_fn((), size, size, |i, j| cols[j][i].clone());
    let check = u.transpose().mul(g)?.mul(&u)?;
    if check != standard_j::<BigInt>((), n) || !u.det()?.abs().is_one() {
        return Err(Error::InvalidArgument("symplectic basis reduction failed".into()));
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn gram_p3() {
        assert_eq!(
            trace_form_gram(pr(3)).unwrap(),
            IntMatrix::from_ints((), &[&[0, -1], &[1, 0]])
        );
        let lambda = inverse_different_generator(pr(3)).unwrap();
        // -(zeta - zeta^2)/3 = -(1 + 2 zeta)/3
        let expect = CycNum::new(pr(3), vec![1.into(), 2.into()], (-3).into()).unwrap();
        assert_eq!(lambda, expect);
    }

    #[test]
    fn gram_p5_by_direct_traces() {
        let p = pr(5);
        let g = trace_form_gram(p).unwrap();
        let lambda = inverse_different_generator(p).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let u = CycNum::zeta_pow(p, a);
                let v = CycNum::zeta_pow(p, b);
                let t = u.mul(&v.conj()).mul(&lambda).trace();
                assert_eq!(t.to_integer(), *g.get(a as usize, b as usize));
            }
        }
        assert_eq!(g.transpose(), g.neg());
        assert_eq!(g.det().unwrap(), BigInt::from(1));
    }

    #[test]
    fn gram_rejects_two() {
        assert!(trace_form_gram(pr(2)).is_err());
    }

    #[test]
    fn zeta_preserves_gram() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = trace_form_gram(pr(p)).unwrap();
            assert_eq!(g.transpose(), g.neg());
            let z = multiplication_matrix(&CycInt::zeta(pr(p)));
            assert_eq!(z.transpose().mul(&g).unwrap().mul(&z).unwrap(), g);
        }
    }

    #[test]
    fn basis_of_standard_j_is_identity() {
        for n in 1..5 {
            let j = standard_j::<BigInt>((), n);
            assert_eq!(symplectic_basis(&j).unwrap(), IntMatrix::identity((), 2 * n));
        }
    }

    #[test]
    fn basis_p3_is_column_swap() {
        let g = IntMatrix::from_ints((), &[&[0, -1], &[1, 0]]);
        assert_eq!(
            symplectic_basis(&g).unwrap(),
            IntMatrix::from_ints((), &[&[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn basis_trace_forms() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = trace_form_gram(pr(p)).unwrap();
            let u = symplectic_basis(&g).unwrap();
            let n = (p as usize - 1) / 2;
            assert_eq!(u.transpose().mul(&g).unwrap().mul(&u).unwrap(), standard_j((), n));
        }
    }

    #[test]
    fn basis_rejects_bad_input() {
        let not_alt = IntMatrix::from_ints((), &[&[1, 1], &[-1, 0]]);
        assert!(symplectic_basis(&not_alt).is_err());
        let not_unimodular = IntMatrix::from_ints((), &[&[0, 2], &[-2, 0]]);
        assert!(symplectic_basis(&not_unimodular).is_err());
    }

    #[test]
    fn hermite_basis() {
        let v = |x: &[i64]| x.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>();
        let b = lattice_basis(&[v(&[2, 0]), v(&[3, 0]), v(&[0, 0]), v(&[1, 4])]);
        assert_eq!(b.len(), 2);
        let det = &b[0][0] * &b[1][1] - &b[0][1] * &b[1][0];
        // span is Z(1,0) + Z(0,4)
        assert_eq!(det.abs(), BigInt::from(4));
    }
}
