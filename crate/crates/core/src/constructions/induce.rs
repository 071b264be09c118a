//! Induced symplectic representations and block substitution into monomial
//! representations.
//!
//! A block matrix acting on `W = (+)_i t_i (x) V` with `V` of rank `2n` is
//! rewritten on the basis `E_{n i + j} = t_i (x) e_j`, `F_{n i + j} = t_i (x) f_j`,
//! so that the form `(+)_i J_n` becomes the standard `J_{mn}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{standard_j, CycInt, Matrix, Ring, SymplecticRep};
use crate::error::{Error, Result};

/// A word in the generators of `H`: `(generator index, exponent)` pairs,
/// read left to right.
pub type Word = Vec<(usize, i64)>;

/// How one generator `g` of `G` moves the transversal:
/// `g t_i = t_{perm[i]} h_i` with `h_i` given by `words[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedGenerator {
    pub name: String,
    pub perm: Vec<usize>,
    pub words: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionData {
    pub index: usize,
    pub generators: Vec<InducedGenerator>,
}

/// `perm[new] = old` taking block-major order `(block i, local r)` to the
/// `E`/`F` order. Local coordinates `0..half` are `e`, `half..2 half` are `f`.
pub fn ef_basis_permutation(blocks: usize, half: usize) -> Vec<usize> {
    let s = 2 * half;
    let mut perm = Vec::with_capacity(blocks * s);
    for part in 0..2 {
        for i in 0..blocks {
            for j in 0..half {
                perm.push(i * s + part * half + j);
            }
        }
    }
    perm
}

/// Gram matrix of `(+)_i J_half` on the `E`/`F` basis.
pub fn transported_gram<R: Ring>(ctx: R::Ctx, blocks: usize, half: usize) -> Matrix<R> {
    let j = standard_j::<R>(ctx, half);
    let big = Matrix::block_diag(ctx, &vec![j; blocks]);
    big.permute_basis(&ef_basis_permutation(blocks, half))
}

fn assemble<R: Ring>(ctx: R::Ctx, blocks: usize, s: usize, cells: &[(usize, usize, Matrix<R>)]) -> Matrix<R> {
    let mut out = Matrix::zeros(ctx, blocks * s, blocks * s);
    for (r, c, b) in cells {
        out.set_block(r * s, c * s, b);
    }
    out
}

fn eval_word<R: Ring>(word: &Word, gens: &[Matrix<R>], invs: &[Matrix<R>], id: &Matrix<R>) -> Result<Matrix<R>> {
    let mut acc = id.clone();
    for &(g, e) in word {
        let base = if e >= 0 { gens.get(g) } else { invs.get(g) }
            .ok_or_else(|| Error::InvalidArgument(format!("word refers to missing generator {g}")))?;
        acc = acc.mul(&base.pow(e.unsigned_abs())?)?;
    }
    Ok(acc)
}

/// `Ind_H^G(rho)` on the `E`/`F` basis.
pub fn induce<R: Ring>(rep: &SymplecticRep<R>, data: &InductionData) -> Result<SymplecticRep<R>> {
    let m = data.index;
    let s = rep.size();
    if m == 0 {
        return Err(Error::InvalidArgument("induction index must be positive".into()));
    }
    let gens = rep.matrices();
    let ctx = gens
        .first()
        .map(|g| g.ctx())
        .ok_or_else(|| Error::InvalidArgument("representation without generators".into()))?;
    let invs = gens.iter().map(Matrix::inverse).collect::<Result<Vec<_>>>()?;
    let id = Matrix::identity(ctx, s);
    let perm = ef_basis_permutation(m, rep.half());
    let mut out = Vec::with_capacity(data.generators.len());
    for g in &data.generators {
        if g.perm.len() != m || g.words.len() != m {
            return Err(Error::InvalidArgument(format!("generator {} has data of the wrong length", g.name)));
        }
        let mut hit = vec![false; m];
        for &t in &g.perm {
            if t >= m || std::mem::replace(&mut hit[t], true) {
                return Err(Error::InvalidArgument(format!("generator {} does not permute the transversal", g.name)));
            }
        }
        let cells = g
            .perm
            .iter()
            .zip(&g.words)
            .enumerate()
            .map(|(i, (&t, w))| Ok((t, i, eval_word(w, &gens, &invs, &id)?)))
            .collect::<Result<Vec<_>>>()?;
        out.push((g.name.clone(), assemble(ctx, m, s, &cells).permute_basis(&perm)));
    }
    SymplecticRep::new(m * s, out)
}

/// Replaces each `zeta^k` of a monomial matrix by `block^k` and each zero by
/// a zero block, in block-major order.
pub fn substitute_entries<R: Ring>(monomial: &Matrix<CycInt>, block: &Matrix<R>) -> Result<Matrix<R>> {
    let p = monomial.ctx().get();
    let s = block.rows();
    let powers = (0..p).map(|k| block.pow(k)).collect::<Result<Vec<_>>>()?;
    let mut cells = Vec::new();
    for i in 0..monomial.rows() {
        let mut seen = 0;
        for j in 0..monomial.cols() {
            let x = monomial.get(i, j);
            if x.is_zero() {
                continue;
            }
            seen += 1;
            let k = x
                .as_zeta_power()
                .ok_or_else(|| Error::InvalidArgument(format!("entry {x} is not a power of zeta")))?;
            cells.push((i, j, powers[k as usize].clone()));
        }
        if seen != 1 {
            return Err(Error::InvalidArgument("matrix is not monomial".into()));
        }
    }
    Ok(assemble(block.ctx(), monomial.rows(), s, &cells))
}

/// Composes a monomial representation with the order-`p` generator of `cp`,
/// rewritten on the `E`/`F` basis.
pub fn substitute_blocks<R: Ring>(
    monomial: &[(String, Matrix<CycInt>)],
    cp: &SymplecticRep<R>,
) -> Result<SymplecticRep<R>> {
    let [(_, block)] = cp.generators() else {
        return Err(Error::InvalidArgument("block substitution needs a single generator".into()));
    };
    let blocks = monomial
        .first()
        .map(|(_, m)| m.rows())
        .ok_or_else(|| Error::InvalidArgument("empty monomial representation".into()))?;
    let perm = ef_basis_permutation(blocks, cp.half());
    let gens = monomial
        .iter()
        .map(|(name, m)| Ok((name.clone(), substitute_entries(m, block)?.permute_basis(&perm))))
        .collect::<Result<Vec<_>>>()?;
    SymplecticRep::new(blocks * cp.size(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_symplectic;
    use crate::arith::Prime;
    use crate::constructions::closure::group_closure;
    use crate::constructions::extraspecial::extraspecial_monomial;
    use num_bigint::BigInt;

    type Zm = Matrix<BigInt>;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(ef_basis_permutation(1, 2), vec![0, 1, 2, 3]);
        assert_eq!(ef_basis_permutation(2, 1), vec![0, 2, 1, 3]);
        for (m, n) in [(1, 1), (2, 3), (4, 2)] {
            assert_eq!(transported_gram::<BigInt>((), m, n), standard_j((), m * n));
        }
    }

    #[test]
    fn index_one_is_identity() {
        let rho = SymplecticRep::new(2, vec![("s".into(), Zm::from_ints((), &[&[-1, 1], &[-1, 0]]))]).unwrap();
        let data = InductionData {
            index: 1,
            generators: vec![InducedGenerator { name: "s".into(), perm: vec![0], words: vec![vec![(0, 1)]] }],
        };
        assert_eq!(induce(&rho, &data).unwrap(), rho);
    }

    #[test]
    fn c2_in_c4() {
        let rho = SymplecticRep::new(2, vec![("s".into(), Zm::from_ints((), &[&[-1, 0], &[0, -1]]))]).unwrap();
        let data = InductionData {
            index: 2,
            generators: vec![InducedGenerator { name: "g".into(), perm: vec![1, 0], words: vec![vec![], vec![(0, 1)]] }],
        };
        let ind = induce(&rho, &data).unwrap();
        let g = ind.get("g").unwrap();
        assert!(is_symplectic(g).unwrap());
        assert_eq!(g.order(10).unwrap(), 4);
    }

    #[test]
    fn rejects_bad_data() {
        let rho = SymplecticRep::new(2, vec![("s".into(), Zm::identity((), 2))]).unwrap();
        let bad = InductionData {
            index: 2,
            generators: vec![InducedGenerator { name: "g".into(), perm: vec![0, 0], words: vec![vec![], vec![]] }],
        };
        assert!(induce(&rho, &bad).is_err());
        let bad = InductionData {
            index: 1,
            generators: vec![InducedGenerator { name: "g".into(), perm: vec![0], words: vec![vec![(3, 1)]] }],
        };
        assert!(induce(&rho, &bad).is_err());
    }

    #[test]
    fn one_by_one_zeta_reproduces_monomial() {
        let p = pr(3);
        let mono = extraspecial_monomial(p, 2, 32).unwrap();
        let zeta = Matrix::from_rows(p, vec![vec![CycInt::zeta(p)]]).unwrap();
        for (_, m) in &mono {
            assert_eq!(&substitute_entries(m, &zeta).unwrap(), m);
        }
    }

    #[test]
    fn e31_over_integers() {
        let p = pr(3);
        let mono = extraspecial_monomial(p, 1, 32).unwrap();
        let cp = SymplecticRep::new(2, vec![("c".into(), Zm::from_ints((), &[&[-1, 1], &[-1, 0]]))]).unwrap();
        let rep = substitute_blocks(&mono, &cp).unwrap();
        assert_eq!(rep.size(), 6);
        let r = group_closure(&rep.matrices(), 1000, Some(27)).unwrap();
        assert_eq!(r.order, 27);
    }

    #[test]
    fn rejects_non_monomial() {
        let p = pr(3);
        let m = Matrix::from_rows(p, vec![vec![CycInt::zeta(p), CycInt::zeta(p)], vec![CycInt::zeta(p), CycInt::zeta(p)]]).unwrap();
        let block = Zm::identity((), 2);
        assert!(substitute_entries(&m, &block).is_err());
        let m = Matrix::from_rows(p, vec![vec![CycInt::from_ints(p, &[2]).unwrap()]]).unwrap();
        assert!(substitute_entries(&m, &block).is_err());
    }
}
