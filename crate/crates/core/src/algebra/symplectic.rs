//! The standard alternating form and matrices preserving it.

use super::matrix::Matrix;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `J = [[0, I_n], [-I_n, 0]]`, of size `2n`.
pub fn standard_j<R: Ring>(ctx: R::Ctx, n: usize) -> Matrix<R> {
    Matrix::from_fn(ctx, 2 * n, 2 * n, |i, j| {
        if j == i + n {
            R::one(ctx)
        } else if i == j + n {
            R::one(ctx).neg()
        } else {
            R::zero(ctx)
        }
    })
}

/// `M^T J M == J` for the standard `J` of matching size.
pub fn is_symplectic<R: Ring>(m: &Matrix<R>) -> Result<bool> {
    if !m.is_square() || m.rows() % 2 != 0 {
        return Err(Error::Shape(format!(
            "symplectic test needs an even square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let j = standard_j::<R>(m.ctx(), m.rows() / 2);
    Ok(m.transpose().mul(&j)?.mul(m)? == j)
}

/// `A -> diag(A, (A^T)^{-1})`, the inclusion GL(n) -> Sp(2n).
pub fn gl_to_sp<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let inv_t = a.transpose().inverse()?;
    Ok(Matrix::block_diag(a.ctx(), &[a.clone(), inv_t]))
}

/// Embeds `Sp(2k)` into `Sp(2n)` keeping the e/f halves aligned:
/// the `k x k` blocks land at rows/cols `0..k` and `n..n+k`, identity elsewhere.
pub fn pad_symplectic<R: Ring>(m: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    if !m.is_square() || m.rows() % 2 != 0 {
        return Err(Error::Shape("padding needs an even square matrix".into()));
    }
    let k = m.rows() / 2;
    if k > n {
        return Err(Error::Shape(format!("cannot pad Sp({}) into Sp({})", 2 * k, 2 * n)));
    }
    let place = |i: usize| if i < k { i } else { n + (i - k) };
    let mut out = Matrix::identity(m.ctx(), 2 * n);
    for i in 0..2 * k {
        for j in 0..2 * k {
            out.set(place(i), place(j), m.get(i, j).clone());
        }
    }
    Ok(out)
}

/// Named generators acting on a free module of rank `2n`, each preserving
/// the standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticRep<R: Ring> {
    size: usize,
    generators: Vec<(String, Matrix<R>)>,
}

impl<R: Ring> SymplecticRep<R> {
    /// Checks every generator for shape, invertibility and `G^T J G = J`.
    pub fn new(size: usize, generators: Vec<(String, Matrix<R>)>) -> Result<Self> {
        if size == 0 || size % 2 != 0 {
            return Err(Error::Shape(format!("symplectic size must be even and positive, got {size}")));
        }
        for (name, g) in &generators {
            if g.rows() != size || g.cols() != size {
                return Err(Error::Shape(format!("generator {name} is {}x{}, expected {size}", g.rows(), g.cols())));
            }
            if !is_symplectic(g)? {
                return Err(Error::InvalidArgument(format!("generator {name} is not symplectic")));
            }
        }
        Ok(SymplecticRep { size, generators })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn half(&self) -> usize {
        self.size / 2
    }

    pub fn generators(&self) -> &[(String, Matrix<R>)] {
        &self.generators
    }

    pub fn matrices(&self) -> Vec<Matrix<R>> {
        self.generators.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Matrix<R>> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn form(&self) -> Matrix<R> {
        let ctx = self.generators.first().map(|(_, m)| m.ctx());
        match ctx {
            Some(ctx) => standard_j(ctx, self.half()),
            None => panic!("form() on an empty representation"),
        }
    }

    /// Same generators padded into `Sp(2n)`.
    pub fn padded(&self, n: usize) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|(name, m)| Ok((name.clone(), pad_symplectic(m, n)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(2 * n, gens)
    }
}
