//! Dense matrices over an exact [`Ring`].

use std::fmt;

use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R: Ring> {
    ctx: R::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ctx: R::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            ctx,
            rows,
            cols,
            data: vec![R::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: R::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one(ctx);
        }
        m
    }

    pub fn from_fn(ctx: R::Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { ctx, rows, cols, data }
    }

    pub fn from_rows(ctx: R::Ctx, rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        if rows.iter().flatten().any(|x| x.ctx() != ctx) {
            return Err(Error::Shape("entries from different rings".into()));
        }
        Ok(Matrix {
            ctx,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-literal convenience constructor.
    pub fn from_ints(ctx: R::Ctx, rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged rows");
        Self::from_fn(ctx, rows.len(), c, |i, j| R::from_int(ctx, rows[i][j]))
    }

    pub fn ctx(&self) -> R::Ctx {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        self.map(self.ctx, R::neg)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Shape(format!(
                "add {}x{} + {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Matrix {
            ctx: self.ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "mul {}x{} * {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.ctx, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::Shape("matrix-vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn pow(&self, mut k: u64) -> Result<Self> {
        self.require_square("pow")?;
        let mut acc = Self::identity(self.ctx, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(idx, x)| {
                if idx / self.cols == idx % self.cols {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Shape(format!("{what} needs a square matrix, got {}x{}", self.rows, self.cols)))
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<R> {
        self.require_square("det")?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one(self.ctx));
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = R::one(self.ctx);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        negate = !negate;
                    }
                    None => return Ok(R::zero(self.ctx)),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let lead = m.get(i, k).clone();
                for j in k + 1..n {
                    let v = pivot.mul(m.get(i, j)).sub(&lead.mul(m.get(k, j)));
                    let v = v.try_div(&prev).expect("Bareiss division is exact");
                    m.set(i, j, v);
                }
                m.set(i, k, R::zero(self.ctx));
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Inverse over the matrix's own ring.
    ///
    /// Fraction-free Gauss-Jordan on `[A | I]` yields `[d I | B]` with
    /// `A^{-1} = B / d`; every entry of `B` must be divisible by `d` in the ring.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        let n = self.rows;
        let ctx = self.ctx;
        let w = 2 * n;
        let mut m = Matrix::from_fn(ctx, n, w, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                R::one(ctx)
            } else {
                R::zero(ctx)
            }
        });
        let mut prev = R::one(ctx);
        for k in 0..n {
            if m.get(k, k).is_zero() {
                let i = (k + 1..n)
                    .find(|&i| !m.get(i, k).is_zero())
                    .ok_or(Error::NotInvertible)?;
                m.swap_rows(k, i);
            }
            let pivot = m.get(k, k).clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let lead = m.get(i, k).clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let v = pivot.mul(m.get(i, j)).sub(&lead.mul(m.get(k, j)));
                    let v = v.try_div(&prev).expect("fraction-free division is exact");
                    m.set(i, j, v);
                }
                m.set(i, k, R::zero(ctx));
            }
            prev = pivot;
        }
        let d = prev;
        let mut out = Self::zeros(ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                let q = m.get(i, n + j).try_div(&d).ok_or(Error::NotInvertible)?;
                out.set(i, j, q);
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(X I - A)`, ascending coefficients,
    /// by the division-free Berkowitz algorithm.
    pub fn char_poly(&self) -> Result<Vec<R>> {
        self.require_square("char_poly")?;
        let n = self.rows;
        let ctx = self.ctx;
        // highest-degree first while building
        let mut poly = vec![R::one(ctx)];
        for k in (0..n).rev() {
            let m = n - k - 1;
            let mut t = Vec::with_capacity(m + 2);
            t.push(R::one(ctx));
            t.push(self.get(k, k).neg());
            let mut w: Vec<R> = (k + 1..n).map(|i| self.get(i, k).clone()).collect();
            for step in 0..m {
                let rw = (0..m).fold(R::zero(ctx), |acc, j| acc.add(&self.get(k, k + 1 + j).mul(&w[j])));
                t.push(rw.neg());
                if step + 1 < m {
                    w = (0..m)
                        .map(|i| {
                            (0..m).fold(R::zero(ctx), |acc, j| {
                                acc.add(&self.get(k + 1 + i, k + 1 + j).mul(&w[j]))
                            })
                        })
                        .collect();
                }
            }
            let next = (0..m + 2)
                .map(|i| {
                    (0..=i.min(m)).fold(R::zero(ctx), |acc, j| acc.add(&t[i - j].mul(&poly[j])))
                })
                .collect();
            poly = next;
        }
        poly.reverse();
        Ok(poly)
    }

    /// Smallest `k >= 1` with `A^k = I`, searching up to `cap`.
    pub fn order(&self, cap: u64) -> Result<u64> {
        self.require_square("order")?;
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.mul(self)?;
        }
        Err(Error::CapExceeded {
            what: "matrix order",
            limit: cap as usize,
        })
    }

    /// Copy of rows `r0..r0+h`, columns `c0..c0+w`.
    pub fn submatrix(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        Self::from_fn(self.ctx, h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block_diag(ctx: R::Ctx, blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ctx, n, m);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// `P^T A P` for the permutation matrix with `P e_k = e_{perm[k]}`,
    /// i.e. entry `(i, j)` of the result is `A[perm[i]][perm[j]]`.
    pub fn permute_basis(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.ctx, perm.len(), perm.len(), |i, j| {
            self.get(perm[i], perm[j]).clone()
        })
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}
