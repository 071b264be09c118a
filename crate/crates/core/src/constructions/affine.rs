//! The affine group `x -> ax + b` of the line over `F_p`, acting on the
//! augmentation kernel of `Z[F_p]`.

use num_bigint::BigInt;

use crate::algebra::{gl_to_sp, Matrix, SymplecticRep};
use crate::arith::Prime;
use crate::error::Result;

/// Action of the point permutation `sigma` of `0..p` on the kernel basis
/// `e_i - e_0`, `i = 1..p-1`.
fn kernel_action(p: u64, sigma: impl Fn(u64) -> u64) -> Matrix<BigInt> {
    let d = (p - 1) as usize;
    let mut m = Matrix::zeros((), d, d);
    let s0 = sigma(0);
    for i in 1..p {
        let col = (i - 1) as usize;
        let si = sigma(i);
        if si != 0 {
            m.set((si - 1) as usize, col, BigInt::from(1));
        }
        if s0 != 0 {
            let r = (s0 - 1) as usize;
            let v = m.get(r, col) - 1;
            m.set(r, col, v);
        }
    }
    m
}

/// `(a, b)` in `GL(p-1, Z)`: translation `x -> x + 1` and scaling by the
/// smallest primitive root.
pub fn affine_gl(p: Prime) -> (Matrix<BigInt>, Matrix<BigInt>) {
    let pp = p.get();
    let g = p.primitive_root();
    let a = kernel_action(pp, |x| (x + 1) % pp);
    let b = kernel_action(pp, |x| x * g % pp);
    (a, b)
}

/// The affine group inside `Sp(2(p-1), Z)` via `A -> diag(A, A^-T)`.
pub fn affine_symplectic(p: Prime) -> Result<SymplecticRep<BigInt>> {
    let (a, b) = affine_gl(p);
    let size = 2 * (p.get() as usize - 1);
    SymplecticRep::new(size, vec![("a".into(), gl_to_sp(&a)?), ("b".into(), gl_to_sp(&b)?)])
}

/// `a^p = 1`, `b^(p-1) = 1` and `b a b^-1 = a^g`.
pub fn affine_relations_hold(a: &Matrix<BigInt>, b: &Matrix<BigInt>, p: Prime) -> Result<bool> {
    let pp = p.get();
    let g = p.primitive_root();
    let lhs = b.mul(a)?.mul(&b.inverse()?)?;
    Ok(a.pow(pp)?.is_identity()
        && b.pow(pp - 1)?.is_identity()
        && lhs == a.pow(g)?)
}
