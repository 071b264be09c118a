//! Monomial models of the extraspecial groups `E(p, m)`.

use crate::algebra::{CycInt, Matrix, Ring};
use crate::arith::Prime;
use crate::error::{Error, Result};

/// Digit `k` (most significant first) of `i` in base `p` with `m` digits.
fn digit(i: usize, k: u32, p: usize, m: u32) -> usize {
    i / p.pow(m - 1 - k) % p
}

/// Generators `X_k`, `Z_k` (`k = 1..m`) of `E(p, m)` on `Z[zeta_p]^(p^m)`.
///
/// `X_k` shifts the `k`-th tensor factor (`e_j -> e_{j-1}`), `Z_k` scales
/// `e_j` by `zeta^j` there, so `X_k Z_k X_k^-1 Z_k^-1 = zeta`. For `p = 2`
/// this is the dihedral model since `zeta = -1`.
pub fn extraspecial_monomial(p: Prime, m: u32, size_cap: usize) -> Result<Vec<(String, Matrix<CycInt>)>> {
    if m == 0 {
        return Err(Error::InvalidArgument("E(p, m) needs m >= 1".into()));
    }
    let pp = p.get() as usize;
    let size = pp
        .checked_pow(m)
        .filter(|&s| s <= size_cap)
        .ok_or(Error::CapExceeded { what: "extraspecial size", limit: size_cap })?;
    let same_elsewhere = |i: usize, j: usize, k: u32| (0..m).all(|t| t == k || digit(i, t, pp, m) == digit(j, t, pp, m));
    let mut gens = Vec::with_capacity(2 * m as usize);
    for k in 0..m {
        let x = Matrix::from_fn(p, size, size, |i, j| {
            let shifted = digit(j, k, pp, m) == (digit(i, k, pp, m) + 1) % pp;
            if shifted && same_elsewhere(i, j, k) {
                CycInt::one(p)
            } else {
                CycInt::zero(p)
            }
        });
        let z = Matrix::from_fn(p, size, size, |i, j| {
            if i == j {
                CycInt::zeta_pow(p, digit(i, k, pp, m) as i64)
            } else {
                CycInt::zero(p)
            }
        });
        gens.push((format!("X{}", k + 1), x));
        gens.push((format!("Z{}", k + 1), z));
    }
    Ok(gens)
}
