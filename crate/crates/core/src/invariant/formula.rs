use serde::Serialize;

use super::ring_desc::RingDescriptor;
use crate::arith::Prime;
use crate::error::{Error, Result};

/// Largest power of `p` that is at most `num / den`.
pub fn psi(num: u64, den: u64, p: Prime) -> Result<u64> {
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    if num < den {
        return Err(Error::Precondition(format!("psi needs t >= 1, got {num}/{den}")));
    }
    let pp = p.get();
    let mut q = 1u64;
    // q * p * den <= num, in u128 to stay clear of overflow
    while (q as u128) * (pp as u128) * (den as u128) <= num as u128 {
        q *= pp;
    }
    Ok(q)
}

/// Whether the doubled-argument branch `psi(2n / l)` applies.
fn doubled_branch(rd: &RingDescriptor) -> bool {
    rd.l_is_even() || rd.p.get() == 2
}

/// Closed form for the Yagita invariant of `Sp(2n, O)`.
///
/// `2(p-1) psi(2n/l)` when `l` is even or `p = 2`, `2(p-1) psi(n/l)` otherwise.
/// Only defined for `n >= p - 1`.
pub fn theorem_value(n: u64, rd: &RingDescriptor) -> Result<u64> {
    let p = rd.p.get();
    if n < p - 1 {
        return Err(Error::Precondition(format!(
            "the closed formula requires n >= p - 1 (got n = {n}, p = {p})"
        )));
    }
    let t = if doubled_branch(rd) { 2 * n } else { n };
    Ok(2 * (p - 1) * psi(t, rd.l, rd.p)?)
}

/// `2(p-1) psi(N/l)`, the value for `GL(N, O)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GlValue {
    pub value: u64,
    /// `N < p - 1`: outside the range where the GL formula is known.
    pub advisory: bool,
}

pub fn gl_value(big_n: u64, rd: &RingDescriptor) -> Result<GlValue> {
    let p = rd.p.get();
    Ok(GlValue {
        value: 2 * (p - 1) * psi(big_n, rd.l, rd.p)?,
        advisory: big_n < p - 1,
    })
}
