//! Exact evaluation and desk-scale verification of the Yagita invariant of
//! integral symplectic groups `Sp(2n, O)`.
//!
//! * [`fp_poly`]: polynomials over F_p and the `n = m p^q` period shape.
//! * [`algebra`]: Z, Q, Z[zeta_p], Q(zeta_p), matrices, symplectic forms.
//! * [`constructions`]: explicit finite subgroups of `Sp(2n, O)`.
//! * [`invariant`]: the closed formula, Chern-class upper bounds and the
//!   upper/lower verification drivers.

pub mod algebra;
pub mod arith;
pub mod cli;

pub mod config;
pub mod constructions;
pub mod error;
pub mod fp_poly;
pub mod invariant;
pub mod propcheck;
pub mod report;

pub use arith::Prime;
pub use error::{Error, Result};
pub use fp_poly::{FpElem, FpPoly, PeriodDecomposition, PeriodVerdict};
