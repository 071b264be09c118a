//! Explicit finite subgroups of `Sp(2n, O)`.

pub mod affine;
pub mod closure;
pub mod cp;
pub mod extraspecial;
pub mod induce;

use num_bigint::BigInt;

use crate::algebra::{CycInt, ExactMatrix, SymplecticRep};
use crate::error::Result;
use crate::invariant::RingDescriptor;

pub use affine::{affine_gl, affine_relations_hold, affine_symplectic};
pub use closure::{group_closure, Closure, GroupReport};
pub use cp::{cp_generator, cp_size, cp_strategy, CpStrategy};
pub use extraspecial::extraspecial_monomial;
pub use induce::{induce, ef_basis_permutation, substitute_blocks, substitute_entries, transported_gram, InducedGenerator, InductionData, Word};

/// A symplectic representation over `Z` or over (a subring of) `Z[zeta_p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRep {
    Z(SymplecticRep<BigInt>),
    Zzeta(SymplecticRep<CycInt>),
}

macro_rules! on_rep {
    ($self:expr, $r:ident => $body:expr) => {
        match $self {
            AnyRep::Z($r) => $body,
            AnyRep::Zzeta($r) => $body,
        }
    };
}

impl AnyRep {
    pub fn size(&self) -> usize {
        on_rep!(self, r => r.size())
    }

    pub fn generator_names(&self) -> Vec<String> {
        on_rep!(self, r => r.generators().iter().map(|(n, _)| n.clone()).collect())
    }

    pub fn generators_json(&self) -> Vec<(String, ExactMatrix)> {
        match self {
            AnyRep::Z(r) => r.generators().iter().map(|(n, m)| (n.clone(), m.clone().into())).collect(),
            AnyRep::Zzeta(r) => r.generators().iter().map(|(n, m)| (n.clone(), m.clone().into())).collect(),
        }
    }

    pub fn closure_report(&self, cap: usize, expected: Option<u64>) -> Result<GroupReport> {
        on_rep!(self, r => group_closure(&r.matrices(), cap, expected))
    }

    pub fn padded(&self, n: usize) -> Result<AnyRep> {
        Ok(match self {
            AnyRep::Z(r) => AnyRep::Z(r.padded(n)?),
            AnyRep::Zzeta(r) => AnyRep::Zzeta(r.padded(n)?),
        })
    }

    /// Every generator has determinant 1.
    pub fn unimodular(&self) -> Result<bool> {
        on_rep!(self, r => {
            let mut ok = true;
            for m in r.matrices() {
                ok &= crate::algebra::Ring::is_one(&m.det()?);
            }
            Ok(ok)
        })
    }
}

/// `E(p, m)` acting on `O^(s p^m)` with `s = cp_size(rd)`: the monomial model
/// with `zeta` replaced by the order-`p` generator for `rd`.
pub fn extraspecial_symplectic(rd: &RingDescriptor, m: u32, size_cap: usize) -> Result<AnyRep> {
    let mono = extraspecial_monomial(rd.p, m, size_cap)?;
    Ok(match cp_generator(rd)? {
        AnyRep::Z(c) => AnyRep::Z(substitute_blocks(&mono, &c)?),
        AnyRep::Zzeta(c) => AnyRep::Zzeta(substitute_blocks(&mono, &c)?),
    })
}
