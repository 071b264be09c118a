//! The closed formula, weight multisets with their Chern-class bounds, and
//! the upper/lower verification drivers.

pub mod formula;
pub mod ring_desc;
pub mod verify;
pub mod weights;

pub use formula::{gl_value, psi, theorem_value, GlValue};
pub use ring_desc::{unit_cosets, unit_subgroup, Preset, RingDescriptor};
pub use verify::{verify_lower, verify_upper};
pub use weights::{
    enumerate_multisets, lth_powers, rational_chern_check, ChernBound, Multisets, RationalChernVerdict, WeightMultiset,
};
