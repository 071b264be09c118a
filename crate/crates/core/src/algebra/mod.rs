//! Exact rings, matrices over them, and the symplectic predicate.

pub mod cyclotomic;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod ring;
pub mod symplectic;

pub use cyclotomic::{CycInt, CycNum};
pub use json::ExactMatrix;
pub use lattice::{multiplication_matrix, symplectic_basis, trace_form_gram, IntMatrix};
pub use matrix::Matrix;
pub use ring::{Ring, RingTag};
pub use symplectic::{gl_to_sp, is_symplectic, pad_symplectic, standard_j, SymplecticRep};
