//! Root systems and finite-dimensional representations of compact Lie
//! algebras, in exact arithmetic.
//!
//! Weights are stored as Dynkin labels. Circle factors (`U1`) carry a
//! single label equal to twice the charge.

mod oracle;
mod repsum;
mod root_system;
mod weight;

pub use oracle::{
    character_moments, character_oracle, check_tensor_moments, generic_point, product_moments, MAX_MOMENT,
};
pub use repsum::{tensor_decompose, tensor_sums, RepSum};
pub use root_system::{CartanType, Root, RootSystem};
pub use weight::{dominant_multiplicities, weight_multiplicities, weyl_orbit, Weight};
