//! Exact characteristic-class calculus and weight-lattice representation
//! theory for the spin-3/2 (Rarita-Schwinger) bundle.
//!
//! The crate is `no_std` and needs only `alloc`. Every quantity is an exact
//! rational or integer; nothing here touches floating point.
//!
//! Layout:
//!
//! * [`arith`]: rationals, truncated multivariate polynomial rings, power
//!   series division.
//! * [`charclass`]: Chern profiles, Pontryagin numbers, multiplicative genera
//!   (Â, L, Todd, χ_y) and the spin-3/2 index.
//! * [`ci`]: complete intersections `X_n(d_1, …, d_r)` and their invariants.
//! * [`lie`]: root systems, Weyl dimension, Casimir values, Freudenthal
//!   multiplicities and Klimyk tensor products.
//! * [`holonomy`]: spinor data for each holonomy group, the spin-3/2
//!   decomposition, parallel-field counts and kernel/index formulas.
#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod arith;
pub mod charclass;
pub mod ci;
pub mod error;
pub mod holonomy;
pub mod lie;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
