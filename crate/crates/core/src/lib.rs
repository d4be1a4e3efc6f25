//! Explicit conformal constructions on the unit disk (rotated Koebe maps,
//! slit-disk maps, two-slit compositions, disk automorphisms) and the
//! Bloch/Landau radius machinery built on top of them.
//!
//! The crate is split into three layers:
//!
//! - [`conformal`]: the maps themselves, their branch-correct inverses, a
//!   Newton inverter and an argument-principle winding count.
//! - [`geometry`]: planar domain models with membership, boundary distance
//!   and inscribed-disk queries.
//! - [`radius`]: Bloch seminorms, divergence profiles, certified radius
//!   lower bounds and the reports that show the radii are unbounded.

// `!(x < tol)` is used throughout so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod conformal;
pub mod error;
pub mod geometry;
pub mod radius;
pub mod settings;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use settings::NumericSettings;
