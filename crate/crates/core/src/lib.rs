//! Finite-dimensional fuzzy circle and fuzzy sphere models.
//!
//! The crate builds the operator algebras as dense complex matrices, checks
//! their defining relations, and measures localization, resolution of the
//! identity and uncertainty relations on the distinguished state families.

pub mod circle;
pub mod error;
pub mod numerics;
pub mod specfun;
pub mod sphere;
pub mod su2;

mod kpolicy;
mod report;

pub use error::{Error, Result};
pub use kpolicy::{k_floor, KPolicy};
pub use report::ResolutionReport;
pub use num_complex::Complex64;

/// Named residuals (or slacks) keyed by relation name.
pub type ResidualMap = std::collections::BTreeMap<String, f64>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
