//! Exact computational kernel for real Clifford algebras.
//!
//! Everything is computed over arbitrary-precision rationals, so every
//! identity in this crate is checked by equality rather than tolerance.

pub mod embeddings;
pub mod error;
pub mod groups;
pub mod json;
pub mod linalg;
pub mod multivector;
pub mod parser;
pub mod sampling;
pub mod signature;
pub mod spinors;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::RationalMatrix;
pub use multivector::{CenterElement, Multivector};
pub use signature::{blade_product, Blade, Signature};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
