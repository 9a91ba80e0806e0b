//! Lattice geometry toolkit.
//!
//! The crate computes successive minima, canonical (Harder–Narasimhan)
//! filtrations and measured flags of Euclidean lattices, searches the
//! diagonal-group orbit of a unimodular lattice for stable and well-rounded
//! points with machine-checkable certificates, and analyses invariance
//! dimension and degree of convex H-polyhedra.
//!
//! Core math is generic over a [`scalar::Scalar`]: `f64` for general inputs,
//! [`scalar::Rational`] for exact arithmetic on rational bases. Concrete
//! aliases for the two working modes live at the crate root.

pub mod error;
pub mod exterior;
pub mod intlin;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{FloatScalar, Rational, Scalar};

/// k-vector over doubles.
pub type FloatKVector = exterior::KVector<f64>;
/// k-vector with exact rational coordinates.
pub type RationalKVector = exterior::KVector<Rational>;
/// Measured subspace over doubles.
pub type FloatMeasuredSubspace = exterior::MeasuredSubspace<f64>;
/// Measured subspace with exact rational volume data.
pub type RationalMeasuredSubspace = exterior::MeasuredSubspace<Rational>;
