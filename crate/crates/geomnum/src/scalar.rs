//! Scalar abstraction shared by every numeric routine in this crate.
//!
//! All core geometry is written once, generically, and instantiated at two
//! scalar types: `f64` for general inputs (comparisons carry an explicit
//! tolerance, default 1e-9) and [`Rational`] for lattices with rational
//! bases, where covolumes, Gram determinants and Plücker coordinates are
//! exact and every threshold test uses tolerance zero.
//!
//! Square roots are deliberately absent from the trait: the algorithms work
//! on squared lengths and squared covolumes so the exact path never leaves
//! the field. `f32` is supported too, with a coarser default tolerance.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Exact rational scalar used by the exact arithmetic path.
pub type Rational = BigRational;

/// Field scalar the core is generic over.
pub trait Scalar:
    Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Clone
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic is exact and tolerances degenerate to zero.
    const EXACT: bool;

    /// Default comparison tolerance for threshold predicates.
    fn default_tol() -> Self;

    /// Lossless for `f64`; exact dyadic rational for [`Rational`].
    fn from_f64_lossless(v: f64) -> Self;

    /// Nearest-double approximation, for reporting and logs.
    fn approx(&self) -> f64;

    /// Round to the nearest integer (ties away from zero).
    fn round_i64(&self) -> i64;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer embeds into scalar")
    }
}

/// Scalars that additionally support transcendental functions (`exp`, `ln`).
///
/// The diagonal-group action multiplies coordinates by `exp(x_i)`, so
/// everything touching the orbit lives over a float scalar.
pub trait FloatScalar: Scalar + num_traits::Float {}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn default_tol() -> Self {
        1e-9
    }

    fn from_f64_lossless(v: f64) -> Self {
        v
    }

    fn approx(&self) -> f64 {
        *self
    }

    fn round_i64(&self) -> i64 {
        self.round() as i64
    }
}

impl FloatScalar for f64 {}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn default_tol() -> Self {
        1e-4
    }

    fn from_f64_lossless(v: f64) -> Self {
        v as f32
    }

    fn approx(&self) -> f64 {
        f64::from(*self)
    }

    fn round_i64(&self) -> i64 {
        self.round() as i64
    }
}

impl FloatScalar for f32 {}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn default_tol() -> Self {
        Self::zero()
    }

    fn from_f64_lossless(v: f64) -> Self {
        Rational::from_float(v).expect("finite float converts to rational")
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn round_i64(&self) -> i64 {
        self.round()
            .to_integer()
            .to_i64()
            .expect("rounded rational fits in i64")
    }
}

use num_traits::Zero;

/// `|a - b| <= tol`, the uniform comparison used by threshold predicates.
pub fn approx_eq<S: Scalar>(a: &S, b: &S, tol: &S) -> bool {
    (a.clone() - b.clone()).abs() <= *tol
}
