//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! All algebra runs over `Complex<T>` with `T: Real`. Real-field sequences
//! store zero imaginary parts and take the same code path.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Floating-point type the library is generic over (`f32`, `f64`).
///
/// Besides the arithmetic bounds it carries the default tolerances for
/// the type, since a threshold like `1e-9` is meaningless in `f32`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Default + Debug + Display + Send + Sync + 'static
{
    /// Accepted deviation of `‖f‖` from 1 for a "unit" vector.
    fn unit_norm_tol() -> Self;
    /// Accepted negative excursion of the smallest Gram eigenvalue.
    fn psd_tol() -> Self;
    /// Elementwise Hermitian-symmetry tolerance for eigensolver input.
    fn symmetry_tol() -> Self;
    /// Absolute slack for within-block row-sum guarantees.
    fn sum_tol() -> Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in every Real")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn unit_norm_tol() -> Self {
        1e-9
    }
    fn psd_tol() -> Self {
        1e-10
    }
    fn symmetry_tol() -> Self {
        1e-12
    }
    fn sum_tol() -> Self {
        1e-9
    }
}

impl Real for f32 {
    fn unit_norm_tol() -> Self {
        1e-5
    }
    fn psd_tol() -> Self {
        1e-4
    }
    fn symmetry_tol() -> Self {
        1e-6
    }
    fn sum_tol() -> Self {
        1e-4
    }
}

/// Ground field of the Hilbert space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

impl std::str::FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" => Ok(Field::Real),
            "complex" => Ok(Field::Complex),
            other => Err(format!("unknown field `{other}` (expected real|complex)")),
        }
    }
}

impl Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `|z|²` without the square root.
#[inline]
pub(crate) fn abs2<T: Real>(z: Complex<T>) -> T {
    z.re * z.re + z.im * z.im
}
