//! Scalar abstraction: every numeric kernel in this crate is generic over the
//! floating-point type through the [`Real`] trait.

use core::fmt;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the library computes with.
///
/// The associated tolerances form a ladder: root finding is the tightest,
/// identity checks absorb root-finder error, and boundary classification
/// absorbs identity error. The `f64` ladder is 1e-12 / 1e-10 / 1e-9; the
/// `f32` ladder is scaled to what a 24-bit significand can deliver.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Absolute slack accepted when validating probabilities and unit sums.
    fn validation_slack() -> Self;

    /// Absolute tolerance on the argument in bracketed root finding.
    fn root_tol() -> Self;

    /// Tolerance when two algebraic routes to the same quantity are compared.
    fn identity_tol() -> Self;

    /// Tolerance for deciding that a diagram point sits exactly on a bound.
    fn boundary_tol() -> Self;

    /// Converts an `f64` constant into this scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable as a Real scalar")
    }

    fn half() -> Self {
        Self::of(0.5)
    }

    /// Lossy view used for error payloads and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn validation_slack() -> Self {
        1e-12
    }
    fn root_tol() -> Self {
        1e-12
    }
    fn identity_tol() -> Self {
        1e-10
    }
    fn boundary_tol() -> Self {
        1e-9
    }
}

impl Real for f32 {
    fn validation_slack() -> Self {
        1e-5
    }
    fn root_tol() -> Self {
        1e-6
    }
    fn identity_tol() -> Self {
        1e-4
    }
    fn boundary_tol() -> Self {
        1e-3
    }
}
