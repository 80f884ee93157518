//! Scalar abstraction for the numeric core.
//!
//! Everything in this crate is generic over [`Scalar`], an IEEE float with
//! the arithmetic and conversion traits the algorithms need. `f64` is the
//! precision the CLI and the test suites run at; `f32` works for rough
//! scans when widened tolerances are passed in.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar usable throughout the crate.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
}

/// Widens an f64-scale tolerance for lower-precision scalars: the given
/// baseline, or `eps_units` machine epsilons, whichever is larger.
pub(crate) fn scaled_tol<F: Scalar>(baseline: f64, eps_units: f64) -> F {
    let base = F::from(baseline).expect("tolerance representable");
    let eps = F::epsilon() * F::from(eps_units).expect("eps scale representable");
    if eps > base {
        eps
    } else {
        base
    }
}

/// Lossy view of a scalar for error messages.
pub(crate) fn to_f64<F: Scalar>(x: F) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
