//! Scalar abstraction shared by every model in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar type the geometry is computed over.
///
/// Implemented for `f32` and `f64`. Each implementation supplies the default
/// tolerances that are meaningful at its precision.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Default tolerance for algebraic identities.
    const EPS_ALG: f64;
    /// Default tolerance for rank and zero-eigenvalue decisions.
    const EPS_RANK: f64;
    /// Default tolerance for sampled-geometry comparisons.
    const EPS_GEO: f64;

    /// Converts an `f64` literal. Never fails for the implemented types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EPS_ALG: f64 = 1e-9;
    const EPS_RANK: f64 = 1e-9;
    const EPS_GEO: f64 = 1e-6;
}

impl Scalar for f32 {
    const EPS_ALG: f64 = 1e-4;
    const EPS_RANK: f64 = 1e-4;
    const EPS_GEO: f64 = 1e-3;
}

/// Tolerance set used by every predicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    /// Algebraic identities (products vanishing, unit norms, margins).
    pub alg: T,
    /// Rank and zero-eigenvalue decisions.
    pub rank: T,
    /// Monte Carlo / sampled geometry.
    pub geo: T,
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            alg: T::lit(T::EPS_ALG),
            rank: T::lit(T::EPS_RANK),
            geo: T::lit(T::EPS_GEO),
        }
    }
}

impl<T: Scalar> Tolerance<T> {
    pub fn with_alg(mut self, alg: T) -> Self {
        self.alg = alg;
        self
    }

    pub fn with_geo(mut self, geo: T) -> Self {
        self.geo = geo;
        self
    }
}
