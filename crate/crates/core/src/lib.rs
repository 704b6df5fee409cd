//! Computational models of the 3-dimensional Einstein universe.
//!
//! Two equivalent models are provided: the null-cone model inside
//! `ℝ^{3,2}` ([`einstein`]) and the symplectic model built on the
//! Lagrangian Grassmannian of a 4-dimensional symplectic space
//! ([`symplectic`]). On top of these sit crooked surfaces ([`crooked`]),
//! their anti-de Sitter specialization ([`ads`]) and a seeded sampling
//! oracle ([`oracle`]) used to cross-check every predicate.
//!
//! Everything is generic over the scalar type; `f64` aliases are exported
//! at the crate root for convenience.

pub mod ads;
pub mod crooked;
pub mod einstein;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod symplectic;

pub use error::{Error, Result};
pub use scalar::{Scalar, Tolerance};

/// `f64` instantiations of the generic types.
pub mod f64 {
    pub type Vector = crate::linalg::Vector<f64>;
    pub type Matrix = crate::linalg::Matrix<f64>;
    pub type Tolerance = crate::Tolerance<f64>;
    pub type EinModel = crate::einstein::EinModel<f64>;
    pub type EinPoint = crate::einstein::EinPoint<f64>;
    pub type PhotonW = crate::einstein::PhotonW<f64>;
    pub type EinsteinTorus = crate::einstein::EinsteinTorus<f64>;
    pub type SympSpace = crate::symplectic::SympSpace<f64>;
    pub type Plane2 = crate::symplectic::Plane2<f64>;
    pub type Bivector = crate::symplectic::Bivector<f64>;
    pub type Map2 = crate::symplectic::Map2<f64>;
    pub type Splitting = crate::symplectic::Splitting<f64>;
    pub type LightlikeQuadrilateral = crate::crooked::LightlikeQuadrilateral<f64>;
    pub type CrookedSurface = crate::crooked::CrookedSurface<f64>;
    pub type AdsModel = crate::ads::AdsModel<f64>;
    pub type AdsPoint = crate::ads::AdsPoint<f64>;
    pub type AdsCrookedPlane = crate::ads::AdsCrookedPlane<f64>;
}

pub use self::f64::{
    AdsModel, CrookedSurface, EinModel, EinsteinTorus, LightlikeQuadrilateral, SympSpace,
};
