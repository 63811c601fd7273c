//! Stability domain of 4×4 real linear systems near 1:1 resonance.
//!
//! The resonant matrix `L = (0 I; -I 0)` carries a semisimple double pair of
//! eigenvalues `±i`. Every matrix near `L` is similar to a member of the
//! eight-parameter centralizer unfolding, and after quotienting by a compact
//! `SO(3)` action to a member of a five-parameter reduced unfolding. The
//! eigenvalue configuration of the homogeneous reduced unfolding is constant
//! on rays and on the strata of a Whitney stratification of the unit 3-sphere
//! in `(ν₁, ν₂, ν₃, ν₄)`; this crate computes, classifies and verifies that
//! stratification.
//!
//! Modules, bottom up:
//!
//! * [`linalg`]: 4×4 / 2×2 matrices, characteristic polynomials, a quartic
//!   root finder, numeric rank, closed-form one-parameter subgroups.
//! * [`algebra`]: the basis `M₁..M₈, P₁..P₈`, the unfoldings, the adjoint
//!   action of the rotation subgroup and reduction to canonical coordinates.
//! * [`spectra`]: spectra and eigenvalue-configuration codes.
//! * [`critical`]: the polynomial maps `ψ, f, φ`, the critical function `F`,
//!   its restriction to the sphere, the conoid parameterization and local
//!   normal forms at the singular points.
//! * [`strata`]: the 20 strata, point classification, flood fill of the
//!   sphere, the incidence graph, stability reports and surface meshes.
//!
//! Ring-level code is generic over [`Scalar`] so the exact identities can be
//! checked in integer or rational arithmetic; see the aliases below.

pub mod algebra;
pub mod critical;
pub mod error;
pub mod linalg;
pub mod scalar;
pub mod spectra;
pub mod strata;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

pub use num_complex::Complex;
pub use num_rational::Rational64;

/// Default imaginary-part scale `ν₅` of the homogeneous reduced unfolding.
///
/// On the unit sphere the traceless part of `ℋᵣ` moves the eigenvalues by at
/// most 1 in the imaginary direction, so `ν₅` must exceed 1 for every point
/// of the sphere to stay in the neighbourhood of `L` (no real or zero
/// eigenvalues). At `ν₅ = 1` the whole circle `ν₁ = ν₂ = 0` has a double
/// zero eigenvalue.
pub const DEFAULT_NU5: f64 = 2.0;

pub type Mat4f = linalg::Mat4<f64>;
pub type Mat4q = linalg::Mat4<Rational64>;
pub type Mat4i = linalg::Mat4<i64>;
pub type Mat2f = linalg::Mat2<f64>;
pub type PolyCoeffsf = linalg::PolyCoeffs<f64>;
pub type PolyCoeffsq = linalg::PolyCoeffs<Rational64>;
pub type RootSetf = linalg::RootSet<f64>;
pub type CentralizerCoordsf = algebra::CentralizerCoords<f64>;
pub type ReducedCoordsf = algebra::ReducedCoords<f64>;
pub type ReducedCoordsq = algebra::ReducedCoords<Rational64>;
pub type BasisSetf = algebra::BasisSet<f64>;
pub type Spectrumf = spectra::Spectrum<f64>;
