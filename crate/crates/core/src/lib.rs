//! Sharp numerical-range sector angles for non-symmetric elliptic forms.
//!
//! The numerical range of `μ`-weighted divergence-form operators lies in the
//! sector of half-angle `κ = arctan √((M/m)² − 1)`, strictly smaller than the
//! classical `arctan(M/m)`. This crate computes those angles, assembles P1
//! discretizations on rectangles, traces numerical ranges, and checks the
//! resolvent and functional-calculus bounds that follow from the angle.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below fix
//! `f64`, which the tolerances are calibrated for.

pub mod elliptic;
pub mod error;
pub mod fov;
pub mod io;
pub mod numerics;
pub mod random;
pub mod resolvent;
pub mod rng;
pub mod scalar;
pub mod sector;
pub mod selftest;

pub use error::{Error, Result};
pub use scalar::Real;

pub type C64 = num_complex::Complex<f64>;
pub type ComplexMatrix = numerics::Matrix<f64>;
pub type ComplexVector = numerics::Vector<f64>;
pub type SectorAngles = sector::SectorAngles<f64>;
pub type FovBoundary = fov::FovBoundary<f64>;
pub type Grid = elliptic::Grid<f64>;
pub type CoefficientField = elliptic::CoefficientField<f64>;
pub type BoundarySpec = elliptic::BoundarySpec<f64>;
pub type EllipticProblem = elliptic::EllipticProblem<f64>;
pub type AssembledForm = elliptic::AssembledForm<f64>;
pub type ResolventScan = resolvent::ResolventScan<f64>;
