//! Numerical core for the 3-dimensional BMS group
//! `B(2,1) = L²(P¹(ℝ), λ, ℝ) ⋊ SL(2,ℝ)`.
//!
//! The crate provides exact SL(2,ℝ) arithmetic and its fractional-linear
//! action on the projective circle, truncated-Fourier supertranslations with
//! the conformally weighted actions `T` and `T′`, the semidirect-product
//! group law, little-group classification inside SO(2), orbit models with
//! their invariant measures, and the induced unitary operators built from a
//! character on an orbit and a little-group irrep.
//!
//! Everything here is pure computation over immutable values; IO, file
//! formats and the CLI live in the companion `bms-cli` crate. The crate is
//! `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bms;
pub mod error;
pub mod fourier;
pub mod induced;
pub mod little;
mod math;
pub mod minkowski;
pub mod orbit;
pub mod sl2;

pub use bms::Bms21Element;
pub use error::Error;
pub use fourier::{ActionOutput, FourierFunctional};
pub use induced::{InducedRepSpec, SampledSection};
pub use little::{CharacterRep, LittleGroup, LittleGroupElement};
pub use minkowski::{Lorentz3Matrix, SymMatrix2, Vector21};
pub use orbit::{OrbitMeasure, OrbitPoint};
pub use sl2::{IwasawaCoords, ProjectivePoint, Sl2Matrix};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
