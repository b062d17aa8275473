//! Exact numerics for spectral surfaces and moduli of `L`-valued Higgs sheaves
//! on a polarized surface.
//!
//! Everything is computed with arbitrary-precision integers and rationals; there
//! are no tolerances anywhere.

#![allow(clippy::needless_range_loop)]

pub mod criterion;
pub mod error;
pub mod exact;
pub mod hn;
pub mod lattice;
pub mod proj_bundle;
pub mod spectral;
pub mod surface;
pub mod surface_file;
pub mod verify;

pub use criterion::{c2_gbun, classify, n_points, solve_delta, FiberWitness, Regime, RegimeReport, Threshold};
pub use error::{Error, Result};
pub use exact::Rational;
pub use hn::{HNFactor, HNType};
pub use lattice::{NSLattice, NSVector, QNSVector};
pub use proj_bundle::YClass;
pub use spectral::{SpectralClass, SpectralCover};
pub use surface::{ChowClass, HiggsNumerics, SurfaceGeometry};
pub use surface_file::{load_surface, SurfaceFile};
