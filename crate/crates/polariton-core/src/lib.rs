//! Classical coupled-oscillator models of light-matter coupling.
//!
//! Energies are in eV, lengths in nm, charges in units of the elementary
//! charge and masses in units of the proton mass. Frequencies are quoted as
//! the corresponding photon energy ħω.

pub mod driven;
pub mod ensemble;
pub mod error;
pub mod fields;
pub mod hopfield;
pub mod material;
pub mod models;
pub mod quadratic;
pub mod units;

pub use error::{Error, Result};

/// Complex double used for amplitudes and lossy frequencies.
pub type C64 = num_complex::Complex64;

/// Cartesian vector in nm.
pub type Vec3 = nalgebra::Vector3<f64>;
