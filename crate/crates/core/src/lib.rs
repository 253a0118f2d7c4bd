//! Random graphs with tunable clustering built by clique substitution in the
//! configuration model, with diffusion and threshold-cascade analytics and a
//! Monte Carlo engine to check them.
//!
//! Analytic code is generic over [`Real`](scalar::Real); the aliases below fix
//! the common scalar choices.

pub mod dist;
pub mod error;
pub mod experiments;
pub mod graphgen;
pub mod model;
pub mod perc;
pub mod profile;
pub mod rng;
pub mod roots;
pub mod scalar;
pub mod sim;
pub mod thresh;
pub mod tuner;

pub use error::{Error, Result};
pub use profile::{ActivationProfile, CliqueProfile};

use num_rational::BigRational;

pub type DegreeDistribution64 = dist::DegreeDistribution<f64>;
pub type DegreeDistribution32 = dist::DegreeDistribution<f32>;
pub type CliqueProfile64 = profile::CliqueProfile<f64>;
pub type CliqueProfile32 = profile::CliqueProfile<f32>;
pub type ThresholdDistribution64 = thresh::ThresholdDistribution<f64>;
pub type ThresholdDistribution32 = thresh::ThresholdDistribution<f32>;
pub type GilbertTable64 = perc::GilbertTable<f64>;
pub type GilbertTable32 = perc::GilbertTable<f32>;
/// Gilbert table over exact rationals.
pub type ExactGilbertTable = perc::GilbertTable<BigRational>;
