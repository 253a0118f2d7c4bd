//! Symmetric-threshold and contagion cascade analytics.

mod cascade;
mod rows;

pub use crate::profile::ActivationProfile;
pub use cascade::{
    activation_cascade_fraction, analyze_contagion, analyze_thresholds, cascade_condition, contagion_qc,
    contagion_zeta_l, pivotal_fraction, xi_solve, CascadeCondition, CascadeFixedPoint, ContagionReport,
    ContagionThreshold, XiSolution,
};
pub use rows::{threshold_prime, ThresholdDistribution};
