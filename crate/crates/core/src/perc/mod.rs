//! Diffusion (bond percolation) analytics on the clique-substituted graph.

mod derived;
mod diffusion;
mod gilbert;

pub use derived::DerivedLaw;
pub use diffusion::{
    diffusion_activation_fraction, diffusion_giant_fraction, diffusion_pi_c, diffusion_report_with,
    diffusion_zeta, diffusion_zeta_two_stage, offspring_mean, phi_grid, pi_c_moment_route,
    pi_c_unclustered, ActivationReport, DiffusionReport, FixedPoint, PiC, CRITICAL_BAND,
};
pub use gilbert::{k_mixture, GilbertTable};
