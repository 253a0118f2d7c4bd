//! Configuration-model multigraphs, clique substitution, projection and
//! empirical statistics.

mod config;
mod graph;
mod project;
mod stats;
mod substitute;

pub use config::{configuration_match, sample_degree_sequence, DegreeSequence, SimplePolicy, DEFAULT_MAX_TRIES};
pub use graph::{EdgeKind, GraphInstance};
pub use project::{project, project_all, ProjectionResult};
pub use stats::{empirical_clustering, empirical_degree_hist, Clustering};
pub use substitute::clique_substitute;

use crate::dist::DegreeDistribution;
use crate::error::Result;
use crate::profile::CliqueProfile;
use crate::rng;

/// Degree sequence, matching and substitution from one seed.
pub fn generate(
    p: &DegreeDistribution<f64>,
    n: usize,
    gamma: &CliqueProfile<f64>,
    policy: SimplePolicy,
    seed: u64,
) -> Result<GraphInstance> {
    let seq = sample_degree_sequence(p, n, rng::derive(seed, 0))?;
    let g = configuration_match(&seq, rng::derive(seed, 1), policy)?;
    clique_substitute(&g, gamma, rng::derive(seed, 2))
}
