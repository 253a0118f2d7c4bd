//! Monte Carlo engine: percolation, threshold dynamics, seeding and replica
//! aggregation on [`GraphInstance`](crate::graphgen::GraphInstance)s.

mod census;
mod coupling;
mod monte_carlo;
mod percolation;
mod seeds;
mod threshold;
mod unionfind;

pub use census::internal_percolation_census;
pub use coupling::{coupling_check, coupling_run, Coupling};
pub use monte_carlo::{monte_carlo, write_summaries, ReplicaPlan, Summary, CSV_TAIL};
pub use percolation::{
    bond_percolate_components, components_of, retained_edges, run_diffusion, run_diffusion_direct, spread_with,
    Components,
};
pub use seeds::{SeedScheme, SeedSet};
pub use threshold::{
    assign_thresholds, pivotal_set, run_threshold, threshold_final_set, threshold_final_set_shuffled,
    ThresholdAssignment,
};
pub use unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub final_active_count: usize,
    /// Largest percolation component; zero for threshold runs.
    pub largest_component: usize,
    /// Active vertices by degree.
    pub per_degree_active: Vec<usize>,
    pub replica_seed: u64,
}

impl RunResult {
    pub fn fraction(&self, n: usize) -> f64 {
        self.final_active_count as f64 / n as f64
    }
}
