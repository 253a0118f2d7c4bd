use crate::error::{Error, Result};
use crate::graphgen::{project_all, GraphInstance};
use crate::profile::CliqueProfile;
use crate::thresh::{threshold_prime, ThresholdDistribution};

use super::seeds::SeedSet;
use super::threshold::{assign_thresholds, threshold_final_set, ThresholdAssignment};

/// Outcome of one coupled run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coupling {
    pub equal: bool,
    /// Active parents on the clique graph, after projection.
    pub projected_active: Vec<usize>,
    /// Active parents of the coupled run on the projected graph.
    pub coupled_active: Vec<usize>,
}

/// Runs the threshold epidemic from `u` on `g` and the coupled
/// epidemic on the projected graph, then compares the active sets.
///
/// Thresholds are drawn per parent from `t`; the parent of `u` is forced to
/// zero. On the projected graph a clique parent keeps threshold zero if it
/// had it and otherwise gets its degree, so it can only be seeded; other
/// vertices keep their threshold. The coupled thresholds must be in the
/// support of the transformed law for `gamma`.
pub fn coupling_run(
    g: &GraphInstance,
    t: &ThresholdDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    u: usize,
    seed: u64,
) -> Result<Coupling> {
    if u >= g.n_vertices() {
        return Err(Error::param(format!("seed vertex {u} outside graph")));
    }
    let mut k = assign_thresholds(g, t, seed)?;
    let pu = g.parent(u);
    for v in 0..g.n_vertices() {
        if g.parent(v) == pu {
            k.k[v] = 0;
        }
    }
    let active = threshold_final_set(g, &k, &SeedSet::from_vertices(vec![u]));

    let proj = project_all(g)?;
    let h = &proj.graph;
    let mut kp = vec![0usize; h.n_vertices()];
    let mut is_clique = vec![false; h.n_vertices()];
    for v in 0..g.n_vertices() {
        let j = proj.vertex_map[v].expect("full projection maps every vertex");
        is_clique[j] |= g.is_clique_member(v);
        kp[j] = k.k[v];
    }
    let tp = threshold_prime(t, gamma)?;
    for j in 0..h.n_vertices() {
        let s = h.degree(j);
        if is_clique[j] && kp[j] != 0 {
            kp[j] = s;
        }
        // the seed's parent is conditioned on threshold zero
        if h.parent(j) != pu && tp.t(s, kp[j].min(s)) <= 0.0 {
            return Err(Error::Internal(format!("coupled threshold {} has no mass in the transformed row {s}", kp[j])));
        }
    }
    let seed_j = proj.vertex_map[u].unwrap();
    let coupled = threshold_final_set(h, &ThresholdAssignment { k: kp }, &SeedSet::from_vertices(vec![seed_j]));

    let mut projected_active: Vec<usize> = (0..g.n_vertices()).filter(|&v| active[v]).map(|v| g.parent(v)).collect();
    projected_active.sort_unstable();
    projected_active.dedup();
    let coupled_active: Vec<usize> = (0..h.n_vertices()).filter(|&j| coupled[j]).map(|j| h.parent(j)).collect();
    Ok(Coupling { equal: projected_active == coupled_active, projected_active, coupled_active })
}

/// Whether the coupled run reproduces the projected active set exactly.
pub fn coupling_check(
    g: &GraphInstance,
    t: &ThresholdDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    u: usize,
    seed: u64,
) -> Result<bool> {
    coupling_run(g, t, gamma, u, seed).map(|c| c.equal)
}
