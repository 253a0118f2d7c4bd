use std::collections::VecDeque;

use rand::Rng as _;

use crate::graphgen::GraphInstance;
use crate::rng;

use super::seeds::SeedSet;
use super::unionfind::UnionFind;
use super::RunResult;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub largest: usize,
    pub second: usize,
    /// Dense component label per vertex.
    pub component_of: Vec<usize>,
    pub sizes: Vec<usize>,
}

/// Keeps each edge with probability `pi`, edges drawn in id order.
pub fn retained_edges(g: &GraphInstance, pi: f64, seed: u64) -> Vec<bool> {
    let mut rng = rng::rng(seed);
    (0..g.n_edges()).map(|_| rng.random::<f64>() < pi).collect()
}

pub fn components_of(g: &GraphInstance, keep: &[bool]) -> Components {
    let mut uf = UnionFind::new(g.n_vertices());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if keep[e] {
            uf.union(u, v);
        }
    }
    let (component_of, sizes) = uf.labels();
    let mut top = [0usize; 2];
    for &s in &sizes {
        if s > top[0] {
            top = [s, top[0]];
        } else if s > top[1] {
            top[1] = s;
        }
    }
    Components { largest: top[0], second: top[1], component_of, sizes }
}

/// Components after bond percolation at `pi`.
pub fn bond_percolate_components(g: &GraphInstance, pi: f64, seed: u64) -> Components {
    components_of(g, &retained_edges(g, pi, seed))
}

fn result_from(g: &GraphInstance, active: &[bool], largest: usize, seed: u64) -> RunResult {
    let mut per_degree = vec![0usize; g.max_degree() + 1];
    for v in (0..g.n_vertices()).filter(|&v| active[v]) {
        per_degree[g.degree(v)] += 1;
    }
    RunResult {
        final_active_count: per_degree.iter().sum(),
        largest_component: largest,
        per_degree_active: per_degree,
        replica_seed: seed,
    }
}

/// Final state of the diffusion: every percolation component that meets the
/// seed set becomes active.
pub fn run_diffusion(g: &GraphInstance, pi: f64, seeds: &SeedSet, seed: u64) -> RunResult {
    let comps = bond_percolate_components(g, pi, seed);
    let mut hit = vec![false; comps.sizes.len()];
    for &v in seeds.active() {
        hit[comps.component_of[v]] = true;
    }
    let active: Vec<bool> = comps.component_of.iter().map(|&c| hit[c]).collect();
    result_from(g, &active, comps.largest, seed)
}

/// Same process run as explicit transmission: each active vertex tries each
/// incident edge once, and `transmit(e)` decides whether edge `e` passes.
pub fn spread_with(g: &GraphInstance, seeds: &[usize], mut transmit: impl FnMut(usize) -> bool) -> Vec<bool> {
    let mut active = vec![false; g.n_vertices()];
    let mut tried = vec![false; g.n_edges()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in seeds {
        if !active[s] {
            active[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if tried[e] {
                continue;
            }
            tried[e] = true;
            if transmit(e) && !active[w] {
                active[w] = true;
                queue.push_back(w);
            }
        }
    }
    active
}

/// Diffusion by direct transmission with fresh coin flips in traversal order.
/// Same law as [`run_diffusion`], different sample path for a given seed.
pub fn run_diffusion_direct(g: &GraphInstance, pi: f64, seeds: &SeedSet, seed: u64) -> RunResult {
    let mut rng = rng::rng(seed);
    let active = spread_with(g, seeds.active(), |_| rng.random::<f64>() < pi);
    result_from(g, &active, 0, seed)
}
