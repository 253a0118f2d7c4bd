use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graphgen::GraphInstance;
use crate::rng;
use crate::thresh::ThresholdDistribution;

use super::seeds::SeedSet;
use super::unionfind::UnionFind;
use super::RunResult;

/// Per-vertex thresholds: `v` activates once more than `k[v]` neighbors are
/// active.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdAssignment {
    pub k: Vec<usize>,
}

impl ThresholdAssignment {
    pub fn get(&self, v: usize) -> usize {
        self.k[v]
    }
}

fn draw_row(row: &[f64], rng: &mut rng::Rng) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (l, &t) in row.iter().enumerate() {
        acc += t;
        if u < acc {
            return l;
        }
    }
    // rounding slack: last level with mass
    row.iter().rposition(|&t| t > 0.0).unwrap_or(0)
}

/// One draw per parent, from the row of the parent's degree, shared by all
/// its clique members. Draws happen in parent order.
pub fn assign_thresholds(g: &GraphInstance, t: &ThresholdDistribution<f64>, seed: u64) -> Result<ThresholdAssignment> {
    if g.max_degree() > t.s_max() {
        return Err(Error::param(format!(
            "threshold rows stop at {} but the graph has degree {}",
            t.s_max(),
            g.max_degree()
        )));
    }
    let mut rng = rng::rng(seed);
    let mut drawn: Vec<Option<usize>> = vec![None; g.n_parents()];
    let k = (0..g.n_vertices())
        .map(|v| *drawn[g.parent(v)].get_or_insert_with(|| draw_row(t.row(g.degree(v)), &mut rng)))
        .collect();
    Ok(ThresholdAssignment { k })
}

fn propagate(g: &GraphInstance, k: &ThresholdAssignment, seeds: &[usize], mut order: impl FnMut(&mut VecDeque<usize>)) -> Vec<bool> {
    let mut active = vec![false; g.n_vertices()];
    let mut count = vec![0usize; g.n_vertices()];
    let mut queue = VecDeque::new();
    for &s in seeds {
        if !active[s] {
            active[s] = true;
            queue.push_back(s);
        }
    }
    order(&mut queue);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            count[w] += 1;
            if !active[w] && count[w] > k.k[w] {
                active[w] = true;
                queue.push_back(w);
            }
        }
        order(&mut queue);
    }
    active
}

/// Final active set of the threshold dynamics.
pub fn threshold_final_set(g: &GraphInstance, k: &ThresholdAssignment, seeds: &SeedSet) -> Vec<bool> {
    propagate(g, k, seeds.active(), |_| {})
}

/// Same dynamics with the pending queue reshuffled after every step.
pub fn threshold_final_set_shuffled(g: &GraphInstance, k: &ThresholdAssignment, seeds: &SeedSet, seed: u64) -> Vec<bool> {
    let mut rng = rng::rng(seed);
    propagate(g, k, seeds.active(), |q| q.make_contiguous().shuffle(&mut rng))
}

pub fn run_threshold(g: &GraphInstance, k: &ThresholdAssignment, seeds: &SeedSet) -> RunResult {
    let active = threshold_final_set(g, k, seeds);
    let mut per_degree = vec![0usize; g.max_degree() + 1];
    for v in (0..g.n_vertices()).filter(|&v| active[v]) {
        per_degree[g.degree(v)] += 1;
    }
    RunResult {
        final_active_count: per_degree.iter().sum(),
        largest_component: 0,
        per_degree_active: per_degree,
        replica_seed: 0,
    }
}

/// Largest component of the subgraph induced by threshold-zero vertices,
/// sorted. Ties go to the component with the smallest vertex.
pub fn pivotal_set(g: &GraphInstance, k: &ThresholdAssignment) -> Vec<usize> {
    let zero = |v: usize| k.k[v] == 0;
    let mut uf = UnionFind::new(g.n_vertices());
    for &(u, v) in g.edges() {
        if zero(u) && zero(v) {
            uf.union(u, v);
        }
    }
    let mut best: Option<(usize, usize)> = None;
    for v in (0..g.n_vertices()).filter(|&v| zero(v)) {
        let size = uf.size_of(v);
        if best.is_none_or(|(s, _)| size > s) {
            best = Some((size, uf.find(v)));
        }
    }
    match best {
        None => Vec::new(),
        Some((_, root)) => (0..g.n_vertices()).filter(|&v| zero(v) && uf.find(v) == root).collect(),
    }
}
