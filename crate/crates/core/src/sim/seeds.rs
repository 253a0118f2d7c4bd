use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graphgen::GraphInstance;
use crate::profile::ActivationProfile;
use crate::rng;

#[derive(Debug, Clone, PartialEq)]
pub enum SeedScheme {
    Single(usize),
    /// Each vertex on its own with probability `α_{deg}`.
    DegreeIndependent(ActivationProfile<f64>),
    /// One draw per parent; a clique is seeded whole or not at all.
    CliqueCorrelated(ActivationProfile<f64>),
    Explicit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedSet {
    active: Vec<usize>,
    scheme: SeedScheme,
}

impl SeedSet {
    pub fn single(g: &GraphInstance, v: usize) -> Result<Self> {
        if v >= g.n_vertices() {
            return Err(Error::param(format!("seed vertex {v} outside graph")));
        }
        Ok(Self { active: vec![v], scheme: SeedScheme::Single(v) })
    }

    pub fn from_vertices(mut vs: Vec<usize>) -> Self {
        vs.sort_unstable();
        vs.dedup();
        Self { active: vs, scheme: SeedScheme::Explicit }
    }

    pub fn all(g: &GraphInstance) -> Self {
        Self::from_vertices((0..g.n_vertices()).collect())
    }

    pub fn degree_independent(g: &GraphInstance, alpha: &ActivationProfile<f64>, seed: u64) -> Self {
        let mut rng = rng::rng(seed);
        let active = (0..g.n_vertices())
            .filter(|&v| rng.random::<f64>() < alpha.get(g.degree(v)))
            .collect();
        Self { active, scheme: SeedScheme::DegreeIndependent(alpha.clone()) }
    }

    /// Relies on clique members being contiguous, as produced by
    /// [`clique_substitute`](crate::graphgen::clique_substitute).
    pub fn clique_correlated(g: &GraphInstance, alpha: &ActivationProfile<f64>, seed: u64) -> Self {
        let mut rng = rng::rng(seed);
        let mut active = Vec::new();
        let mut v = 0;
        while v < g.n_vertices() {
            let mut end = v + 1;
            while end < g.n_vertices() && g.is_clique_member(v) && g.parent(end) == g.parent(v) {
                end += 1;
            }
            if rng.random::<f64>() < alpha.get(g.degree(v)) {
                active.extend(v..end);
            }
            v = end;
        }
        Self { active, scheme: SeedScheme::CliqueCorrelated(alpha.clone()) }
    }

    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn scheme(&self) -> &SeedScheme {
        &self.scheme
    }

    pub fn len(&self) -> usize {
        self.active.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }
}
