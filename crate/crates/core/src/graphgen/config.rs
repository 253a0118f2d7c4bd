use rand::distr::weighted::WeightedIndex;
use rand::prelude::*;

use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::rng;

use super::graph::GraphInstance;

pub const DEFAULT_MAX_TRIES: usize = 1000;

/// Degrees `d_1, ..., d_n` with an even sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.iter().sum::<usize>() % 2 == 1 {
            return Err(Error::param("degree sum is odd"));
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn half_edges(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// I.i.d. draws from `dist`; the last entry is bumped by one if the sum is odd.
pub fn sample_degree_sequence(dist: &DegreeDistribution<f64>, n: usize, seed: u64) -> Result<DegreeSequence> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    let sampler = WeightedIndex::new(dist.probs()).map_err(|e| Error::param(format!("degree law: {e}")))?;
    let mut rng = rng::rng(seed);
    let mut degrees: Vec<usize> = (0..n).map(|_| sampler.sample(&mut rng)).collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        degrees[n - 1] += 1;
    }
    Ok(DegreeSequence { degrees })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplePolicy {
    /// Keep loops and parallel edges.
    Multigraph,
    /// Drop loops, collapse parallel edges. Degrees are no longer exact.
    Erase,
    /// Redraw the matching until simple.
    Reject { max_tries: usize },
}

impl Default for SimplePolicy {
    fn default() -> Self {
        SimplePolicy::Reject { max_tries: DEFAULT_MAX_TRIES }
    }
}

impl SimplePolicy {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "multigraph" => Ok(Self::Multigraph),
            "erase" => Ok(Self::Erase),
            "reject" => Ok(Self::default()),
            _ => {
                let tries = text
                    .strip_prefix("reject:")
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::param(format!("unknown simple policy '{text}'")))?;
                Ok(Self::Reject { max_tries: tries })
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Multigraph => "multigraph".into(),
            Self::Erase => "erase".into(),
            Self::Reject { max_tries } => format!("reject:{max_tries}"),
        }
    }
}

fn uniform_matching(seq: &DegreeSequence, rng: &mut rng::Rng) -> Vec<(usize, usize)> {
    let mut stubs: Vec<usize> = Vec::with_capacity(seq.half_edges());
    for (v, &d) in seq.degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v, d));
    }
    stubs.shuffle(rng);
    stubs.chunks_exact(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect()
}

fn has_loop_or_multi(edges: &[(usize, usize)]) -> bool {
    if edges.iter().any(|(u, v)| u == v) {
        return true;
    }
    let mut pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    pairs.sort_unstable();
    pairs.windows(2).any(|w| w[0] == w[1])
}

/// Uniform pairing of half-edges.
pub fn configuration_match(seq: &DegreeSequence, seed: u64, policy: SimplePolicy) -> Result<GraphInstance> {
    let n = seq.len();
    let mut rng = rng::rng(seed);
    let edges = match policy {
        SimplePolicy::Multigraph => uniform_matching(seq, &mut rng),
        SimplePolicy::Erase => {
            let mut pairs: Vec<(usize, usize)> = uniform_matching(seq, &mut rng)
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            pairs
        }
        SimplePolicy::Reject { max_tries } => {
            let mut found = None;
            for _ in 0..max_tries {
                let edges = uniform_matching(seq, &mut rng);
                if !has_loop_or_multi(&edges) {
                    found = Some(edges);
                    break;
                }
            }
            found.ok_or(Error::RetryLimit(max_tries))?
        }
    };
    GraphInstance::from_edges(n, edges)
}
