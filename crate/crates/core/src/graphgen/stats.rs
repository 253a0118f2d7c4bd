use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};

use super::graph::GraphInstance;

/// Empirical degree law `ñ_r / ñ`.
pub fn empirical_degree_hist(g: &GraphInstance) -> Result<DegreeDistribution<f64>> {
    let n = g.n_vertices();
    if n == 0 {
        return Err(Error::Degenerate("empty graph".into()));
    }
    let mut counts = vec![0usize; g.max_degree() + 1];
    for v in 0..n {
        counts[g.degree(v)] += 1;
    }
    DegreeDistribution::from_probs(counts.into_iter().map(|c| c as f64 / n as f64).collect())
        // All-isolated graphs have mean zero, which the law type rejects.
        .map_err(|e| Error::Degenerate(format!("degree histogram: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Clustering {
    /// Global transitivity.
    pub c: f64,
    /// Mean local coefficient, zero for degrees below two.
    pub c2: f64,
}

/// Triangles through each vertex by sorted-neighbor intersection.
fn triangles_per_vertex(g: &GraphInstance) -> Vec<usize> {
    let n = g.n_vertices();
    let sorted: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    let mut tri = vec![0usize; n];
    for u in 0..n {
        for &v in sorted[u].iter().filter(|&&v| v > u) {
            // common neighbors w > v close a triangle u < v < w counted once
            let (a, b) = (&sorted[u], &sorted[v]);
            let (mut i, mut j) = (a.partition_point(|&x| x <= v), b.partition_point(|&x| x <= v));
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let w = a[i];
                        tri[u] += 1;
                        tri[v] += 1;
                        tri[w] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    tri
}

/// Requires a simple graph.
pub fn empirical_clustering(g: &GraphInstance) -> Result<Clustering> {
    if !g.is_simple() {
        return Err(Error::Precondition("clustering needs a simple graph".into()));
    }
    let tri = triangles_per_vertex(g);
    let n = g.n_vertices();
    let mut num = 0.0;
    let mut den = 0.0;
    let mut local = 0.0;
    for v in 0..n {
        let d = g.degree(v) as f64;
        let pairs = d * (d - 1.0);
        num += 2.0 * tri[v] as f64;
        den += pairs;
        if g.degree(v) >= 2 {
            local += 2.0 * tri[v] as f64 / pairs;
        }
    }
    if den == 0.0 {
        return Err(Error::Degenerate("no vertex of degree 2 or more".into()));
    }
    Ok(Clustering { c: num / den, c2: local / n as f64 })
}
