use std::collections::BTreeMap;

use rand::Rng as _;

use crate::graphgen::{EdgeKind, GraphInstance};
use crate::rng;

use super::unionfind::UnionFind;

/// Percolates internal edges only and counts, for cliques of size `d`, the
/// fragments of each size `k`. Keys are `(d, k)`.
pub fn internal_percolation_census(g: &GraphInstance, pi: f64, seed: u64) -> BTreeMap<(usize, usize), usize> {
    let mut rng = rng::rng(seed);
    let mut uf = UnionFind::new(g.n_vertices());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if g.edge_kind(e) == EdgeKind::Internal && rng.random::<f64>() < pi {
            uf.union(u, v);
        }
    }
    let mut counts = BTreeMap::new();
    for v in 0..g.n_vertices() {
        if g.is_clique_member(v) && uf.find(v) == v {
            *counts.entry((g.degree(v), uf.size_of(v))).or_insert(0) += 1;
        }
    }
    counts
}
