use rand::Rng as _;

use crate::error::{Error, Result};
use crate::profile::CliqueProfile;
use crate::rng;

use super::graph::{EdgeKind, GraphInstance};

/// Replaces each vertex `i`, with probability `γ_{d_i}`, by a `d_i`-clique
/// whose members each take one of `i`'s edges. Members of one parent get
/// consecutive ids, in parent order. Substituted degree-0 vertices vanish.
///
/// The `j`-th edge slot of `i` (in adjacency order) goes to the `j`-th member.
pub fn clique_substitute(g: &GraphInstance, gamma: &CliqueProfile<f64>, seed: u64) -> Result<GraphInstance> {
    if g.has_clique_members() {
        return Err(Error::Precondition("graph already contains clique members".into()));
    }
    let n = g.n_vertices();
    let mut rng = rng::rng(seed);
    // first[i]: id of the first vertex standing for i; None if removed.
    let mut first: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut substituted = vec![false; n];
    let mut parent = Vec::with_capacity(n);
    let mut clique = Vec::with_capacity(n);
    for i in 0..n {
        let d = g.degree(i);
        let gd = gamma.get(d);
        let x = gd > 0.0 && (gd >= 1.0 || rng.random::<f64>() < gd);
        substituted[i] = x;
        if x && d == 0 {
            first.push(None);
            continue;
        }
        first.push(Some(parent.len()));
        let copies = if x { d } else { 1 };
        parent.extend(std::iter::repeat_n(g.parent(i), copies));
        clique.extend(std::iter::repeat_n(x, copies));
    }

    let internal: usize = (0..n)
        .filter(|&i| substituted[i])
        .map(|i| g.degree(i) * (g.degree(i).saturating_sub(1)) / 2)
        .sum();
    let mut edges = Vec::with_capacity(g.n_edges() + internal);
    let mut kinds = Vec::with_capacity(g.n_edges() + internal);

    // Slot of each endpoint of edge e at a substituted vertex.
    let mut slot = vec![[0usize; 2]; g.n_edges()];
    for i in 0..n {
        if !substituted[i] {
            continue;
        }
        let mut seen_loop = std::collections::HashSet::new();
        for (j, &(_, e)) in g.neighbors(i).iter().enumerate() {
            let (u, v) = g.edge(e);
            let side = if u == v { usize::from(!seen_loop.insert(e)) } else { usize::from(v == i) };
            slot[e][side] = j;
        }
    }
    let image = |i: usize, s: usize| {
        let base = first[i].expect("endpoint of an edge has positive degree");
        if substituted[i] {
            base + s
        } else {
            base
        }
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((image(u, slot[e][0]), image(v, slot[e][1])));
        kinds.push(g.edge_kind(e));
    }
    for i in 0..n {
        if let (true, Some(base)) = (substituted[i], first[i]) {
            let d = g.degree(i);
            for a in 0..d {
                for b in a + 1..d {
                    edges.push((base + a, base + b));
                    kinds.push(EdgeKind::Internal);
                }
            }
        }
    }
    let count = parent.len();
    GraphInstance::new(count, edges, kinds, parent, clique, g.n_parents())
}
