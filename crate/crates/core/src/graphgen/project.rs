use crate::error::{Error, Result};

use super::graph::{EdgeKind, GraphInstance};
use crate::sim::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionResult {
    pub graph: GraphInstance,
    /// Projected vertex of every vertex of the source graph; `None` outside
    /// the subgraph.
    pub vertex_map: Vec<Option<usize>>,
}

/// Merges same-parent clique members joined by internal edges of the
/// subgraph. External edges of the subgraph are kept.
///
/// Projected vertices are numbered by their smallest member; each keeps its
/// parent id and is no longer marked as a clique member.
pub fn project(g: &GraphInstance, sub_vertices: &[usize], sub_edges: &[usize]) -> Result<ProjectionResult> {
    let n = g.n_vertices();
    let mut inside = vec![false; n];
    for &v in sub_vertices {
        if v >= n {
            return Err(Error::param(format!("vertex {v} outside graph")));
        }
        inside[v] = true;
    }
    let mut uf = UnionFind::new(n);
    for &e in sub_edges {
        if e >= g.n_edges() {
            return Err(Error::param(format!("edge {e} outside graph")));
        }
        let (u, v) = g.edge(e);
        if !inside[u] || !inside[v] {
            return Err(Error::param(format!("edge {e} leaves the vertex set")));
        }
        if g.edge_kind(e) == EdgeKind::Internal && g.parent(u) == g.parent(v) {
            uf.union(u, v);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut vertex_map = vec![None; n];
    let mut parent = Vec::new();
    for v in 0..n {
        if !inside[v] {
            continue;
        }
        let r = uf.find(v);
        if label[r] == usize::MAX {
            label[r] = parent.len();
            parent.push(g.parent(v));
        }
        vertex_map[v] = Some(label[r]);
    }
    let edges: Vec<(usize, usize)> = sub_edges
        .iter()
        .filter(|&&e| g.edge_kind(e) == EdgeKind::External)
        .map(|&e| {
            let (u, v) = g.edge(e);
            (vertex_map[u].unwrap(), vertex_map[v].unwrap())
        })
        .collect();
    let k = parent.len();
    let m = edges.len();
    let graph = GraphInstance::new(k, edges, vec![EdgeKind::External; m], parent, vec![false; k], g.n_parents())?;
    Ok(ProjectionResult { graph, vertex_map })
}

/// Projection of the whole graph.
pub fn project_all(g: &GraphInstance) -> Result<ProjectionResult> {
    let vs: Vec<usize> = (0..g.n_vertices()).collect();
    let es: Vec<usize> = (0..g.n_edges()).collect();
    project(g, &vs, &es)
}
