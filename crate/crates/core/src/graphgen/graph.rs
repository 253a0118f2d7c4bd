use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Inside a substituted clique.
    Internal,
    External,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Internal => "internal",
            EdgeKind::External => "external",
        }
    }
}

/// Undirected multigraph with parent bookkeeping.
///
/// Adjacency is stored in compressed rows of `(neighbor, edge id)`; a loop
/// appears twice in its vertex's row, so it counts 2 towards the degree.
/// Parent ids are 0-based indices into the graph the instance was derived
/// from; for a graph fresh out of the configuration model `parent[v] = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInstance {
    edges: Vec<(usize, usize)>,
    kinds: Vec<EdgeKind>,
    offsets: Vec<usize>,
    adj: Vec<(usize, usize)>,
    parent: Vec<usize>,
    clique: Vec<bool>,
    n_parents: usize,
}

impl GraphInstance {
    pub fn new(
        n: usize,
        edges: Vec<(usize, usize)>,
        kinds: Vec<EdgeKind>,
        parent: Vec<usize>,
        clique: Vec<bool>,
        n_parents: usize,
    ) -> Result<Self> {
        if kinds.len() != edges.len() || parent.len() != n || clique.len() != n {
            return Err(Error::param("graph arrays have mismatched lengths"));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::param(format!("edge ({u}, {v}) outside {n} vertices")));
        }
        if let Some(p) = parent.iter().find(|&&p| p >= n_parents) {
            return Err(Error::param(format!("parent {p} outside {n_parents}")));
        }
        let mut deg = vec![0usize; n + 1];
        for &(u, v) in &edges {
            deg[u + 1] += 1;
            deg[v + 1] += 1;
        }
        for i in 0..n {
            deg[i + 1] += deg[i];
        }
        let offsets = deg;
        let mut fill = offsets.clone();
        let mut adj = vec![(0, 0); 2 * edges.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[fill[u]] = (v, e);
            fill[u] += 1;
            adj[fill[v]] = (u, e);
            fill[v] += 1;
        }
        Ok(Self { edges, kinds, offsets, adj, parent, clique, n_parents })
    }

    /// Plain graph: every edge external, each vertex its own parent.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let m = edges.len();
        Self::new(n, edges, vec![EdgeKind::External; m], (0..n).collect(), vec![false; n], n)
    }

    pub fn n_vertices(&self) -> usize {
        self.parent.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Number of vertices of the graph the parents refer to.
    pub fn n_parents(&self) -> usize {
        self.n_parents
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_kind(&self, e: usize) -> EdgeKind {
        self.kinds[e]
    }

    pub fn kinds(&self) -> &[EdgeKind] {
        &self.kinds
    }

    /// `(neighbor, edge id)` pairs of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n_vertices()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    #[inline]
    pub fn is_clique_member(&self, v: usize) -> bool {
        self.clique[v]
    }

    pub fn has_clique_members(&self) -> bool {
        self.clique.iter().any(|&c| c)
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Edges whose unordered endpoint pair already occurred earlier.
    pub fn parallel_count(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.parallel_count() == 0
    }

    /// Text form: `ñ m parents`, then `u v kind` per edge, then
    /// `v parent is_clique` per vertex.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 * (self.n_edges() + self.n_vertices()));
        let _ = writeln!(out, "{} {} {}", self.n_vertices(), self.n_edges(), self.n_parents);
        for (&(u, v), k) in self.edges.iter().zip(&self.kinds) {
            let _ = writeln!(out, "{u} {v} {}", k.as_str());
        }
        for v in 0..self.n_vertices() {
            let _ = writeln!(out, "{v} {} {}", self.parent[v], u8::from(self.clique[v]));
        }
        out
    }

    /// Inverse of [`to_text`](Self::to_text). Blank lines and `#` comments are
    /// skipped. A two-field header `n m` is accepted; the parent count is then
    /// one past the largest parent id.
    pub fn from_text(text: &str) -> Result<Self> {
        let end = text.lines().count();
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        });
        let bad = |line: usize, msg: &str| Error::Parse { line: line + 1, msg: msg.to_string() };
        let (hl, header) = lines.next().ok_or_else(|| bad(0, "empty graph file"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(hl, "header must be 'n m [parents]'")))
            .collect::<Result<_>>()?;
        let (n, m, given_parents) = match nums[..] {
            [n, m] => (n, m, None),
            [n, m, np] => (n, m, Some(np)),
            _ => return Err(bad(hl, "header must be 'n m [parents]'")),
        };
        let mut edges = Vec::with_capacity(m);
        let mut kinds = Vec::with_capacity(m);
        for _ in 0..m {
            let (i, l) = lines.next().ok_or_else(|| bad(end, "missing edge lines"))?;
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 3 {
                return Err(bad(i, "edge line must be 'u v kind'"));
            }
            let u = f[0].parse().map_err(|_| bad(i, "bad endpoint"))?;
            let v = f[1].parse().map_err(|_| bad(i, "bad endpoint"))?;
            let k = match f[2] {
                "internal" => EdgeKind::Internal,
                "external" => EdgeKind::External,
                _ => return Err(bad(i, "kind must be internal or external")),
            };
            edges.push((u, v));
            kinds.push(k);
        }
        let mut parent = vec![0; n];
        let mut clique = vec![false; n];
        for expect in 0..n {
            let (i, l) = lines.next().ok_or_else(|| bad(end, "missing vertex lines"))?;
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 3 || f[0].parse::<usize>().ok() != Some(expect) {
                return Err(bad(i, "vertex line must be 'v parent is_clique' in order"));
            }
            parent[expect] = f[1].parse().map_err(|_| bad(i, "bad parent"))?;
            clique[expect] = match f[2] {
                "0" => false,
                "1" => true,
                _ => return Err(bad(i, "is_clique must be 0 or 1")),
            };
        }
        if let Some((i, _)) = lines.next() {
            return Err(bad(i, "trailing content"));
        }
        let n_parents = given_parents.unwrap_or_else(|| parent.iter().max().map_or(0, |p| p + 1));
        Self::new(n, edges, kinds, parent, clique, n_parents)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loops_count_twice() {
        let g = GraphInstance::from_edges(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.loop_count(), 1);
        assert_eq!(g.parallel_count(), 1);
        assert!(!g.is_simple());
    }

    #[test]
    fn text_round_trip() {
        let g = GraphInstance::new(
            3,
            vec![(0, 1), (1, 2), (2, 0)],
            vec![EdgeKind::Internal, EdgeKind::Internal, EdgeKind::External],
            vec![0, 0, 1],
            vec![true, true, false],
            2,
        )
        .unwrap();
        let text = g.to_text();
        assert!(text.starts_with("3 3 2\n0 1 internal\n"));
        assert_eq!(GraphInstance::from_text(&text).unwrap(), g);
        assert_eq!(GraphInstance::from_text(&format!("# made by hand\n{text}")).unwrap(), g);
        assert!(GraphInstance::from_text("2 1\n0 5 external\n0 0 0\n1 1 0\n").is_err());
        // Parents with no surviving vertex only show up in the header.
        let short = GraphInstance::from_text("1 0 3\n0 0 0\n").unwrap();
        assert_eq!(short.n_parents(), 3);
        assert_eq!(GraphInstance::from_text("1 0\n0 0 0\n").unwrap().n_parents(), 1);
    }
}
