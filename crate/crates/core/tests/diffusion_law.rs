//! Exhaustive law of the final diffusion set on a small clique gadget, by two
//! routes: percolate every edge first, or transmit along a traversal.

use std::collections::BTreeMap;

use cliquenet::graphgen::{clique_substitute, GraphInstance};
use cliquenet::sim::spread_with;
use cliquenet::CliqueProfile64;

type Law = BTreeMap<Vec<bool>, f64>;

fn gadget() -> GraphInstance {
    let base = GraphInstance::from_edges(4, vec![(0, 1), (0, 1), (0, 2), (1, 3), (1, 3)]).unwrap();
    clique_substitute(&base, &CliqueProfile64::constant(1.0).unwrap(), 0).unwrap()
}

/// Sum over all 2^m retained-edge sets of the set reachable from the seeds.
fn percolation_law(g: &GraphInstance, seeds: &[usize], pi: f64) -> Law {
    let m = g.n_edges();
    let mut law = Law::new();
    for mask in 0u64..1 << m {
        let kept = mask.count_ones() as i32;
        let w = pi.powi(kept) * (1.0 - pi).powi(m as i32 - kept);
        let mut reach = vec![false; g.n_vertices()];
        let mut stack: Vec<usize> = seeds.to_vec();
        for &s in seeds {
            reach[s] = true;
        }
        while let Some(v) = stack.pop() {
            for &(u, e) in g.neighbors(v) {
                if mask >> e & 1 == 1 && !reach[u] {
                    reach[u] = true;
                    stack.push(u);
                }
            }
        }
        *law.entry(reach).or_default() += w;
    }
    law
}

/// Walks the tree of transmission outcomes: each leaf is one sequence of
/// coin results, explored by flipping every default `false` past the prefix.
fn transmission_law(g: &GraphInstance, seeds: &[usize], pi: f64) -> Law {
    let mut law = Law::new();
    let mut pending = vec![Vec::<bool>::new()];
    while let Some(prefix) = pending.pop() {
        let mut taken = Vec::new();
        let active = spread_with(g, seeds, |_| {
            let b = prefix.get(taken.len()).copied().unwrap_or(false);
            taken.push(b);
            b
        });
        for i in prefix.len()..taken.len() {
            let mut next = taken[..i].to_vec();
            next.push(true);
            pending.push(next);
        }
        let w: f64 = taken.iter().map(|&b| if b { pi } else { 1.0 - pi }).product();
        *law.entry(active).or_default() += w;
    }
    law
}

#[test]
fn both_routes_have_the_same_law() {
    let g = gadget();
    assert_eq!(g.n_vertices(), 10);
    for seeds in [vec![0], vec![3], vec![7, 9], vec![2, 5]] {
        for pi in [0.2, 0.5, 0.85] {
            let a = percolation_law(&g, &seeds, pi);
            let b = transmission_law(&g, &seeds, pi);
            let total: f64 = b.values().sum();
            assert!((total - 1.0).abs() < 1e-12, "{total}");
            let keys: Vec<_> = a.keys().chain(b.keys()).collect();
            for k in keys {
                let (x, y) = (a.get(k).copied().unwrap_or(0.0), b.get(k).copied().unwrap_or(0.0));
                assert!((x - y).abs() < 1e-12, "seeds {seeds:?} pi {pi}: {x} vs {y}");
            }
        }
    }
}
