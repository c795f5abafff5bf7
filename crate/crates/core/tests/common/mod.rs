//! Brute-force oracles shared by the integration tests. Each one works
//! straight from the definitions over all vertex subsets.

#![allow(dead_code)]

use cdcrit::{Graph, VertexSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet::from_bits)
}

fn connected_within(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.min() else { return false };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in s.iter() {
            if g.has_edge(v, w) && !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen == s
}

fn dominating(g: &Graph, d: VertexSet) -> bool {
    (0..g.n()).all(|v| d.contains(v) || d.iter().any(|u| g.has_edge(u, v)))
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| s.iter().all(|u| s.iter().all(|v| u == v || !g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn gamma_c(g: &Graph) -> Option<usize> {
    subsets(g.n())
        .filter(|&d| !d.is_empty() && dominating(g, d) && connected_within(g, d))
        .map(|d| d.len())
        .min()
}

pub fn gamma_t(g: &Graph) -> Option<usize> {
    subsets(g.n())
        .filter(|&d| (0..g.n()).all(|v| d.iter().any(|u| g.has_edge(u, v))))
        .map(|d| d.len())
        .min()
}

/// Smallest S with G - S disconnected, or n - 1 when no such S exists.
pub fn kappa(g: &Graph) -> usize {
    let all = VertexSet::full(g.n());
    subsets(g.n())
        .filter(|&s| {
            let rest = all.difference(s);
            rest.len() >= 2 && !connected_within(g, rest)
        })
        .map(|s| s.len())
        .min()
        .unwrap_or(g.n().saturating_sub(1))
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, used: &mut VertexSet, target: usize) -> bool {
    let last = *path.last().unwrap();
    if path.len() == g.n() {
        return last == target;
    }
    for w in 0..g.n() {
        if g.has_edge(last, w) && !used.contains(w) && (w != target || path.len() + 1 == g.n()) {
            path.push(w);
            used.insert(w);
            if extend_path(g, path, used, target) {
                return true;
            }
            path.pop();
            used.remove(w);
        }
    }
    false
}

/// Hamiltonian u-v path by plain backtracking.
pub fn ham_path(g: &Graph, u: usize, v: usize) -> bool {
    let mut path = vec![u];
    let mut used = VertexSet::singleton(u);
    extend_path(g, &mut path, &mut used, v)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
