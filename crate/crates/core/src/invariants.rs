//! Independence number, clique number and vertex connectivity.
//!
//! Cliques are found with a greedy-colouring bounded branch and bound; the
//! independence number is the clique number of the complement. Vertex
//! connectivity follows Menger: the minimum, over non-adjacent pairs, of
//! the number of internally disjoint paths, each computed as a unit
//! capacity max-flow on the vertex-split digraph.
//!
//! Witness sets are always the lexicographically smallest optimal set.

use serde::{Deserialize, Serialize};

use crate::domination::{gamma_c, gamma_t};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;

/// Largest order accepted by [`minimum_cut_sets`].
pub const MAX_CUT_ENUMERATION_VERTICES: usize = 16;

/// An optimum value together with a witness achieving it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimum {
    pub value: usize,
    pub witness: VertexSet,
}

pub fn clique_number(g: &Graph) -> Optimum {
    let value = max_clique_size(g);
    let witness = lex_first_clique(g, VertexSet::EMPTY, g.vertices(), value)
        .expect("a clique of the maximum size exists");
    Optimum { value, witness }
}

pub fn independence_number(g: &Graph) -> Optimum {
    clique_number(&g.complement())
}

fn max_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    best
}

/// Greedy sequential colouring of `p`. Returns vertices with their colour
/// number, grouped by non-decreasing colour.
fn colour_classes(g: &Graph, p: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncoloured = p;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured;
        while let Some(v) = q.min() {
            q = q.difference(g.closed_neighbors(v));
            uncoloured.remove(v);
            out.push((v, colour));
        }
    }
    out
}

fn colour_bound(g: &Graph, p: VertexSet) -> usize {
    colour_classes(g, p).last().map_or(0, |&(_, c)| c)
}

fn expand(g: &Graph, size: usize, mut p: VertexSet, best: &mut usize) {
    let order = colour_classes(g, p);
    for &(v, colour) in order.iter().rev() {
        if size + colour <= *best {
            return;
        }
        let next = p.intersection(g.neighbors(v));
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            expand(g, size + 1, next, best);
        }
        p.remove(v);
    }
}

/// Depth-first search over cliques in lexicographic order; the first clique
/// of size `target` reached is the lexicographically smallest one.
fn lex_first_clique(g: &Graph, chosen: VertexSet, candidates: VertexSet, target: usize) -> Option<VertexSet> {
    if chosen.len() == target {
        return Some(chosen);
    }
    let mut rest = candidates;
    while let Some(v) = rest.min() {
        if chosen.len() + colour_bound(g, rest) < target {
            return None;
        }
        rest.remove(v);
        let next = rest.intersection(g.neighbors(v));
        if let Some(found) = lex_first_clique(g, chosen.with(v), next, target) {
            return Some(found);
        }
    }
    None
}

/// Vertex connectivity and, unless the graph is complete, the
/// lexicographically smallest minimum separating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub value: usize,
    pub cut: Option<VertexSet>,
}

/// κ(G). Complete graphs get `n - 1` (so κ(K₁) = 0) and no cut; a
/// disconnected graph gets 0 with the empty cut.
pub fn vertex_connectivity(g: &Graph) -> Result<Connectivity> {
    if g.n() == 0 {
        return Err(Error::domain("vertex connectivity of the empty graph"));
    }
    if g.is_complete() {
        return Ok(Connectivity {
            value: g.n() - 1,
            cut: None,
        });
    }
    let value = connectivity_value(g);
    Ok(Connectivity {
        value,
        cut: Some(lex_first_cut(g, value)),
    })
}

/// κ of a graph known to be non-complete with at least two vertices.
fn connectivity_value(g: &Graph) -> usize {
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.n() - 2;
    for (s, t) in g.non_edges() {
        best = best.min(local_connectivity(g, s, t, best));
        if best == 0 {
            break;
        }
    }
    best
}

fn has_cut_of_size(g: &Graph, size: usize) -> bool {
    g.n() >= 2 && !g.is_complete() && connectivity_value(g) <= size
}

/// Smallest minimum cut in lexicographic order, built greedily: the next
/// vertex is the least one that still extends to a minimum cut. A set `F`
/// extends to a cut of size κ exactly when `G - F` has a cut of size
/// `κ - |F|`.
fn lex_first_cut(g: &Graph, kappa: usize) -> VertexSet {
    let mut cut = VertexSet::EMPTY;
    while cut.len() < kappa {
        let start = cut.max().map_or(0, |m| m + 1);
        let v = (start..g.n())
            .find(|&v| {
                let rest = g.vertices().difference(cut.with(v));
                let h = g.induced_subgraph(rest).expect("subset of vertices");
                has_cut_of_size(&h, kappa - cut.len() - 1)
            })
            .expect("a minimum cut extends the current prefix");
        cut.insert(v);
    }
    cut
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for
/// non-adjacent `s`, `t`, stopping early once `limit` is reached.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.n();
    // Node 2v is v_in, 2v + 1 is v_out.
    let size = 2 * n;
    let mut cap = vec![0i32; size * size];
    let idx = |a: usize, b: usize| a * size + b;
    let inf = n as i32;
    for v in 0..n {
        cap[idx(2 * v, 2 * v + 1)] = if v == s || v == t { inf } else { 1 };
        for u in g.neighbors(v) {
            cap[idx(2 * v + 1, 2 * u)] = inf;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut parent = vec![usize::MAX; size];
    let mut queue = Vec::with_capacity(size);
    while flow < limit {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        queue.clear();
        queue.push(source);
        let mut head = 0;
        while head < queue.len() && parent[sink] == usize::MAX {
            let a = queue[head];
            head += 1;
            for b in 0..size {
                if parent[b] == usize::MAX && cap[idx(a, b)] > 0 {
                    parent[b] = a;
                    queue.push(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            cap[idx(a, b)] -= 1;
            cap[idx(b, a)] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// Every minimum vertex cut, in lexicographic order, by exhaustive search.
pub fn minimum_cut_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > MAX_CUT_ENUMERATION_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for cut enumeration",
            requested: g.n(),
            limit: MAX_CUT_ENUMERATION_VERTICES,
        });
    }
    if g.n() == 0 || g.is_complete() {
        return Err(Error::domain("a complete graph has no cut set"));
    }
    if !g.is_connected() {
        return Err(Error::domain("minimum cut sets are defined for connected graphs"));
    }
    let kappa = connectivity_value(g);
    let mut out = Vec::new();
    for_each_subset_of_size(g.vertices(), kappa, &mut |s| {
        if !g.is_connected_within(g.vertices().difference(s)) {
            out.push(s);
        }
    });
    Ok(out)
}

/// Visits every `k`-subset of `pool` in lexicographic order.
pub(crate) fn for_each_subset_of_size(pool: VertexSet, k: usize, visit: &mut impl FnMut(VertexSet)) {
    fn go(rest: VertexSet, chosen: VertexSet, k: usize, visit: &mut impl FnMut(VertexSet)) {
        if chosen.len() == k {
            visit(chosen);
            return;
        }
        let need = k - chosen.len();
        let mut rest = rest;
        while rest.len() >= need {
            let v = rest.min().expect("non-empty");
            rest.remove(v);
            go(rest, chosen.with(v), k, visit);
        }
    }
    go(pool, VertexSet::EMPTY, k, visit);
}

/// `(n, δ, α, ω, κ, γc, γt)` for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub alpha: usize,
    pub omega: usize,
    pub kappa: usize,
    pub gamma_c: Option<usize>,
    pub gamma_t: Option<usize>,
}

impl InvariantRecord {
    pub fn compute(g: &Graph) -> Result<Self> {
        let record = InvariantRecord {
            graph6: to_graph6(g),
            n: g.n(),
            delta: g.min_degree()?,
            alpha: independence_number(g).value,
            omega: clique_number(g).value,
            kappa: vertex_connectivity(g)?.value,
            gamma_c: gamma_c(g).value,
            gamma_t: gamma_t(g).value,
        };
        record.validate()?;
        Ok(record)
    }

    pub fn validate(&self) -> Result<()> {
        if self.kappa > self.delta {
            return Err(Error::domain(format!(
                "kappa {} exceeds minimum degree {}",
                self.kappa, self.delta
            )));
        }
        if let Some(gc) = self.gamma_c {
            if gc == 0 || gc > self.n {
                return Err(Error::domain(format!("gamma_c {gc} outside 1..={}", self.n)));
            }
        }
        Ok(())
    }
}
