//! Domination predicates and exact solvers for the connected and total
//! domination numbers.
//!
//! Connected dominating sets are searched by size, enumerating only
//! connected vertex subsets (each exactly once, grown from its least
//! vertex) and pruning branches whose closed neighbourhoods cannot cover
//! the remaining vertices. Total dominating sets branch on the neighbours
//! of the least undominated vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Outcome of a domination solver. `value` is `None` when no set of the
/// required kind exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub value: Option<usize>,
    pub witness: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_optima: Option<Vec<VertexSet>>,
}

impl DominationResult {
    fn undefined() -> Self {
        DominationResult {
            value: None,
            witness: None,
            all_optima: None,
        }
    }
}

/// `D ≻ X`: every vertex of `x` is in `d` or adjacent to a vertex of `d`.
pub fn dominates(g: &Graph, d: VertexSet, x: VertexSet) -> bool {
    x.is_subset(g.closed_neighborhood_of(d))
}

/// `D ≻_c G`.
pub fn is_connected_dominating(g: &Graph, d: VertexSet) -> bool {
    if g.n() == 0 {
        return true;
    }
    !d.is_empty() && dominates(g, d, g.vertices()) && g.is_connected_within(d)
}

/// Every vertex of `g` has a neighbour in `d`.
pub fn is_total_dominating(g: &Graph, d: VertexSet) -> bool {
    g.vertices().is_subset(g.open_neighborhood_of(d))
}

/// γc(G), with the lexicographically smallest γc-set as witness.
pub fn gamma_c(g: &Graph) -> DominationResult {
    if g.n() == 0 || !g.is_connected() {
        return DominationResult::undefined();
    }
    for k in 1..=g.n() {
        if let Some(witness) = lex_first_connected_dominating(g, k) {
            return DominationResult {
                value: Some(k),
                witness: Some(witness),
                all_optima: None,
            };
        }
    }
    unreachable!("V(G) is a connected dominating set of a connected graph")
}

/// Whether `g` has a connected dominating set with at most `k` vertices.
/// Returns one such set. Cheaper than [`gamma_c`] when only a bound matters.
pub fn connected_dominating_set_within(g: &Graph, k: usize) -> Option<VertexSet> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    (1..=k.min(g.n())).find_map(|size| {
        let mut found = None;
        search_connected_dominating(g, size, None, &mut |d| {
            found = Some(d);
            false
        });
        found
    })
}

/// All minimum connected dominating sets, in lexicographic order.
pub fn all_gamma_c_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() == 0 {
        return Err(Error::domain("connected domination of the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::domain("a disconnected graph has no connected dominating set"));
    }
    for k in 1..=g.n() {
        let mut all = Vec::new();
        search_connected_dominating(g, k, None, &mut |d| {
            all.push(d);
            true
        });
        if !all.is_empty() {
            all.sort();
            return Ok(all);
        }
    }
    unreachable!("V(G) is a connected dominating set of a connected graph")
}

/// Smallest connected dominating set of size exactly `k` in lexicographic
/// order. Sets are enumerated grouped by least vertex, so the first group
/// with any solution holds the answer.
fn lex_first_connected_dominating(g: &Graph, k: usize) -> Option<VertexSet> {
    for root in 0..g.n() {
        let mut best: Option<VertexSet> = None;
        search_connected_dominating(g, k, Some(root), &mut |d| {
            best = Some(best.map_or(d, |b| Ord::min(b, d)));
            true
        });
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Enumerates the connected dominating sets of size `k` (optionally only
/// those whose least vertex is `only_root`). `visit` returns `false` to stop.
fn search_connected_dominating(
    g: &Graph,
    k: usize,
    only_root: Option<usize>,
    visit: &mut impl FnMut(VertexSet) -> bool,
) {
    let all = g.vertices();
    let max_cover = g.max_degree() + 1;
    let roots = match only_root {
        Some(r) => r..r + 1,
        None => 0..g.n(),
    };
    for root in roots {
        // Vertices below the root are excluded so each set is produced once.
        let allowed = all.difference(VertexSet::full(root));
        let start = VertexSet::singleton(root);
        let ext = g.neighbors(root).intersection(allowed);
        let state = Esu {
            g,
            k,
            allowed,
            max_cover,
        };
        if !state.extend(start, ext, g.closed_neighbors(root), visit) {
            return;
        }
    }
}

struct Esu<'a> {
    g: &'a Graph,
    k: usize,
    allowed: VertexSet,
    max_cover: usize,
}

impl Esu<'_> {
    /// Enumeration of connected sets by exclusive extension: a vertex joins
    /// the extension set only through the first chosen vertex it is adjacent
    /// to, so every connected superset of the root is built exactly once.
    fn extend(
        &self,
        chosen: VertexSet,
        mut ext: VertexSet,
        covered: VertexSet,
        visit: &mut impl FnMut(VertexSet) -> bool,
    ) -> bool {
        let all = self.g.vertices();
        if chosen.len() == self.k {
            return covered != all || visit(chosen);
        }
        let remaining = self.k - chosen.len();
        if all.difference(covered).len() > remaining * self.max_cover {
            return true;
        }
        let neighborhood = self.g.closed_neighborhood_of(chosen);
        while let Some(w) = ext.min() {
            ext.remove(w);
            let fresh = self
                .g
                .neighbors(w)
                .intersection(self.allowed)
                .difference(neighborhood);
            let next_ext = ext.union(fresh);
            let next_cover = covered.union(self.g.closed_neighbors(w));
            if !self.extend(chosen.with(w), next_ext, next_cover, visit) {
                return false;
            }
        }
        true
    }
}

/// γt(G), undefined when `g` is empty or has an isolated vertex.
pub fn gamma_t(g: &Graph) -> DominationResult {
    if g.n() == 0 || g.has_isolated_vertex() {
        return DominationResult::undefined();
    }
    for k in 1..=g.n() {
        if let Some(witness) = total_dominating_set_within(g, k) {
            return DominationResult {
                value: Some(witness.len()),
                witness: Some(witness),
                all_optima: None,
            };
        }
    }
    unreachable!("V(G) totally dominates a graph without isolated vertices")
}

/// A total dominating set with at most `k` vertices, if one exists.
pub fn total_dominating_set_within(g: &Graph, k: usize) -> Option<VertexSet> {
    if g.n() == 0 || g.has_isolated_vertex() {
        return None;
    }
    let max_degree = g.max_degree();
    total_branch(g, VertexSet::EMPTY, VertexSet::EMPTY, k, max_degree)
}

fn total_branch(g: &Graph, chosen: VertexSet, dominated: VertexSet, k: usize, max_degree: usize) -> Option<VertexSet> {
    let open = g.vertices().difference(dominated);
    let Some(x) = open.min() else {
        return Some(chosen);
    };
    let remaining = k - chosen.len();
    if open.len() > remaining * max_degree {
        return None;
    }
    for y in g.neighbors(x).difference(chosen) {
        let found = total_branch(g, chosen.with(y), dominated.union(g.neighbors(y)), k, max_degree);
        if found.is_some() {
            return found;
        }
    }
    None
}
