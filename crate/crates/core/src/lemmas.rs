//! Verifiers for the structural lemmas about 3-γc-critical graphs.
//!
//! Each verifier checks its precondition, then tests the lemma's
//! conclusion against every relevant optimum set and returns a report of
//! violations instead of a boolean, so that a failure carries its evidence.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::criticality::{is_k_gc_edge_critical, is_k_gc_vertex_critical, is_maximal_k_gc_vertex_critical, lift};
use crate::domination::{all_gamma_c_sets, dominates};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::invariants::minimum_cut_sets;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub graph6: String,
    /// Number of individual conclusions tested.
    pub checks: usize,
    pub violations: Vec<String>,
}

impl LemmaReport {
    fn new(lemma: &str, g: &Graph) -> Self {
        LemmaReport {
            lemma: lemma.to_string(),
            graph6: to_graph6(g),
            checks: 0,
            violations: Vec::new(),
        }
    }

    fn expect(&mut self, holds: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !holds {
            self.violations.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn require_edge_critical(g: &Graph) -> Result<()> {
    let ok = g.n() > 0 && g.is_connected() && is_k_gc_edge_critical(g, 3)?;
    if ok {
        Ok(())
    } else {
        Err(Error::domain("graph is not 3-gamma_c-edge critical"))
    }
}

/// For each non-edge `uv` and each γc-set `D` of `G + uv`: `|D| = 2`,
/// `D ∩ {u, v} ≠ ∅`, and if `D` holds exactly one endpoint then the other
/// endpoint has no `G`-neighbour in `D`.
pub fn verify_duv_lemma(g: &Graph) -> Result<LemmaReport> {
    require_edge_critical(g)?;
    let mut report = LemmaReport::new("duv", g);
    for (u, v) in g.non_edges() {
        let pair = VertexSet::singleton(u).with(v);
        for d in all_gamma_c_sets(&g.add_edge(u, v)?)? {
            report.expect(d.len() == 2, || format!("D_{u}{v} = {d} has size {}", d.len()));
            report.expect(!d.is_disjoint(pair), || format!("D_{u}{v} = {d} misses both {u} and {v}"));
            for (inside, outside) in [(u, v), (v, u)] {
                if d.contains(inside) && !d.contains(outside) {
                    report.expect(g.neighbors(outside).is_disjoint(d), || {
                        format!("D_{u}{v} = {d} contains {inside} and a neighbour of {outside}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Ordering of an independent set with its accompanying path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingWitness {
    /// `x_1, …, x_p`.
    pub order: Vec<usize>,
    /// `y_1, …, y_{p-1}`, a path in `G - I`.
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub graph6: String,
    pub independent_set: VertexSet,
    /// `None` means no ordering exists: a counterexample to the lemma.
    pub witness: Option<OrderingWitness>,
}

/// Searches for an ordering `x_1..x_p` of `i` and a path `y_1..y_{p-1}` in
/// `G - I` with `{x_j, y_j}` a connected dominating set of `G - x_{j+1}`.
pub fn verify_ordering_lemma(g: &Graph, i: VertexSet) -> Result<OrderingReport> {
    if !i.is_subset(g.vertices()) {
        return Err(Error::Index {
            vertex: i.difference(g.vertices()).min().unwrap_or(0),
            n: g.n(),
        });
    }
    if i.len() < 3 {
        return Err(Error::domain(format!("the ordering lemma needs |I| >= 3, got {}", i.len())));
    }
    if !g.is_independent_set(i) {
        return Err(Error::domain(format!("{i} is not independent")));
    }
    require_edge_critical(g)?;

    let search = OrderingSearch { g, independent: i };
    let witness = i.iter().find_map(|first| {
        let mut order = vec![first];
        let mut path = Vec::new();
        search.extend(&mut order, &mut path).then(|| OrderingWitness { order, path })
    });
    Ok(OrderingReport {
        graph6: to_graph6(g),
        independent_set: i,
        witness,
    })
}

struct OrderingSearch<'a> {
    g: &'a Graph,
    independent: VertexSet,
}

impl OrderingSearch<'_> {
    fn extend(&self, order: &mut Vec<usize>, path: &mut Vec<usize>) -> bool {
        if order.len() == self.independent.len() {
            return true;
        }
        let g = self.g;
        let x = *order.last().expect("ordering starts non-empty");
        let used_x: VertexSet = order.iter().copied().collect();
        let used_y: VertexSet = path.iter().copied().collect();
        let mut candidates = g.neighbors(x).difference(self.independent).difference(used_y);
        if let Some(&prev) = path.last() {
            candidates = candidates.intersection(g.neighbors(prev));
        }
        for y in candidates {
            let covered = g.closed_neighbors(x).union(g.closed_neighbors(y));
            for next in self.independent.difference(used_x) {
                if g.vertices().without(next).is_subset(covered) {
                    order.push(next);
                    path.push(y);
                    if self.extend(order, path) {
                        return true;
                    }
                    order.pop();
                    path.pop();
                }
            }
        }
        false
    }
}

fn require_vertex_critical(g: &Graph) -> Result<()> {
    let ok = g.n() > 0 && g.is_connected() && is_k_gc_vertex_critical(g, 3)?;
    if ok {
        Ok(())
    } else {
        Err(Error::domain("graph is not 3-gamma_c-vertex critical"))
    }
}

/// γc-sets of `G - v` for every `v`, in the labels of `G`.
fn vertex_deleted_optima(g: &Graph) -> Result<Vec<Vec<VertexSet>>> {
    (0..g.n())
        .map(|v| {
            let h = g.delete_vertex(v)?;
            Ok(all_gamma_c_sets(&h)?.into_iter().map(|d| lift(v, d)).collect())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DvLemmaReport {
    #[serde(flatten)]
    pub report: LemmaReport,
    /// All γc-sets of `G - v`, indexed by `v`.
    pub families: Vec<Vec<VertexSet>>,
}

/// For every vertex `v` and every γc-set `D` of `G - v`: `D ∩ N[v] = ∅` and
/// `|D| = 2`; for all `u ≠ v`: `N[v] ⊄ N[u]` and `N(v) ⊄ N[u]`. Distinct
/// vertices must not have the same single forced γc-set.
pub fn verify_dv_lemma(g: &Graph) -> Result<DvLemmaReport> {
    require_vertex_critical(g)?;
    let mut report = LemmaReport::new("dv", g);
    let families = vertex_deleted_optima(g)?;
    for v in 0..g.n() {
        for &d in &families[v] {
            report.expect(d.is_disjoint(g.closed_neighbors(v)), || format!("D_{v} = {d} meets N[{v}]"));
            report.expect(d.len() == 2, || format!("D_{v} = {d} has size {}", d.len()));
        }
        for u in (0..g.n()).filter(|&u| u != v) {
            report.expect(!g.closed_neighbors(v).is_subset(g.closed_neighbors(u)), || {
                format!("N[{v}] is contained in N[{u}]")
            });
            report.expect(!g.neighbors(v).is_subset(g.closed_neighbors(u)), || {
                format!("N({v}) is contained in N[{u}]")
            });
            if u > v {
                let forced_equal = families[u].len() == 1 && families[u] == families[v];
                report.expect(!forced_equal, || {
                    format!("D_{u} and D_{v} are both forced to {}", families[v][0])
                });
            }
        }
    }
    Ok(DvLemmaReport { report, families })
}

/// Cut-set lemmas, checked over every minimum cut `S` with components
/// `T_1, …, T_m` of `G - S`:
///
/// * for `v` with `m >= 3`, or `v ∈ S`, or `v` in a component with more
///   than one vertex: every γc-set of `G - v` meets `S`, and `v` does not
///   dominate `S`;
/// * for non-adjacent `a ∈ T_i`, `b ∈ T_j` with `{a, b}` not dominating
///   `G`, when `m >= 3` or both components are non-trivial: every γc-set of
///   `G + ab` holds exactly one of `a, b` and exactly one vertex of `S`.
pub fn verify_cutset_lemmas(g: &Graph) -> Result<LemmaReport> {
    if g.n() == 0 || !g.is_connected() || g.is_complete() {
        return Err(Error::domain("cut-set lemmas need a connected, non-complete graph"));
    }
    if !is_maximal_k_gc_vertex_critical(g, 3)? {
        return Err(Error::domain("graph is not maximal 3-gamma_c-vertex critical"));
    }
    let cuts = minimum_cut_sets(g)?;
    let deleted = vertex_deleted_optima(g)?;
    let mut added: BTreeMap<(usize, usize), Vec<VertexSet>> = BTreeMap::new();
    let mut report = LemmaReport::new("cutset", g);

    for &s in &cuts {
        let components = g.components_within(g.vertices().difference(s));
        let m = components.len();
        let component_of = |v: usize| components.iter().copied().find(|c| c.contains(v));

        for v in 0..g.n() {
            let qualifies = m >= 3 || s.contains(v) || component_of(v).is_some_and(|c| c.len() > 1);
            if !qualifies {
                continue;
            }
            for &d in &deleted[v] {
                report.expect(!d.is_disjoint(s), || format!("S = {s}: D_{v} = {d} misses S"));
            }
            report.expect(!dominates(g, VertexSet::singleton(v), s), || {
                format!("S = {s}: vertex {v} dominates S")
            });
        }

        for (i, &ti) in components.iter().enumerate() {
            for &tj in &components[i..] {
                if !(m >= 3 || ti.len() > 1 && tj.len() > 1) {
                    continue;
                }
                for a in ti {
                    for b in tj.iter().filter(|&b| b > a && !g.has_edge(a, b)) {
                        let pair = VertexSet::singleton(a).with(b);
                        if dominates(g, pair, g.vertices()) {
                            continue;
                        }
                        let optima = match added.get(&(a, b)) {
                            Some(o) => o.clone(),
                            None => {
                                let o = all_gamma_c_sets(&g.add_edge(a, b)?)?;
                                added.insert((a, b), o.clone());
                                o
                            }
                        };
                        for d in optima {
                            report.expect(d.intersection(pair).len() == 1, || {
                                format!("S = {s}: D_{a}{b} = {d} holds {} of {a}, {b}", d.intersection(pair).len())
                            });
                            report.expect(d.intersection(s).len() == 1, || {
                                format!("S = {s}: D_{a}{b} = {d} has {} vertices in S", d.intersection(s).len())
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
