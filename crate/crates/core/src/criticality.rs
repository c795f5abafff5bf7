//! Edge-, vertex- and maximal criticality with respect to connected
//! domination, plus edge criticality for total domination.
//!
//! The boolean predicates stop at the first failing probe. The report
//! variant computes every optimum family it needs, for inspection and for
//! the lemma verifiers.

use serde::{Deserialize, Serialize};

use crate::domination::{
    all_gamma_c_sets, connected_dominating_set_within, gamma_c, total_dominating_set_within,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;

/// All γc-sets of `G + uv` for one non-edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeProbe {
    pub u: usize,
    pub v: usize,
    pub gamma_c: Option<usize>,
    pub optima: Vec<VertexSet>,
}

/// All γc-sets of `G - v`, in the vertex labels of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexProbe {
    pub v: usize,
    pub gamma_c: Option<usize>,
    pub optima: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub graph6: String,
    pub k: usize,
    pub gamma_c: Option<usize>,
    pub edge_critical: bool,
    pub vertex_critical: bool,
    pub maximal: bool,
    /// Probes for non-edges with `γc(G + uv) < k`.
    pub duv_witnesses: Vec<EdgeProbe>,
    /// Probes for vertices with `γc(G - v) < k`.
    pub dv_witnesses: Vec<VertexProbe>,
    pub failure_reason: Option<String>,
}

fn require_connected(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::parameter("criticality needs k >= 1"));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::domain("criticality is defined for connected graphs"));
    }
    Ok(())
}

fn has_gamma_c(g: &Graph, k: usize) -> bool {
    // The search returns a smallest set, so its size is γc when it exists.
    connected_dominating_set_within(g, k).is_some_and(|d| d.len() == k)
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3
        && g.is_connected()
        && (0..g.n()).all(|v| g.is_connected_within(g.vertices().without(v)))
}

/// Label map for `G - v`: vertex `w` of `G - v` is vertex `lift(v, w)` of `G`.
pub(crate) fn lift(removed: usize, set: VertexSet) -> VertexSet {
    let low = set.bits() & ((1u64 << removed) - 1);
    let high = (set.bits() & !((1u64 << removed) - 1)) << 1;
    VertexSet::from_bits(low | high)
}

/// γc(G) = k and γc(G + uv) < k for every non-edge `uv`.
pub fn is_k_gc_edge_critical(g: &Graph, k: usize) -> Result<bool> {
    require_connected(g, k)?;
    Ok(edge_critical_unchecked(g, k))
}

fn edge_critical_unchecked(g: &Graph, k: usize) -> bool {
    has_gamma_c(g, k)
        && g.non_edges().into_iter().all(|(u, v)| {
            let h = g.add_edge(u, v).expect("non-edge of g");
            connected_dominating_set_within(&h, k - 1).is_some()
        })
}

/// 2-connected, γc(G) = k and γc(G - v) < k for every vertex `v`.
pub fn is_k_gc_vertex_critical(g: &Graph, k: usize) -> Result<bool> {
    require_connected(g, k)?;
    Ok(vertex_critical_unchecked(g, k))
}

fn vertex_critical_unchecked(g: &Graph, k: usize) -> bool {
    is_two_connected(g)
        && has_gamma_c(g, k)
        && (0..g.n()).all(|v| {
            let h = g.delete_vertex(v).expect("vertex of g");
            debug_assert!(h.is_connected(), "2-connected graphs stay connected after one deletion");
            connected_dominating_set_within(&h, k - 1).is_some()
        })
}

/// Both k-γc-edge critical and k-γc-vertex critical.
pub fn is_maximal_k_gc_vertex_critical(g: &Graph, k: usize) -> Result<bool> {
    require_connected(g, k)?;
    Ok(vertex_critical_unchecked(g, k) && edge_critical_unchecked(g, k))
}

/// γt(G) = k and γt(G + uv) < k for every non-edge `uv`.
pub fn is_k_gt_edge_critical(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::parameter("criticality needs k >= 1"));
    }
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(Error::domain("total domination needs a graph without isolated vertices"));
    }
    let exact = total_dominating_set_within(g, k).is_some() && total_dominating_set_within(g, k - 1).is_none();
    Ok(exact
        && g.non_edges().into_iter().all(|(u, v)| {
            let h = g.add_edge(u, v).expect("non-edge of g");
            total_dominating_set_within(&h, k - 1).is_some()
        }))
}

/// Full criticality report at `k`. Each half stops collecting at its first
/// failing probe; the failure is described in `failure_reason`.
pub fn criticality_report(g: &Graph, k: usize) -> Result<CriticalityReport> {
    require_connected(g, k)?;
    let gc = gamma_c(g).value;
    let mut reasons = Vec::new();
    if gc != Some(k) {
        reasons.push(format!("gamma_c is {} not {k}", gc.map_or("undefined".into(), |v| v.to_string())));
    }

    let mut duv_witnesses = Vec::new();
    let mut edge_critical = gc == Some(k);
    if edge_critical {
        for (u, v) in g.non_edges() {
            let h = g.add_edge(u, v)?;
            let value = gamma_c(&h).value;
            if value.is_some_and(|x| x < k) {
                duv_witnesses.push(EdgeProbe {
                    u,
                    v,
                    gamma_c: value,
                    optima: all_gamma_c_sets(&h)?,
                });
            } else {
                edge_critical = false;
                reasons.push(format!("adding edge {u}-{v} leaves gamma_c at {}", value.unwrap_or(0)));
                break;
            }
        }
    }

    let mut dv_witnesses = Vec::new();
    let mut vertex_critical = gc == Some(k);
    if vertex_critical && !is_two_connected(g) {
        vertex_critical = false;
        reasons.push("not 2-connected".into());
    }
    if vertex_critical {
        for v in 0..g.n() {
            let h = g.delete_vertex(v)?;
            let value = gamma_c(&h).value;
            if value.is_some_and(|x| x < k) {
                let optima = all_gamma_c_sets(&h)?.into_iter().map(|d| lift(v, d)).collect();
                dv_witnesses.push(VertexProbe {
                    v,
                    gamma_c: value,
                    optima,
                });
            } else {
                vertex_critical = false;
                reasons.push(format!(
                    "deleting {v} leaves gamma_c at {}",
                    value.map_or("undefined".into(), |x| x.to_string())
                ));
                break;
            }
        }
    }

    Ok(CriticalityReport {
        graph6: to_graph6(g),
        k,
        gamma_c: gc,
        edge_critical,
        vertex_critical,
        maximal: edge_critical && vertex_critical,
        duv_witnesses,
        dv_witnesses,
        failure_reason: (!reasons.is_empty()).then(|| reasons.join("; ")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_g1, gen_g2, gen_g3, path, G2Params};

    #[test]
    fn edge_critical_examples() {
        assert!(is_k_gc_edge_critical(&cycle(5).unwrap(), 3).unwrap());
        assert!(!is_k_gc_edge_critical(&cycle(6).unwrap(), 3).unwrap());
        let g2 = gen_g2(&G2Params { alpha: 3, w_sizes: vec![1, 1, 1] }).unwrap();
        assert!(is_k_gc_edge_critical(&g2, 3).unwrap());
        assert!(is_k_gc_edge_critical(&complete(4).unwrap(), 1).unwrap());
        assert!(matches!(is_k_gc_edge_critical(&Graph::empty(2).unwrap(), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn vertex_critical_examples() {
        assert!(is_k_gc_vertex_critical(&cycle(5).unwrap(), 3).unwrap());
        assert!(!is_k_gc_vertex_critical(&path(4).unwrap(), 2).unwrap());
        assert!(is_k_gc_vertex_critical(&gen_g1(3).unwrap(), 3).unwrap());
    }

    #[test]
    fn maximal_examples() {
        assert!(is_maximal_k_gc_vertex_critical(&cycle(5).unwrap(), 3).unwrap());
        assert!(is_maximal_k_gc_vertex_critical(&gen_g3(3).unwrap(), 3).unwrap());
        assert!(!is_maximal_k_gc_vertex_critical(&complete(4).unwrap(), 3).unwrap());
    }

    #[test]
    fn total_edge_critical_examples() {
        assert!(is_k_gt_edge_critical(&cycle(5).unwrap(), 3).unwrap());
        assert!(!is_k_gt_edge_critical(&complete(4).unwrap(), 3).unwrap());
        assert!(!is_k_gt_edge_critical(&cycle(6).unwrap(), 3).unwrap());
        assert!(is_k_gt_edge_critical(&complete(1).unwrap(), 3).is_err());
    }

    #[test]
    fn report_for_c5() {
        let r = criticality_report(&cycle(5).unwrap(), 3).unwrap();
        assert!(r.edge_critical && r.vertex_critical && r.maximal);
        assert_eq!(r.duv_witnesses.len(), 5);
        assert_eq!(r.dv_witnesses.len(), 5);
        assert!(r.failure_reason.is_none());
        for p in &r.duv_witnesses {
            assert!(p.optima.iter().all(|d| d.len() == 2));
        }
        // C5 - 0 is the path 1-2-3-4 whose only γc-set is {2, 3}.
        assert_eq!(r.dv_witnesses[0].optima, vec![[2, 3].into_iter().collect()]);
    }

    #[test]
    fn report_records_failures() {
        let r = criticality_report(&path(4).unwrap(), 2).unwrap();
        assert!(!r.vertex_critical && !r.maximal);
        assert!(r.failure_reason.unwrap().contains("2-connected"));
        let r = criticality_report(&cycle(6).unwrap(), 3).unwrap();
        assert_eq!(r.gamma_c, Some(4));
        assert!(!r.edge_critical && !r.vertex_critical);
    }

    #[test]
    fn lift_restores_labels() {
        let s: VertexSet = [0, 2, 3].into_iter().collect();
        assert_eq!(lift(2, s).to_vec(), vec![0, 3, 4]);
        assert_eq!(lift(0, s).to_vec(), vec![1, 3, 4]);
    }
}
