//! Machine checks of the structural theorems over graph streams, and the
//! explorer for the open conjecture on maximal critical graphs with
//! `α = κ = δ`.
//!
//! Violations are data. Each check records per-graph outcomes; the summary
//! report lists violations, equality cases and skipped members, always in
//! graph6 order so the output does not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criticality::{is_k_gc_edge_critical, is_k_gt_edge_critical, is_maximal_k_gc_vertex_critical};
use crate::error::{Error, Result};
use crate::generators::{cycle, gen_g1, is_in_class_g1};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::hamiltonicity::{is_hamiltonian_connected, MAX_HAMILTONIAN_VERTICES};
use crate::invariants::{
    clique_number, independence_number, minimum_cut_sets, vertex_connectivity, MAX_CUT_ENUMERATION_VERTICES,
};
use crate::isomorphism::are_isomorphic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T3.3")]
    T3_3,
    #[serde(rename = "T3.5")]
    T3_5,
    #[serde(rename = "C3.6")]
    C3_6,
    #[serde(rename = "C3.7")]
    C3_7,
    #[serde(rename = "T4.1")]
    T4_1,
    #[serde(rename = "T4.7")]
    T4_7,
    #[serde(rename = "C4.8")]
    C4_8,
    #[serde(rename = "C4.10")]
    C4_10,
    #[serde(rename = "OBS2.13")]
    Obs2_13,
    #[serde(rename = "EQV-GT")]
    EqvGt,
    #[serde(rename = "T2.4")]
    T2_4,
    #[serde(rename = "L2.5")]
    L2_5,
    /// The open conjecture. Not part of [`TheoremId::ALL`].
    #[serde(rename = "CONJ")]
    Conjecture,
}

impl TheoremId {
    /// Every proved result, in suite order.
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T3_3,
        TheoremId::T3_5,
        TheoremId::C3_6,
        TheoremId::C3_7,
        TheoremId::T4_1,
        TheoremId::T4_7,
        TheoremId::C4_8,
        TheoremId::C4_10,
        TheoremId::Obs2_13,
        TheoremId::EqvGt,
        TheoremId::T2_4,
        TheoremId::L2_5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T3_3 => "T3.3",
            TheoremId::T3_5 => "T3.5",
            TheoremId::C3_6 => "C3.6",
            TheoremId::C3_7 => "C3.7",
            TheoremId::T4_1 => "T4.1",
            TheoremId::T4_7 => "T4.7",
            TheoremId::C4_8 => "C4.8",
            TheoremId::C4_10 => "C4.10",
            TheoremId::Obs2_13 => "OBS2.13",
            TheoremId::EqvGt => "EQV-GT",
            TheoremId::T2_4 => "T2.4",
            TheoremId::L2_5 => "L2.5",
            TheoremId::Conjecture => "CONJ",
        }
    }

    /// Whether a violation means a bug rather than a finding.
    pub fn is_proved(self) -> bool {
        self != TheoremId::Conjecture
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T3_3 => "alpha <= delta",
            TheoremId::T3_5 => "alpha + omega <= n - 1, equality iff in G1",
            TheoremId::C3_6 => "alpha * omega <= floor((n-1)/2) * ceil((n-1)/2), square equality iff in G1",
            TheoremId::C3_7 => "omega <= n - 3, equality iff C5",
            TheoremId::T4_1 => "alpha <= kappa",
            TheoremId::T4_7 => "alpha = kappa: every minimum cut leaves a singleton component",
            TheoremId::C4_8 => "alpha = kappa implies kappa = delta",
            TheoremId::C4_10 => "kappa < delta implies hamiltonian connected",
            TheoremId::Obs2_13 => "kappa <= 3 or n <= 8: alpha <= delta and both bounds, equality in G1",
            TheoremId::EqvGt => "3-gamma_c-edge critical iff 3-gamma_t-edge critical",
            TheoremId::T2_4 => "3-gamma_t-edge critical: alpha <= delta + 2",
            TheoremId::L2_5 => "alpha = delta + 2: closed neighbourhoods of minimum degree vertices are cliques, one such vertex",
            TheoremId::Conjecture => "alpha = kappa = delta implies C5 or hamiltonian connected",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .chain([TheoremId::Conjecture])
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::parameter(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityCase {
    pub graph6: String,
    /// Whether the graph lies in the class the equality characterises.
    pub in_class: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Violation,
    Skipped,
}

/// One graph checked against one theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub theorem_id: TheoremId,
    pub graph6: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_case: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub graphs_checked: usize,
    pub violations: Vec<Finding>,
    pub equality_cases: Vec<EqualityCase>,
    /// Members satisfying the hypothesis but beyond a solver's size cap.
    pub skipped: Vec<Finding>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reports in the requested order together with every per-graph record,
/// sorted by graph6 and then by theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub reports: Vec<TheoremReport>,
    pub records: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Copy)]
struct Basic {
    n: usize,
    alpha: usize,
    omega: usize,
    kappa: usize,
    delta: usize,
}

/// Per-graph facts, computed at most once and only when some check asks.
struct Facts<'a> {
    g: &'a Graph,
    graph6: String,
    connected: bool,
    maximal: OnceLock<bool>,
    basic: OnceLock<Basic>,
    gc_edge: OnceLock<bool>,
    gt_edge: OnceLock<bool>,
    in_g1: OnceLock<bool>,
}

impl<'a> Facts<'a> {
    fn new(g: &'a Graph) -> Self {
        Facts {
            g,
            graph6: to_graph6(g),
            connected: g.n() > 0 && g.is_connected(),
            maximal: OnceLock::new(),
            basic: OnceLock::new(),
            gc_edge: OnceLock::new(),
            gt_edge: OnceLock::new(),
            in_g1: OnceLock::new(),
        }
    }

    fn maximal(&self) -> bool {
        *self
            .maximal
            .get_or_init(|| self.connected && is_maximal_k_gc_vertex_critical(self.g, 3).unwrap_or(false))
    }

    /// Only called for non-empty graphs.
    fn basic(&self) -> Basic {
        *self.basic.get_or_init(|| Basic {
            n: self.g.n(),
            alpha: independence_number(self.g).value,
            omega: clique_number(self.g).value,
            kappa: vertex_connectivity(self.g).expect("non-empty graph").value,
            delta: self.g.min_degree().expect("non-empty graph"),
        })
    }

    fn gc_edge(&self) -> bool {
        *self
            .gc_edge
            .get_or_init(|| self.connected && is_k_gc_edge_critical(self.g, 3).unwrap_or(false))
    }

    /// False when γt is undefined.
    fn gt_edge(&self) -> bool {
        *self
            .gt_edge
            .get_or_init(|| is_k_gt_edge_critical(self.g, 3).unwrap_or(false))
    }

    fn in_g1(&self) -> bool {
        *self.in_g1.get_or_init(|| is_in_class_g1(self.g).is_some())
    }

    fn is_c5(&self) -> bool {
        self.g.n() == 5 && are_isomorphic(self.g, &cycle(5).expect("C5")).expect("n = 5")
    }
}

/// Result of one check on one graph whose hypothesis applied.
struct Check {
    outcome: Outcome,
    detail: Option<String>,
    equality_case: Option<bool>,
}

impl Check {
    fn from_problems(problems: Vec<String>, equality_case: Option<bool>) -> Self {
        Check {
            outcome: if problems.is_empty() { Outcome::Pass } else { Outcome::Violation },
            detail: (!problems.is_empty()).then(|| problems.join("; ")),
            equality_case,
        }
    }

    fn skipped(reason: String) -> Self {
        Check {
            outcome: Outcome::Skipped,
            detail: Some(reason),
            equality_case: None,
        }
    }
}

fn floor_ceil_product(n: usize) -> usize {
    let m = n - 1;
    (m / 2) * m.div_ceil(2)
}

/// `None` when the hypothesis of `id` does not apply to the graph.
fn evaluate(id: TheoremId, f: &Facts) -> Option<Check> {
    let mut problems = Vec::new();
    match id {
        TheoremId::EqvGt => {
            if !f.connected {
                return None;
            }
            let (gc, gt) = (f.gc_edge(), f.gt_edge());
            if gc != gt {
                problems.push(format!("3-gamma_c-edge critical is {gc} but 3-gamma_t-edge critical is {gt}"));
            }
            return Some(Check::from_problems(problems, None));
        }
        TheoremId::T2_4 => {
            if f.g.n() == 0 || !f.gt_edge() {
                return None;
            }
            let b = f.basic();
            if b.alpha > b.delta + 2 {
                problems.push(format!("alpha={} > delta+2={}", b.alpha, b.delta + 2));
            }
            return Some(Check::from_problems(problems, None));
        }
        TheoremId::L2_5 => {
            if !f.connected || !f.gc_edge() {
                return None;
            }
            let b = f.basic();
            if b.delta < 2 || b.alpha != b.delta + 2 {
                return None;
            }
            let low: Vec<usize> = f.g.vertices().iter().filter(|&x| f.g.degree(x) == b.delta).collect();
            for &x in &low {
                if !f.g.is_clique(f.g.closed_neighbors(x)) {
                    problems.push(format!("N[{x}] is not a clique"));
                }
            }
            if low.len() != 1 {
                problems.push(format!("{} vertices of minimum degree", low.len()));
            }
            return Some(Check::from_problems(problems, None));
        }
        _ => {}
    }

    if !f.maximal() {
        return None;
    }
    let b = f.basic();
    let n = b.n;
    let check = match id {
        TheoremId::T3_3 => {
            if b.alpha > b.delta {
                problems.push(format!("alpha={} > delta={}", b.alpha, b.delta));
            }
            Check::from_problems(problems, None)
        }
        TheoremId::T3_5 => {
            let sum = b.alpha + b.omega;
            if sum > n - 1 {
                problems.push(format!("alpha+omega={sum} > n-1={}", n - 1));
            }
            let equal = sum == n - 1;
            let in_class = f.in_g1();
            if equal != in_class {
                problems.push(format!("equality is {equal} but G1 membership is {in_class}"));
            }
            Check::from_problems(problems, equal.then_some(in_class))
        }
        TheoremId::C3_6 => {
            let (prod, bound) = (b.alpha * b.omega, floor_ceil_product(n));
            if prod > bound {
                problems.push(format!("alpha*omega={prod} > {bound}"));
            }
            let equal = n % 2 == 1 && prod == ((n - 1) / 2).pow(2);
            let in_class = f.in_g1();
            if equal != in_class {
                problems.push(format!("square equality is {equal} but G1 membership is {in_class}"));
            }
            Check::from_problems(problems, equal.then_some(in_class))
        }
        TheoremId::C3_7 => {
            if b.omega + 3 > n {
                problems.push(format!("omega={} > n-3", b.omega));
            }
            let equal = b.omega + 3 == n;
            let c5 = f.is_c5();
            if equal != c5 {
                problems.push(format!("equality is {equal} but isomorphism with C5 is {c5}"));
            }
            Check::from_problems(problems, equal.then_some(c5))
        }
        TheoremId::T4_1 => {
            if b.alpha > b.kappa {
                problems.push(format!("alpha={} > kappa={}", b.alpha, b.kappa));
            }
            Check::from_problems(problems, None)
        }
        TheoremId::T4_7 => {
            if b.alpha != b.kappa {
                return None;
            }
            if n > MAX_CUT_ENUMERATION_VERTICES {
                return Some(Check::skipped(format!("cut enumeration capped at {MAX_CUT_ENUMERATION_VERTICES} vertices")));
            }
            match minimum_cut_sets(f.g) {
                Ok(cuts) => {
                    for s in cuts {
                        let rest = f.g.vertices().difference(s);
                        if f.g.components_within(rest).iter().all(|c| c.len() != 1) {
                            problems.push(format!("cut {s} leaves no singleton component"));
                        }
                    }
                    Check::from_problems(problems, None)
                }
                Err(e) => Check::skipped(e.to_string()),
            }
        }
        TheoremId::C4_8 => {
            if b.alpha != b.kappa {
                return None;
            }
            if b.kappa != b.delta {
                problems.push(format!("kappa={} but delta={}", b.kappa, b.delta));
            }
            Check::from_problems(problems, None)
        }
        TheoremId::C4_10 => {
            if b.kappa >= b.delta {
                return None;
            }
            hamiltonian_check(f.g)
        }
        TheoremId::Obs2_13 => {
            if !(b.kappa <= 3 || n <= 8) {
                return None;
            }
            let (sum, prod, bound) = (b.alpha + b.omega, b.alpha * b.omega, floor_ceil_product(n));
            if b.alpha > b.delta {
                problems.push(format!("alpha={} > delta={}", b.alpha, b.delta));
            }
            if sum > n - 1 {
                problems.push(format!("alpha+omega={sum} > n-1={}", n - 1));
            }
            if prod > bound {
                problems.push(format!("alpha*omega={prod} > {bound}"));
            }
            let equal = sum == n - 1 || prod == bound;
            let in_class = equal && f.in_g1();
            if equal && !in_class {
                problems.push("equality case outside G1".into());
            }
            Check::from_problems(problems, equal.then_some(in_class))
        }
        TheoremId::Conjecture => {
            if !(b.alpha == b.kappa && b.kappa == b.delta) {
                return None;
            }
            if f.is_c5() {
                Check::from_problems(problems, None)
            } else {
                hamiltonian_check(f.g)
            }
        }
        TheoremId::EqvGt | TheoremId::T2_4 | TheoremId::L2_5 => unreachable!("handled above"),
    };
    Some(check)
}

fn hamiltonian_check(g: &Graph) -> Check {
    if g.n() > MAX_HAMILTONIAN_VERTICES {
        return Check::skipped(format!("Hamiltonian check capped at {MAX_HAMILTONIAN_VERTICES} vertices"));
    }
    match is_hamiltonian_connected(g) {
        Ok(h) if h.hamiltonian_connected => Check::from_problems(Vec::new(), None),
        Ok(h) => {
            let (u, v) = h.failing_pair.expect("failing pair for a non-hamiltonian-connected graph");
            Check::from_problems(vec![format!("no Hamiltonian path between {u} and {v}")], None)
        }
        Err(e) => Check::skipped(e.to_string()),
    }
}

/// Checks on the G1 family itself, attached to every T3.5 report.
fn g1_family_records() -> Vec<CheckRecord> {
    (2..=6)
        .map(|l| {
            let g = gen_g1(l).expect("valid l");
            let n = g.n();
            let sum = independence_number(&g).value + clique_number(&g).value;
            let in_class = is_in_class_g1(&g) == Some(l);
            let mut problems = Vec::new();
            if sum != n - 1 {
                problems.push(format!("G1({l}) has alpha+omega={sum}, not n-1={}", n - 1));
            }
            if !in_class {
                problems.push(format!("G1({l}) not recognised as a member of G1"));
            }
            let check = Check::from_problems(problems, Some(in_class));
            CheckRecord {
                theorem_id: TheoremId::T3_5,
                graph6: to_graph6(&g),
                outcome: check.outcome,
                detail: check.detail,
                equality_case: check.equality_case,
            }
        })
        .collect()
}

/// Runs several checks over one stream, sharing per-graph facts.
pub fn check_suite(stream: &[Graph], ids: &[TheoremId]) -> SuiteResult {
    let mut records: Vec<CheckRecord> = stream
        .par_iter()
        .flat_map_iter(|g| {
            let facts = Facts::new(g);
            ids.iter()
                .filter_map(|&id| {
                    evaluate(id, &facts).map(|c| CheckRecord {
                        theorem_id: id,
                        graph6: facts.graph6.clone(),
                        outcome: c.outcome,
                        detail: c.detail,
                        equality_case: c.equality_case,
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    if ids.contains(&TheoremId::T3_5) {
        records.extend(g1_family_records());
    }
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6).then(a.theorem_id.cmp(&b.theorem_id)));

    let reports = ids
        .iter()
        .map(|&id| {
            let mut report = TheoremReport {
                theorem_id: id,
                graphs_checked: 0,
                violations: Vec::new(),
                equality_cases: Vec::new(),
                skipped: Vec::new(),
            };
            for r in records.iter().filter(|r| r.theorem_id == id) {
                let finding = || Finding {
                    graph6: r.graph6.clone(),
                    detail: r.detail.clone().unwrap_or_default(),
                };
                match r.outcome {
                    Outcome::Skipped => report.skipped.push(finding()),
                    Outcome::Violation => {
                        report.graphs_checked += 1;
                        report.violations.push(finding());
                    }
                    Outcome::Pass => report.graphs_checked += 1,
                }
                if let Some(in_class) = r.equality_case {
                    report.equality_cases.push(EqualityCase {
                        graph6: r.graph6.clone(),
                        in_class,
                    });
                }
            }
            report
        })
        .collect();
    SuiteResult { reports, records }
}

/// Checks one theorem over a stream. The T3.5 report also covers the
/// G1 family for `l = 2..=6`.
pub fn check_theorem(stream: &[Graph], id: TheoremId) -> TheoremReport {
    check_suite(stream, &[id]).reports.remove(0)
}

/// Among maximal 3-γc-vertex critical members with `α = κ = δ`, each must
/// be C5 or hamiltonian connected. Counterexamples are findings.
pub fn explore_conjecture(stream: &[Graph]) -> TheoremReport {
    check_theorem(stream, TheoremId::Conjecture)
}
