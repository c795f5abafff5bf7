//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All checks are exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use cdcrit::criticality::{is_k_gc_edge_critical, is_maximal_k_gc_vertex_critical};
use cdcrit::domination::gamma_c;
use cdcrit::enumeration::{enumerate_connected, enumerate_connected_up_to, enumerate_graphs, find_critical};
use cdcrit::generators::{cycle, gen_g1, gen_g2, gen_g3, gen_lemma_c1, is_in_class_g1, G2Params};
use cdcrit::hamiltonicity::{hamiltonian_path_between, is_hamiltonian_connected, is_hamiltonian_path};
use cdcrit::invariants::{clique_number, independence_number, vertex_connectivity};
use cdcrit::isomorphism::are_isomorphic;
use cdcrit::lemmas::{verify_cutset_lemmas, verify_duv_lemma, verify_dv_lemma, verify_ordering_lemma};
use cdcrit::theorems::{check_suite, explore_conjecture, TheoremId};
use cdcrit::{to_graph6, Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alpha_omega(g: &Graph) -> (usize, usize) {
    (independence_number(g).value, clique_number(g).value)
}

fn criterion_1() -> Outcome {
    let g1 = gen_g1(2).unwrap();
    ensure(are_isomorphic(&g1, &cycle(5).unwrap()).unwrap(), || "G1(2) is not C5".into())?;
    let g3 = gen_g3(3).unwrap();
    ensure(g3.n() == 12, || format!("G3(3) has {} vertices", g3.n()))?;
    ensure((0..12).all(|v| g3.degree(v) == 7), || format!("G3(3) degrees {:?}", g3.degree_sequence()))?;
    Ok("G1(2) = C5; G3(3) is 7-regular on 12 vertices".into())
}

fn criterion_2() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = (2..=5).map(|l| (format!("G1({l})"), gen_g1(l).unwrap())).collect();
    graphs.extend((3..=4).map(|s| (format!("G3({s})"), gen_g3(s).unwrap())));
    for n in 1..=3 {
        for h in enumerate_graphs(n).unwrap() {
            graphs.push((format!("C1({})", to_graph6(&h)), gen_lemma_c1(&h).unwrap()));
        }
    }
    for (name, g) in &graphs {
        ensure(is_maximal_k_gc_vertex_critical(g, 3).unwrap(), || format!("{name} is not maximal 3-critical"))?;
    }
    Ok(format!("{} constructed graphs are maximal 3-gamma_c-vertex critical", graphs.len()))
}

fn criterion_3() -> Outcome {
    for l in 2..=6 {
        let g = gen_g1(l).unwrap();
        let (a, w) = alpha_omega(&g);
        ensure(a + w == g.n() - 1, || format!("G1({l}): alpha+omega={} n={}", a + w, g.n()))?;
        ensure(is_in_class_g1(&g).is_some(), || format!("G1({l}) not recognised"))?;
    }
    for alpha in [3, 4] {
        let g = gen_g2(&G2Params::minimal(alpha)).unwrap();
        let (a, w) = alpha_omega(&g);
        ensure(a == alpha && a + w == g.n(), || format!("G2 alpha={alpha}: alpha={a} omega={w} n={}", g.n()))?;
        ensure(is_k_gc_edge_critical(&g, 3).unwrap(), || format!("G2 alpha={alpha} not 3-edge critical"))?;
    }
    Ok("G1(2..6) attain alpha+omega=n-1 in G1; G2 minimal(3,4) attain alpha+omega=n".into())
}

fn criterion_4() -> Outcome {
    let stream = enumerate_connected_up_to(7).unwrap();
    let ids: Vec<TheoremId> = TheoremId::ALL.into_iter().filter(|&id| id != TheoremId::C4_10).collect();
    let suite = check_suite(&stream, &ids);
    let mut summary = Vec::new();
    for r in &suite.reports {
        ensure(r.passed(), || format!("{} violated on {:?}", r.theorem_id, r.violations))?;
        ensure(r.skipped.is_empty(), || format!("{} skipped {:?}", r.theorem_id, r.skipped))?;
        summary.push(format!("{}:{}", r.theorem_id, r.graphs_checked));
    }
    let five = find_critical(&enumerate_connected(5).unwrap(), 3);
    ensure(five.len() == 1 && are_isomorphic(&five[0], &cycle(5).unwrap()).unwrap(), || {
        format!("critical 5-vertex graphs: {:?}", five.iter().map(to_graph6).collect::<Vec<_>>())
    })?;
    Ok(format!("{} connected graphs, zero violations ({})", stream.len(), summary.join(" ")))
}

fn criterion_5() -> Outcome {
    let g = gen_g3(3).unwrap();
    let kappa = vertex_connectivity(&g).unwrap().value;
    let delta = g.min_degree().unwrap();
    ensure(kappa == 6 && delta == 7, || format!("kappa={kappa} delta={delta}"))?;
    let h = is_hamiltonian_connected(&g).unwrap();
    ensure(h.hamiltonian_connected, || format!("failing pair {:?}", h.failing_pair))?;
    Ok("G3(3): kappa=6 < delta=7, hamiltonian connected".into())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut compared = [0usize; 4];

    for _ in 0..200 {
        let g = common::random_connected(&mut rng, 8);
        let got = gamma_c(&g).value;
        ensure(got == common::gamma_c(&g), || format!("gamma_c mismatch on {}", to_graph6(&g)))?;
        compared[0] += 1;
    }
    for n in 1..=6 {
        for g in common::all_labelled(n).filter(Graph::is_connected) {
            let got = gamma_c(&g).value;
            ensure(got == common::gamma_c(&g), || format!("gamma_c mismatch on {}", to_graph6(&g)))?;
            compared[0] += 1;
        }
    }

    let mut kappa_graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    kappa_graphs.extend((0..200).map(|_| {
        let n = rand::Rng::gen_range(&mut rng, 1..=8);
        common::random_graph(&mut rng, n, 0.6)
    }));
    for g in &kappa_graphs {
        let got = vertex_connectivity(g).unwrap().value;
        ensure(got == common::kappa(g), || format!("kappa mismatch on {}", to_graph6(g)))?;
        compared[1] += 1;
    }

    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 1..=10);
        let g = common::random_graph(&mut rng, n, 0.5);
        let got = independence_number(&g).value;
        ensure(got == common::alpha(&g), || format!("alpha mismatch on {}", to_graph6(&g)))?;
        compared[2] += 1;
    }

    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 2..=8);
        let g = common::random_graph(&mut rng, n, 0.6);
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let w = hamiltonian_path_between(&g, u, v).unwrap();
                ensure(w.path.is_some() == common::ham_path(&g, u, v), || {
                    format!("hamiltonian mismatch on {} for {u}-{v}", to_graph6(&g))
                })?;
                if let Some(p) = w.path {
                    ensure(is_hamiltonian_path(&g, &p) && p[0] == u && p[n - 1] == v, || {
                        format!("invalid path {p:?} on {}", to_graph6(&g))
                    })?;
                }
                compared[3] += 1;
            }
        }
    }
    Ok(format!(
        "zero discrepancies: gamma_c {} graphs, kappa {} graphs, alpha {} graphs, hamiltonian {} pairs",
        compared[0], compared[1], compared[2], compared[3]
    ))
}

fn criterion_7() -> Outcome {
    let graphs = [
        ("C5", cycle(5).unwrap()),
        ("G1(3)", gen_g1(3).unwrap()),
        ("G1(4)", gen_g1(4).unwrap()),
        ("G3(3)", gen_g3(3).unwrap()),
    ];
    let mut checks = 0;
    let mut orderings = 0;
    for (name, g) in &graphs {
        for r in [
            verify_duv_lemma(g).unwrap(),
            verify_dv_lemma(g).unwrap().report,
            verify_cutset_lemmas(g).unwrap(),
        ] {
            ensure(r.passed(), || format!("{name} {}: {:?}", r.lemma, r.violations))?;
            checks += r.checks;
        }
        // The ordering statement needs an independent set of at least three vertices.
        for bits in 0u64..1 << g.n() {
            let i = VertexSet::from_bits(bits);
            if i.len() >= 3 && g.is_independent_set(i) {
                let r = verify_ordering_lemma(g, i).unwrap();
                ensure(r.witness.is_some(), || format!("{name}: no ordering for {i}"))?;
                orderings += 1;
            }
        }
    }
    Ok(format!("{checks} lemma checks and {orderings} orderings, zero violations"))
}

fn criterion_8() -> Outcome {
    let critical = find_critical(&enumerate_connected_up_to(7).unwrap(), 3);
    let r = explore_conjecture(&critical);
    println!("    conjecture report: {}", serde_json::to_string(&r).unwrap());
    ensure(r.passed(), || format!("counterexamples {:?}", r.violations))?;
    Ok(format!(
        "{} critical graphs on <= 7 vertices, {} with alpha=kappa=delta, all C5 or hamiltonian connected",
        critical.len(),
        r.graphs_checked
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("construction identities", criterion_1),
        ("criticality of constructed families", criterion_2),
        ("alpha+omega equality families", criterion_3),
        ("exhaustive theorem suites n <= 7", criterion_4),
        ("kappa < delta implies hamiltonian connected at G3(3)", criterion_5),
        ("oracle equivalences", criterion_6),
        ("lemma verifiers", criterion_7),
        ("conjecture explorer n <= 7", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
