mod common;

use std::collections::HashSet;

use cdcrit::criticality::{is_k_gc_edge_critical, is_k_gc_vertex_critical, is_maximal_k_gc_vertex_critical};
use cdcrit::domination::all_gamma_c_sets;
use cdcrit::enumeration::{enumerate_connected_up_to, enumerate_graphs, find_critical};
use cdcrit::generators::{cycle, gen_lemma_c1};
use cdcrit::hamiltonicity::is_hamiltonian_connected;
use cdcrit::invariants::{independence_number, vertex_connectivity};
use cdcrit::isomorphism::are_isomorphic;
use cdcrit::theorems::{check_suite, TheoremId};
use cdcrit::{to_graph6, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least graph6 over all relabellings.
fn canonical(g: &Graph, perms: &[Vec<usize>]) -> String {
    perms.iter().map(|p| to_graph6(&g.permute(p).unwrap())).min().unwrap()
}

#[test]
fn enumeration_matches_canonical_recount() {
    for n in 1..=5 {
        let perms = permutations(n);
        let classes: HashSet<String> = common::all_labelled(n).map(|g| canonical(&g, &perms)).collect();
        let ours: Vec<String> = enumerate_graphs(n).unwrap().iter().map(|g| canonical(g, &perms)).collect();
        assert_eq!(ours.len(), classes.len(), "n={n}");
        assert_eq!(ours.iter().cloned().collect::<HashSet<_>>(), classes, "n={n}");
    }
}

#[test]
fn all_gamma_c_sets_match_brute_force() {
    for n in 1..=6 {
        for g in common::all_labelled(n).filter(Graph::is_connected) {
            let best = common::gamma_c(&g).unwrap();
            let expected: Vec<_> = common::subsets(n)
                .filter(|&d| d.len() == best && cdcrit::domination::is_connected_dominating(&g, d))
                .collect();
            let mut got = all_gamma_c_sets(&g).unwrap();
            got.sort_by_key(|d| d.bits());
            let mut expected = expected;
            expected.sort_by_key(|d| d.bits());
            assert_eq!(got, expected, "{}", to_graph6(&g));
        }
    }
}

#[test]
fn edge_criticality_matches_brute_force() {
    for g in enumerate_connected_up_to(6).unwrap() {
        let k = common::gamma_c(&g).unwrap();
        let edge = g.non_edges().iter().all(|&(u, v)| common::gamma_c(&g.add_edge(u, v).unwrap()).unwrap() < k);
        assert_eq!(is_k_gc_edge_critical(&g, k).unwrap(), edge, "{}", to_graph6(&g));
        let two_connected = g.n() >= 3 && (0..g.n()).all(|v| g.delete_vertex(v).unwrap().is_connected());
        let vertex = two_connected
            && (0..g.n()).all(|v| common::gamma_c(&g.delete_vertex(v).unwrap()).is_some_and(|x| x < k));
        assert_eq!(is_k_gc_vertex_critical(&g, k).unwrap(), vertex, "{}", to_graph6(&g));
    }
}

#[test]
fn critical_graphs_are_c5_or_three_connected() {
    let c5 = cycle(5).unwrap();
    for g in find_critical(&enumerate_connected_up_to(7).unwrap(), 3) {
        let is_c5 = g.n() == 5 && are_isomorphic(&g, &c5).unwrap();
        assert!(is_c5 || vertex_connectivity(&g).unwrap().value >= 3, "{}", to_graph6(&g));
    }
}

#[test]
fn chvatal_erdos_and_hamiltonian_connectivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let g = common::random_connected(&mut rng, 9);
        if g.n() < 4 {
            continue;
        }
        let kappa = vertex_connectivity(&g).unwrap().value;
        let hc = is_hamiltonian_connected(&g).unwrap().hamiltonian_connected;
        if independence_number(&g).value < kappa {
            assert!(hc, "{}", to_graph6(&g));
        }
        if hc {
            assert!(kappa >= 3, "{}", to_graph6(&g));
        }
    }
}

#[test]
fn lemma_c1_graphs_up_to_four_vertices_are_critical() {
    for n in 1..=4 {
        for h in enumerate_graphs(n).unwrap() {
            let g = gen_lemma_c1(&h).unwrap();
            assert!(is_maximal_k_gc_vertex_critical(&g, 3).unwrap(), "H = {}", to_graph6(&h));
        }
    }
}

#[test]
fn suites_are_independent_of_input_order() {
    let stream = enumerate_connected_up_to(6).unwrap();
    let mut shuffled = stream.clone();
    shuffled.rotate_left(stream.len() / 3);
    let a = serde_json::to_string(&check_suite(&stream, &TheoremId::ALL)).unwrap();
    let b = serde_json::to_string(&check_suite(&shuffled, &TheoremId::ALL)).unwrap();
    assert_eq!(a, b);
}
