//! Graph isomorphism for small graphs: colour refinement followed by
//! backtracking inside the refined classes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the isomorphism test.
pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// A bijection `map` with `uv ∈ E(g) ⇔ map[u]map[v] ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for graph in [g, h] {
        if graph.n() > MAX_ISOMORPHISM_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count for isomorphism testing",
                requested: graph.n(),
                limit: MAX_ISOMORPHISM_VERTICES,
            });
        }
    }
    Ok(isomorphism_unchecked(g, h))
}

pub(crate) fn isomorphism_unchecked(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (gc, hc) = refine(g, h)?;
    let n = g.n();

    // Match rare colours first, then follow adjacency so that constraints
    // bite early.
    let mut class_size = BTreeMap::<usize, usize>::new();
    for &c in &gc {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let frontier = g.open_neighborhood_of(placed).difference(placed);
        let pool = if frontier.is_empty() {
            g.vertices().difference(placed)
        } else {
            frontier
        };
        let v = pool
            .iter()
            .min_by_key(|&v| (class_size[&gc[v]], v))
            .expect("unplaced vertex");
        placed.insert(v);
        order.push(v);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    backtrack(g, h, &gc, &hc, &order, 0, &mut map, &mut used).then_some(map)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &Graph,
    h: &Graph,
    gc: &[usize],
    hc: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in h.vertices().difference(*used) {
        if hc[w] != gc[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if backtrack(g, h, gc, hc, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

/// Joint colour refinement of both graphs with shared colour names.
/// Returns `None` as soon as the colour histograms differ.
fn refine(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut gc: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut hc: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut classes = count_classes(&gc);
    loop {
        let mut names = BTreeMap::<(usize, Vec<usize>), usize>::new();
        let signature = |graph: &Graph, colours: &[usize], v: usize| {
            let mut around: Vec<usize> = graph.neighbors(v).iter().map(|u| colours[u]).collect();
            around.sort_unstable();
            (colours[v], around)
        };
        let gsig: Vec<_> = (0..g.n()).map(|v| signature(g, &gc, v)).collect();
        let hsig: Vec<_> = (0..h.n()).map(|v| signature(h, &hc, v)).collect();
        for s in gsig.iter().chain(&hsig) {
            let next = names.len();
            names.entry(s.clone()).or_insert(next);
        }
        let gnew: Vec<usize> = gsig.iter().map(|s| names[s]).collect();
        let hnew: Vec<usize> = hsig.iter().map(|s| names[s]).collect();
        if histogram(&gnew) != histogram(&hnew) {
            return None;
        }
        let next_classes = count_classes(&gnew);
        gc = gnew;
        hc = hnew;
        if next_classes == classes {
            return Some((gc, hc));
        }
        classes = next_classes;
    }
}

fn histogram(colours: &[usize]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for &c in colours {
        *out.entry(c).or_default() += 1;
    }
    out
}

fn count_classes(colours: &[usize]) -> usize {
    histogram(colours).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_g1, path};

    #[test]
    fn examples() {
        assert!(are_isomorphic(&gen_g1(2).unwrap(), &cycle(5).unwrap()).unwrap());
        let c5 = cycle(5).unwrap();
        let map = find_isomorphism(&c5, &c5.complement()).unwrap().unwrap();
        for (u, v) in c5.edges() {
            assert!(c5.complement().has_edge(map[u], map[v]));
        }
        assert!(!are_isomorphic(&path(4).unwrap(), &cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // Two 2-regular graphs on 6 vertices: C6 and two disjoint triangles.
        let triangles = complete(3).unwrap().disjoint_union(&complete(3).unwrap()).unwrap();
        assert!(!are_isomorphic(&cycle(6).unwrap(), &triangles).unwrap());
        // K3,3 and the prism are both 3-regular on 6 vertices.
        let k33 = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!are_isomorphic(&k33, &prism).unwrap());
    }

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let g = gen_g1(3).unwrap();
        let perm = [6, 2, 4, 0, 1, 5, 3];
        assert!(are_isomorphic(&g, &g.permute(&perm).unwrap()).unwrap());
    }

    #[test]
    fn capacity_limit() {
        let g = cycle(13).unwrap();
        assert!(matches!(are_isomorphic(&g, &g), Err(Error::Capacity { .. })));
    }
}
