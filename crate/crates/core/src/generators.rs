//! Standard graphs and the extremal critical families.
//!
//! Vertex layouts are fixed so that graph6 output is reproducible:
//!
//! | family            | layout                                              |
//! |-------------------|-----------------------------------------------------|
//! | `gen_g1(l)`       | `v`, `z_1..z_l`, `q_1..q_l`                         |
//! | `gen_g2(p)`       | `z`, `x_1..x_α`, then blocks `W_0, W_1, …, W_{α-1}` |
//! | `gen_g3(s)`       | blocks `R`, `T`, `W`, `Z` of `s` vertices each      |
//! | `gen_lemma_c1(h)` | `x`, `u_1..u_m`, `y`, `v_1..v_m`, `b`               |

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn capacity(what: &'static str, requested: usize) -> Result<()> {
    if requested > MAX_VERTICES {
        return Err(Error::Capacity {
            what,
            requested,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::parameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    capacity("cycle order", n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::parameter("path needs at least 1 vertex"));
    }
    capacity("path order", n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::parameter("complete graph needs at least 1 vertex"));
    }
    Ok(Graph::empty(n)?.complement())
}

/// `v ∨ K̄_l ∨ K_l` minus the matching `z_i q_i`.
pub fn gen_g1(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::domain(format!("the G1 family needs l >= 2, got {l}")));
    }
    capacity("G1 order", 2 * l + 1)?;
    let mut g = Graph::empty(2 * l + 1)?;
    let z = |i: usize| 1 + i;
    let q = |i: usize| 1 + l + i;
    for i in 0..l {
        g.link(0, z(i));
        for j in 0..l {
            if i != j {
                g.link(z(i), q(j));
            }
            if i < j {
                g.link(q(i), q(j));
            }
        }
    }
    Ok(g)
}

/// Parameters of a member of the G2 family: the independence number and
/// the sizes of the blocks `W_0, …, W_{α-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2Params {
    pub alpha: usize,
    pub w_sizes: Vec<usize>,
}

impl G2Params {
    /// The member with the smallest admissible blocks for `alpha`.
    pub fn minimal(alpha: usize) -> Self {
        let mut w_sizes = vec![1; alpha];
        w_sizes[0] = 0;
        // n = 1 + alpha + (alpha - 1) = 2 alpha, the least allowed order.
        G2Params { alpha, w_sizes }
    }

    pub fn n(&self) -> usize {
        1 + self.alpha + self.w_sizes.iter().sum::<usize>()
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha < 3 {
            return Err(Error::parameter(format!("G2 needs alpha >= 3, got {}", self.alpha)));
        }
        if self.w_sizes.len() != self.alpha {
            return Err(Error::parameter(format!(
                "G2 needs {} block sizes, got {}",
                self.alpha,
                self.w_sizes.len()
            )));
        }
        if let Some(i) = (1..self.alpha).find(|&i| self.w_sizes[i] == 0) {
            return Err(Error::parameter(format!("block W_{i} must be non-empty")));
        }
        let n = self.n();
        if n < 2 * self.alpha {
            return Err(Error::parameter(format!(
                "G2 needs n >= 2 alpha, got n = {n}, alpha = {}",
                self.alpha
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::parameter(format!("G2 order {n} exceeds {MAX_VERTICES}")));
        }
        Ok(())
    }
}

pub fn gen_g2(p: &G2Params) -> Result<Graph> {
    p.validate()?;
    let alpha = p.alpha;
    let mut g = Graph::empty(p.n())?;
    let z = 0;
    let x = |i: usize| i; // x_1..x_alpha occupy 1..=alpha
    let mut blocks = Vec::with_capacity(alpha);
    let mut next = 1 + alpha;
    for &size in &p.w_sizes {
        blocks.push(VertexSet::full(next + size).difference(VertexSet::full(next)));
        next += size;
    }
    let all_w = blocks.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
    let upper_w = blocks[1..].iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));

    for w in blocks[0] {
        g.link(z, w);
    }
    for i in 1..alpha {
        g.link(z, x(i));
    }
    for w in all_w {
        g.link(x(1), w);
    }
    for i in 2..=alpha {
        for w in upper_w.difference(blocks[i - 1]) {
            g.link(x(i), w);
        }
    }
    let ws = all_w.to_vec();
    for (a, &u) in ws.iter().enumerate() {
        for &v in &ws[a + 1..] {
            g.link(u, v);
        }
    }
    Ok(g)
}

/// Blocks `R`, `T`, `W`, `Z`, each of size `s`.
pub fn gen_g3(s: usize) -> Result<Graph> {
    if s < 3 {
        return Err(Error::parameter(format!("G3 needs s >= 3, got {s}")));
    }
    if 4 * s > MAX_VERTICES {
        return Err(Error::parameter(format!("G3 order {} exceeds {MAX_VERTICES}", 4 * s)));
    }
    let mut g = Graph::empty(4 * s)?;
    let (r, t, w, z) = (|i| i, |i| s + i, |i| 2 * s + i, |i| 3 * s + i);
    for i in 0..s {
        for j in 0..s {
            if j != i {
                g.link(r(i), t(j));
                g.link(t(i), w(j));
                g.link(w(i), z(j));
            }
            g.link(r(i), w(j));
            g.link(t(i), z(j));
            if i < j {
                g.link(r(i), r(j));
                g.link(z(i), z(j));
            }
        }
    }
    Ok(g)
}

/// `x ∨ H' ∨ H̄'` minus the matching `u_i v_i` and the edge `yb`, where
/// `H' = H + y` and `v_i`, `b` are the complement copies of `u_i`, `y`.
pub fn gen_lemma_c1(h: &Graph) -> Result<Graph> {
    let m = h.n();
    if m == 0 {
        return Err(Error::parameter("the join construction needs a graph with at least one vertex"));
    }
    capacity("join construction order", 2 * m + 3)?;
    let h_prime = h.disjoint_union(&Graph::empty(1)?)?;
    let x = Graph::empty(1)?;
    // x ∨ H' and H' ∨ H̄', but x is not joined to H̄'.
    let left = x.join(&h_prime)?;
    let mut g = left.disjoint_union(&h_prime.complement())?;
    for u in 1..=m + 1 {
        for v in m + 2..2 * m + 3 {
            if v - (m + 1) != u {
                g.link(u, v);
            }
        }
    }
    Ok(g)
}

/// If `g` is a member of the G1 family, its parameter `l`.
///
/// Membership is checked structurally: some vertex `v` of degree `l` has an
/// independent neighbourhood, the other `l` vertices form a clique, and the
/// non-adjacencies between `N(v)` and that clique form a perfect matching.
pub fn is_in_class_g1(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let l = (n - 1) / 2;
    (0..n).find_map(|v| {
        let nv = g.neighbors(v);
        if nv.len() != l || !g.is_independent_set(nv) {
            return None;
        }
        let q = g.vertices().difference(nv.with(v));
        if !g.is_clique(q) {
            return None;
        }
        let matched = nv.iter().all(|z| q.difference(g.neighbors(z)).len() == 1)
            && q.iter().all(|y| nv.difference(g.neighbors(y)).len() == 1);
        matched.then_some(l)
    })
}
