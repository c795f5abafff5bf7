//! Hamiltonian paths between fixed endpoints by dynamic programming over
//! vertex subsets.
//!
//! For a source `s`, `reach[S]` is the set of vertices `v` such that some
//! path starts at `s`, visits exactly `S ∪ {s}` and ends at `v`. One table
//! answers every target at once, which is what the all-pairs check uses.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the subset dynamic program.
pub const MAX_HAMILTONIAN_VERTICES: usize = 24;

/// A Hamiltonian path, or `None` when no path exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamWitness {
    pub path: Option<Vec<usize>>,
}

/// Result of the all-pairs check; `failing_pair` is the lexicographically
/// first pair `(u, v)`, `u < v`, not joined by a Hamiltonian path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamConnectivity {
    pub hamiltonian_connected: bool,
    pub failing_pair: Option<(usize, usize)>,
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() > MAX_HAMILTONIAN_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for the Hamiltonian path table",
            requested: g.n(),
            limit: MAX_HAMILTONIAN_VERTICES,
        });
    }
    if g.n() < 2 {
        return Err(Error::domain("Hamiltonian paths between two vertices need n >= 2"));
    }
    Ok(())
}

struct PathTable {
    source: usize,
    /// Position of each non-source vertex in the compressed subset index.
    slot: Vec<usize>,
    /// Endpoint bitsets indexed by compressed subsets of `V - s`.
    reach: Vec<u32>,
}

impl PathTable {
    fn build(g: &Graph, source: usize) -> Self {
        let n = g.n();
        let mut slot = vec![usize::MAX; n];
        let mut vertex_at = Vec::with_capacity(n - 1);
        for v in (0..n).filter(|&v| v != source) {
            slot[v] = vertex_at.len();
            vertex_at.push(v);
        }
        let rows: Vec<u32> = g.rows().iter().map(|&r| r as u32).collect();
        // Neighbourhoods in compressed coordinates, source excluded.
        let packed: Vec<u32> = (0..n)
            .map(|v| {
                vertex_at
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| rows[v] >> w & 1 == 1)
                    .fold(0u32, |acc, (i, _)| acc | 1 << i)
            })
            .collect();

        let mut reach = vec![0u32; 1usize << (n - 1)];
        reach[0] = 1 << source;
        for mask in 0..reach.len() {
            let mut ends = reach[mask];
            while ends != 0 {
                let v = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                let mut step = packed[v] & !(mask as u32);
                while step != 0 {
                    let i = step.trailing_zeros() as usize;
                    step &= step - 1;
                    reach[mask | 1 << i] |= 1 << vertex_at[i];
                }
            }
        }
        PathTable { source, slot, reach }
    }

    fn full(&self) -> usize {
        self.reach.len() - 1
    }

    fn endpoints(&self) -> u32 {
        self.reach[self.full()]
    }

    fn reconstruct(&self, g: &Graph, target: usize) -> Option<Vec<usize>> {
        let mut mask = self.full();
        if self.reach[mask] >> target & 1 == 0 {
            return None;
        }
        let mut path = vec![target];
        let mut current = target;
        while mask != 0 {
            let prev_mask = mask & !(1 << self.slot[current]);
            let candidates = self.reach[prev_mask] & g.neighbors(current).bits() as u32;
            let prev = candidates.trailing_zeros() as usize;
            debug_assert!(candidates != 0);
            path.push(prev);
            current = prev;
            mask = prev_mask;
        }
        debug_assert_eq!(current, self.source);
        path.reverse();
        Some(path)
    }
}

pub fn hamiltonian_path_between(g: &Graph, u: usize, v: usize) -> Result<HamWitness> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::domain("Hamiltonian path endpoints must differ"));
    }
    check_order(g)?;
    let table = PathTable::build(g, u);
    Ok(HamWitness {
        path: table.reconstruct(g, v),
    })
}

pub fn is_hamiltonian_connected(g: &Graph) -> Result<HamConnectivity> {
    check_order(g)?;
    let n = g.n();
    let failing_pair = (0..n - 1)
        .into_par_iter()
        .filter_map(|s| {
            let ends = PathTable::build(g, s).endpoints();
            (s + 1..n).find(|&t| ends >> t & 1 == 0).map(|t| (s, t))
        })
        .min();
    Ok(HamConnectivity {
        hamiltonian_connected: failing_pair.is_none(),
        failing_pair,
    })
}

/// Checks that `path` visits every vertex once along edges of `g`.
pub fn is_hamiltonian_path(g: &Graph, path: &[usize]) -> bool {
    let mut seen = crate::graph::VertexSet::EMPTY;
    for &v in path {
        if v >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    seen == g.vertices() && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
