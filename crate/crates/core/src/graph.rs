//! Dense bitset graphs on at most 64 vertices.
//!
//! A [`Graph`] stores one `u64` neighbourhood row per vertex. Every
//! operation that changes the graph returns a new value, so a graph can be
//! probed with thousands of `G + uv` / `G - v` variants without cloning
//! anything heavier than a fixed array.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host graph, stored as a bitset.
///
/// Sets order lexicographically by their sorted element lists, so
/// `{0, 3} < {0, 3, 4} < {1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Below the first differing vertex both sorted lists agree. The set
        // holding that vertex is smaller unless the other list ends there.
        let x = diff.trailing_zeros();
        let above = if x == 63 { 0 } else { u64::MAX << (x + 1) };
        let (holder, other_set) = if self.0 >> x & 1 == 1 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        if other_set & above == 0 {
            holder.reverse()
        } else {
            holder
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(items.into_iter().collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity("vertex count", n)?;
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood rows, validating symmetry,
    /// absence of loops and range.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        check_capacity("vertex count", n)?;
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let bad = (row & !full).trailing_zeros() as usize;
                return Err(Error::Index { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet::from_bits(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::domain(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbourhood rows `N(0), …, N(n-1)` as raw bitsets.
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    /// Open neighbourhood `N(v)`. Panics if `v >= n`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .ok_or_else(|| Error::domain("minimum degree of the empty graph"))
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.rows().iter().map(|r| r.count_ones() as usize).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows().contains(&0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered non-adjacent distinct pairs `(u, v)`, `u < v`, in
    /// lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let full = self.vertices().bits();
        for u in 0..self.n {
            let higher = full & !((2u64 << u).wrapping_sub(1));
            for v in VertexSet(higher & !self.adj[u]) {
                out.push((u, v));
            }
        }
        out
    }

    /// `N[D]`: every vertex in `d` or adjacent to a vertex of `d`.
    pub fn closed_neighborhood_of(&self, d: VertexSet) -> VertexSet {
        d.iter().fold(d, |acc, v| acc.union(VertexSet(self.adj[v])))
    }

    /// `N(D)`: every vertex adjacent to some vertex of `d`.
    pub fn open_neighborhood_of(&self, d: VertexSet) -> VertexSet {
        d.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(VertexSet(self.adj[v])))
    }

    /// The vertices reachable from `start` inside `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start).intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.reach_within(v, s) == s,
        }
    }

    /// Connectivity of the whole graph; the graph on zero vertices is
    /// connected by convention.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Vertex sets of the connected components of `G[s]`, ordered by least
    /// vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// `G + uv`. Adding an existing edge returns the same graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.link(u, v);
        Ok(g)
    }

    /// `G - uv`. Removing an absent edge returns the same graph.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    /// `G - v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().without(v)))
    }

    /// `G[s]`, relabelled in increasing order of original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if let Some(bad) = s.difference(self.vertices()).min() {
            return Err(Error::Index { vertex: bad, n: self.n });
        }
        Ok(self.induced(s))
    }

    fn induced(&self, s: VertexSet) -> Graph {
        let keep = s.to_vec();
        let mut g = Graph {
            n: keep.len(),
            adj: [0; MAX_VERTICES],
        };
        for (i, &old) in keep.iter().enumerate() {
            g.adj[i] = compress(self.adj[old], s.bits());
        }
        g
    }

    /// Complement: `uv` is an edge iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1u64 << v);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity("combined vertex count", n)?;
        let mut g = *self;
        g.n = n;
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// `G ∨ H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertices().bits();
        let right = g.vertices().bits() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabels the graph so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::parameter(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().filter(|&p| p < self.n).collect();
        if image != self.vertices() {
            return Err(Error::parameter("not a permutation of the vertex set"));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::Index { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            Err(Error::Loop(u))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&crate::graph6::to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        crate::graph6::from_graph6(s.as_bytes()).map_err(serde::de::Error::custom)
    }
}

fn check_capacity(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            what,
            requested: n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits (software
/// `pext`).
fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in VertexSet(mask).iter().enumerate() {
        out |= (row >> v & 1) << i;
    }
    out
}
