//! Small-graph enumeration and graph streams.
//!
//! Graphs on up to seven vertices are generated internally, one per
//! isomorphism class, by adding edges one at a time: every graph with
//! `m + 1` edges arises from some graph with `m` edges, so extending each
//! class representative by each missing edge and rejecting isomorphs
//! reaches every class. Larger orders come in as graph6 files produced by
//! external generators.

use std::collections::HashMap;
use std::io::BufReader;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::criticality::{is_maximal_k_gc_vertex_critical, is_two_connected};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{read_graph6_lines, to_graph6};
use crate::isomorphism::isomorphism_unchecked;

/// Largest order generated internally.
pub const MAX_INTERNAL_ORDER: usize = 7;

fn check_internal_order(n: usize) -> Result<()> {
    if n > MAX_INTERNAL_ORDER {
        return Err(Error::Capacity {
            what: "internal enumeration order (use graph6 input from an external generator)",
            requested: n,
            limit: MAX_INTERNAL_ORDER,
        });
    }
    Ok(())
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, ordered by edge count and then by graph6 string.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    check_internal_order(n)?;
    let mut level = vec![Graph::empty(n)?];
    let mut out = level.clone();
    for _ in 0..n * n.saturating_sub(1) / 2 {
        let mut store: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            for (u, v) in g.non_edges() {
                let h = g.add_edge(u, v)?;
                // Edge count is the level itself, so the degree sequence
                // completes the bucket key.
                let bucket = store.entry(h.degree_sequence()).or_default();
                if bucket.iter().all(|r| isomorphism_unchecked(r, &h).is_none()) {
                    bucket.push(h);
                    next.push(h);
                }
            }
        }
        next.sort_by_cached_key(to_graph6);
        out.extend_from_slice(&next);
        level = next;
    }
    Ok(out)
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::parameter("enumeration needs n >= 1"));
    }
    Ok(enumerate_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Connected graphs on `1..=n` vertices.
pub fn enumerate_connected_up_to(n: usize) -> Result<Vec<Graph>> {
    check_internal_order(n)?;
    let mut out = Vec::new();
    for order in 1..=n {
        out.extend(enumerate_connected(order)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Internal enumeration on exactly `n` vertices.
    Internal { n: usize, connected_only: bool },
    /// Internal enumeration of connected graphs on `1..=n` vertices.
    InternalUpTo(usize),
    Graph6File(PathBuf),
    Graph6Stdin,
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Connected,
    TwoConnected,
    /// Maximal k-γc-vertex critical.
    MaximalCritical(usize),
}

impl Filter {
    fn keeps(self, g: &Graph) -> bool {
        match self {
            Filter::Connected => g.n() > 0 && g.is_connected(),
            Filter::TwoConnected => is_two_connected(g),
            Filter::MaximalCritical(k) => is_maximal_k_gc_vertex_critical(g, k).unwrap_or(false),
        }
    }
}

/// A source of graphs followed by a chain of filters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStream {
    pub source: Source,
    pub filters: Vec<Filter>,
}

impl GraphStream {
    pub fn new(source: Source) -> Self {
        GraphStream {
            source,
            filters: Vec::new(),
        }
    }

    pub fn from_graphs(graphs: Vec<Graph>) -> Self {
        GraphStream::new(Source::Graphs(graphs))
    }

    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    /// Materialises the stream in source order.
    pub fn collect(&self) -> Result<Vec<Graph>> {
        let graphs = match &self.source {
            Source::Internal { n, connected_only: true } => enumerate_connected(*n)?,
            Source::Internal { n, connected_only: false } => enumerate_graphs(*n)?,
            Source::InternalUpTo(n) => enumerate_connected_up_to(*n)?,
            Source::Graph6File(path) => {
                let file = std::fs::File::open(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                read_graph6_lines(BufReader::new(file))?
            }
            Source::Graph6Stdin => read_graph6_lines(std::io::stdin().lock())?,
            Source::Graphs(gs) => gs.clone(),
        };
        if self.filters.is_empty() {
            return Ok(graphs);
        }
        Ok(graphs
            .into_par_iter()
            .filter(|g| self.filters.iter().all(|f| f.keeps(g)))
            .collect())
    }
}

/// Stream members that are maximal k-γc-vertex critical, in stream order.
/// Disconnected members are skipped.
pub fn find_critical(stream: &[Graph], k: usize) -> Vec<Graph> {
    stream
        .par_iter()
        .filter(|g| Filter::Connected.keeps(g) && Filter::MaximalCritical(k).keeps(g))
        .copied()
        .collect()
}
