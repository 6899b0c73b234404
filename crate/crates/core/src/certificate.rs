//! Edge-list file format and JSON certificates.
//!
//! Edge-list format: first line `n m`, then m lines `u v` with
//! 0 <= u < v < n, ASCII decimal, single spaces, LF line endings. Lines
//! starting with `#` are comments. Edge index i is the 0-based position of
//! the i-th edge line, which coincides with the graph's edge id when the
//! graph is built by [`parse_edge_list`].

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::star::{Decomposition, DoubleStar};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Parses the edge-list format into a graph whose edge ids equal file
/// positions.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    for line in lines {
        let (u, v) = parse_pair(line)?;
        if u >= v {
            return Err(Error::Parse(format!("edge line must satisfy u < v: {line:?}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {} edge lines follow",
            edges.len()
        )));
    }
    Graph::build(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split(' ');
    let a = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected two integers: {line:?}")))?;
    let b = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected two integers: {line:?}")))?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens on line: {line:?}")));
    }
    Ok((a, b))
}

/// Renders a graph in the edge-list format, edges in ascending id order
/// with min endpoint first.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (_, (u, v)) in g.live_edges() {
        let (a, b) = (u.min(v), u.max(v));
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Content hash of a graph: SHA-256 of its canonical edge-list rendering,
/// lowercase hex.
pub fn graph_hash(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update(write_edge_list(g).as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphStamp {
    pub n: usize,
    pub m: usize,
    pub hash: String,
}

/// The portable decomposition certificate. `central` and the second member
/// of each pendant pair are edge indices into the input file's edge order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub graph: GraphStamp,
    pub theorem: String,
    pub shapes: Vec<(usize, usize)>,
    pub stars: Vec<DoubleStar>,
}

impl Certificate {
    pub fn from_decomposition(g: &Graph, d: &Decomposition) -> Certificate {
        Certificate {
            graph: GraphStamp {
                n: g.vertex_count(),
                m: g.edge_count(),
                hash: graph_hash(g),
            },
            theorem: d.source.clone(),
            shapes: d.allowed_shapes.iter().copied().collect(),
            stars: d.stars.clone(),
        }
    }

    /// Checks the embedded stamp against a graph; a mismatch means the
    /// certificate belongs to a different graph.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        self.graph.n == g.vertex_count()
            && self.graph.m == g.edge_count()
            && self.graph.hash == graph_hash(g)
    }

    pub fn to_decomposition(&self) -> Decomposition {
        Decomposition::new(self.stars.clone(), self.shapes.iter().copied(), &self.theorem)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
