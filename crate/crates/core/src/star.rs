//! Double-stars, decompositions, and the independent verifier that certifies
//! every construction's output.

use crate::graph::{EdgeId, Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A double-star as an edge set: a central edge joining the two centers plus
/// pendant edges hanging from each center. An empty pendant set degenerates
/// the double-star to a single star, permitted only where the producing
/// construction's shape set says so.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleStar {
    pub u1: Vertex,
    pub u2: Vertex,
    pub central: EdgeId,
    /// Pendants hanging from `u1`, as `(pendant vertex, edge id)`.
    #[serde(rename = "X")]
    pub x: Vec<(Vertex, EdgeId)>,
    /// Pendants hanging from `u2`.
    #[serde(rename = "Y")]
    pub y: Vec<(Vertex, EdgeId)>,
}

impl DoubleStar {
    /// Shape as written: `(|X|, |Y|)`. Shape comparison elsewhere is
    /// unordered.
    pub fn shape(&self) -> (usize, usize) {
        (self.x.len(), self.y.len())
    }

    pub fn size(&self) -> usize {
        1 + self.x.len() + self.y.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        std::iter::once(self.central)
            .chain(self.x.iter().map(|&(_, e)| e))
            .chain(self.y.iter().map(|&(_, e)| e))
    }
}

/// Normalizes an unordered shape pair.
pub fn canonical_shape(shape: (usize, usize)) -> (usize, usize) {
    (shape.0.min(shape.1), shape.0.max(shape.1))
}

/// A list of double-stars intended to partition the edge set of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub stars: Vec<DoubleStar>,
    /// Allowed shapes, stored canonically (unordered pairs).
    pub allowed_shapes: BTreeSet<(usize, usize)>,
    /// Which construction produced it.
    pub source: String,
}

impl Decomposition {
    pub fn new<I>(stars: Vec<DoubleStar>, shapes: I, source: &str) -> Decomposition
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Decomposition {
            stars,
            allowed_shapes: shapes.into_iter().map(canonical_shape).collect(),
            source: source.to_string(),
        }
    }

    /// Multiset of canonical star shapes, sorted.
    pub fn shape_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.stars.iter().map(|s| canonical_shape(s.shape())).collect();
        v.sort_unstable();
        v
    }

    pub fn count_of_shape(&self, shape: (usize, usize)) -> usize {
        let c = canonical_shape(shape);
        self.stars.iter().filter(|s| canonical_shape(s.shape()) == c).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Star index, or `None` for whole-decomposition violations.
    pub star: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks that `d` is a genuine edge partition of `g` into double-stars of
/// the allowed shapes. Malformed input becomes violations, never a fault.
pub fn verify_decomposition(g: &Graph, d: &Decomposition) -> VerifyReport {
    let mut violations = Vec::new();
    let mut push = |star: Option<usize>, reason: String| violations.push(Violation { star, reason });

    // Edge multiset: every live edge exactly once, nothing unknown.
    let mut count = vec![0usize; g.edge_id_bound()];
    for (i, s) in d.stars.iter().enumerate() {
        for e in s.edge_ids() {
            if e >= count.len() || !g.has_edge_id(e) {
                push(Some(i), format!("references unknown edge index {e}"));
            } else {
                count[e] += 1;
            }
        }
    }
    for e in g.live_edge_ids() {
        match count[e] {
            0 => push(None, format!("edge {e} is not covered")),
            1 => {}
            c => push(None, format!("edge {e} is covered {c} times")),
        }
    }

    for (i, s) in d.stars.iter().enumerate() {
        verify_star(g, i, s, &mut push);
        let shape = canonical_shape(s.shape());
        if !d.allowed_shapes.contains(&shape) {
            push(Some(i), format!("shape {:?} is not in the allowed set", s.shape()));
        }
    }

    let valid = violations.is_empty();
    VerifyReport { valid, violations }
}

fn verify_star(
    g: &Graph,
    idx: usize,
    s: &DoubleStar,
    push: &mut impl FnMut(Option<usize>, String),
) {
    if s.u1 == s.u2 {
        push(Some(idx), "centers coincide".to_string());
        return;
    }
    match g.endpoints(s.central) {
        Some((a, b)) if (a, b) == (s.u1.min(s.u2), s.u1.max(s.u2)) => {}
        Some(_) => push(Some(idx), "central edge does not join the centers".to_string()),
        None => push(Some(idx), "central edge index unknown".to_string()),
    }
    for (label, center, pendants) in [("X", s.u1, &s.x), ("Y", s.u2, &s.y)] {
        for &(p, e) in pendants.iter() {
            match g.endpoints(e) {
                Some((a, b)) if (a, b) == (center.min(p), center.max(p)) && p != center => {}
                Some(_) => push(
                    Some(idx),
                    format!("{label}-edge {e} does not join center {center} to pendant {p}"),
                ),
                None => push(Some(idx), format!("{label}-edge index {e} unknown")),
            }
        }
    }
    // Centers and all pendant vertices must be pairwise distinct.
    let mut seen = BTreeSet::new();
    seen.insert(s.u1);
    seen.insert(s.u2);
    for &(p, _) in s.x.iter().chain(s.y.iter()) {
        if !seen.insert(p) {
            push(Some(idx), format!("vertex {p} appears more than once in the star"));
        }
    }
}
