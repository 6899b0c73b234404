//! Seeded graph family generators. All randomized generators use ChaCha8
//! keyed by the caller's 64-bit seed, so corpora are byte-stable across
//! builds and platforms.

use crate::error::{Error, Result};
use crate::factorize::Matching;
use crate::graph::{Bipartition, Graph, Side, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("complete graph is simple")
}

/// Complete bipartite graph; side A is `0..a`, side B is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::build(a + b, &edges).expect("complete bipartite graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<(Vertex, Vertex)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::build(n, &edges).expect("cycle is simple")
}

/// Circulant graph on `n` vertices with the given connection offsets.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let mut seen = std::collections::HashSet::new();
    for &d in offsets {
        if d == 0 || d > n / 2 || !seen.insert(d) {
            return Err(Error::BadOffsets);
        }
    }
    let mut pairs = std::collections::HashSet::new();
    let mut edges = Vec::new();
    let mut sorted = offsets.to_vec();
    sorted.sort_unstable();
    for d in sorted {
        for v in 0..n {
            let w = (v + d) % n;
            let key = (v.min(w), v.max(w));
            if pairs.insert(key) {
                edges.push(key);
            }
        }
    }
    Graph::build(n, &edges)
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for v in 0..5 {
        edges.push((v, (v + 1) % 5));
    }
    for v in 0..5 {
        edges.push((5 + v, 5 + (v + 2) % 5));
    }
    for v in 0..5 {
        edges.push((v, 5 + v));
    }
    Graph::build(10, &edges).unwrap()
}

/// Random r-regular graph by the stub-pairing (configuration) model with
/// rejection of loops and parallel edges; stuck attempts restart, capped at
/// 1000 attempts.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n * r % 2 != 0 {
        return Err(Error::ParityViolated);
    }
    if r >= n {
        return Err(Error::GenerationFailed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..1000 {
        let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat(v).take(r)).collect();
        stubs.shuffle(&mut rng);
        let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(n * r / 2);
        let mut present = std::collections::HashSet::new();
        while !stubs.is_empty() {
            let u = stubs[0];
            // Pair the first stub with a random compatible partner.
            let candidates: Vec<usize> = (1..stubs.len())
                .filter(|&i| {
                    let w = stubs[i];
                    w != u && !present.contains(&(u.min(w), u.max(w)))
                })
                .collect();
            let Some(&pick) = candidates.as_slice().choose(&mut rng) else {
                continue 'attempt;
            };
            let w = stubs[pick];
            present.insert((u.min(w), u.max(w)));
            edges.push((u, w));
            stubs.swap_remove(pick);
            stubs.swap_remove(0);
        }
        let g = Graph::build(n, &edges)?;
        debug_assert_eq!(g.is_regular(), Some(r));
        return Ok(g);
    }
    Err(Error::GenerationFailed)
}

/// Random r-regular bipartite graph on sides of size m as a union of r
/// collision-free random permutations A -> B, with per-round restarts
/// (cap 1000). Side A is `0..m`, side B is `m..2m`.
pub fn random_regular_bipartite(m: usize, r: usize, seed: u64) -> Result<(Graph, Bipartition)> {
    assert!(r <= m, "r must not exceed the side size");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = std::collections::HashSet::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m * r);
    for _round in 0..r {
        let round_edges = 'retry: {
            for _ in 0..1000 {
                if let Some(es) = random_permutation_round(m, &present, &mut rng) {
                    break 'retry es;
                }
            }
            return Err(Error::GenerationFailed);
        };
        for &(a, b) in &round_edges {
            present.insert((a, b));
            edges.push((a, b));
        }
    }
    let g = Graph::build(2 * m, &edges)?;
    debug_assert_eq!(g.is_regular(), Some(r));
    let side = (0..2 * m).map(|v| if v < m { Side::A } else { Side::B }).collect();
    Ok((g, Bipartition { side }))
}

/// One collision-free permutation round, built by random sequential
/// assignment; `None` on a dead end.
fn random_permutation_round(
    m: usize,
    present: &std::collections::HashSet<(Vertex, Vertex)>,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<(Vertex, Vertex)>> {
    let mut taken = vec![false; m];
    let mut out = Vec::with_capacity(m);
    for a in 0..m {
        let free: Vec<usize> = (0..m)
            .filter(|&b| !taken[b] && !present.contains(&(a, m + b)))
            .collect();
        let &b = free.as_slice().choose(rng)?;
        taken[b] = true;
        out.push((a, m + b));
    }
    Some(out)
}

/// Random r-regular 1-factorable graph on n vertices (n even), built as a
/// union of r collision-free random perfect matchings; the matchings are
/// returned as a known 1-factorization.
pub fn random_one_factorable(n: usize, r: usize, seed: u64) -> Result<(Graph, Vec<Matching>)> {
    if n % 2 != 0 {
        return Err(Error::ParityViolated);
    }
    if r >= n {
        return Err(Error::GenerationFailed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = std::collections::HashSet::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut factor_ranges = Vec::new();
    for _round in 0..r {
        let round_edges = 'retry: {
            for _ in 0..1000 {
                if let Some(es) = random_matching_round(n, &present, &mut rng) {
                    break 'retry es;
                }
            }
            return Err(Error::GenerationFailed);
        };
        let start = edges.len();
        for &(u, v) in &round_edges {
            present.insert((u.min(v), u.max(v)));
            edges.push((u, v));
        }
        factor_ranges.push(start..edges.len());
    }
    let g = Graph::build(n, &edges)?;
    let factors = factor_ranges
        .into_iter()
        .map(|range| Matching::new(&g, range.collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok((g, factors))
}

fn random_matching_round(
    n: usize,
    present: &std::collections::HashSet<(Vertex, Vertex)>,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<(Vertex, Vertex)>> {
    let mut taken = vec![false; n];
    let mut out = Vec::with_capacity(n / 2);
    for u in 0..n {
        if taken[u] {
            continue;
        }
        taken[u] = true;
        let free: Vec<usize> = (u + 1..n)
            .filter(|&v| !taken[v] && !present.contains(&(u, v)))
            .collect();
        let &v = free.as_slice().choose(rng)?;
        taken[v] = true;
        out.push((u, v));
    }
    Some(out)
}

/// Derives a per-instance seed from a corpus seed; used when generating
/// corpora in parallel or in fixed test orders.
pub fn derive_seed(corpus_seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(corpus_seed ^ index.wrapping_mul(0x9E3779B97F4A7C15));
    rng.gen()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(complete_graph(5).is_regular(), Some(4));
        let c = circulant(10, &[1, 2, 5]).unwrap();
        assert_eq!(c.is_regular(), Some(5));
        assert_eq!(circulant(6, &[4]), Err(Error::BadOffsets));
        assert_eq!(petersen().is_regular(), Some(3));
    }

    #[test]
    fn random_regular_properties() {
        let g = random_regular(8, 3, 7).unwrap();
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(g.edge_count(), 12);
        assert_eq!(random_regular(5, 3, 7), Err(Error::ParityViolated));
        let g = random_regular(6, 2, 7).unwrap();
        assert_eq!(g.is_regular(), Some(2));
        // dense case that defeats naive whole-graph rejection
        let g = random_regular(60, 10, 1).unwrap();
        assert_eq!(g.is_regular(), Some(10));
    }

    #[test]
    fn random_bipartite_properties() {
        let (g, b) = random_regular_bipartite(4, 3, 3).unwrap();
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(g.edge_count(), 12);
        assert!(b.is_valid_for(&g));
        // m == r forces the complete bipartite graph
        let (g, _) = random_regular_bipartite(3, 3, 5).unwrap();
        assert_eq!(g.edge_count(), 9);
        let (g, _) = random_regular_bipartite(8, 8, 11).unwrap();
        assert_eq!(g.edge_count(), 64);
    }

    #[test]
    fn determinism() {
        let a = random_regular(16, 4, 42).unwrap();
        let b = random_regular(16, 4, 42).unwrap();
        assert_eq!(a.live_edges(), b.live_edges());
        let (a, _) = random_regular_bipartite(10, 5, 42).unwrap();
        let (b, _) = random_regular_bipartite(10, 5, 42).unwrap();
        assert_eq!(a.live_edges(), b.live_edges());
    }

    #[test]
    fn one_factorable_generator() {
        let (g, factors) = random_one_factorable(10, 5, 9).unwrap();
        assert_eq!(g.is_regular(), Some(5));
        crate::factorize::validate_one_factorization(&g, &factors).unwrap();
    }
}
