//! Decompositions of regular bipartite graphs.

use crate::error::{Error, Result};
use crate::factorize::one_factorization_bipartite;
use crate::graph::{Bipartition, CloneTag, EdgeId, Graph, Side, Vertex, VertexMap};
use crate::star::{Decomposition, DoubleStar};

/// Decomposes an r-regular bipartite graph into S_{k1,k2} with
/// k1 + k2 + 1 = r: take a 1-factorization M_1, ..., M_r, use M_r edges as
/// central edges, and hang the M_1..M_k1 partners of the side-A endpoint
/// and the remaining partners of the side-B endpoint as pendants.
pub fn decompose_regular_bipartite(g: &Graph, k1: usize, k2: usize) -> Result<Decomposition> {
    let b = g.bipartition().ok_or(Error::NotBipartite)?;
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if k1 == 0 || k2 == 0 || k1 + k2 + 1 != r {
        return Err(Error::BadShape);
    }
    let factors = one_factorization_bipartite(g, &b)?;
    let central = &factors[r - 1];
    let mut stars = Vec::with_capacity(g.vertex_count() / 2);
    let central_ids: Vec<EdgeId> = central.edges().to_vec();
    for e in central_ids {
        let (p, q) = g.endpoints(e).expect("1-factor edge is live");
        let (u1, u2) = if b.side[p] == Side::A { (p, q) } else { (q, p) };
        let x = (0..k1).map(|j| factors[j].partner(g, u1).expect("1-factor covers u1")).collect();
        let y = (k1..r - 1)
            .map(|j| factors[j].partner(g, u2).expect("1-factor covers u2"))
            .collect();
        stars.push(DoubleStar { u1, u2, central: e, x, y });
    }
    Ok(Decomposition::new(stars, [(k1, k2)], "bipartite"))
}

/// Decomposes an r-regular bipartite graph when k1 + k2 + 1 divides r, by
/// bundling the 1-factors into (k1+k2+1)-regular spanning pieces.
pub fn decompose_bipartite_divisible(g: &Graph, k1: usize, k2: usize) -> Result<Decomposition> {
    let b = g.bipartition().ok_or(Error::NotBipartite)?;
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if k1 == 0 || k2 == 0 {
        return Err(Error::BadShape);
    }
    let s = k1 + k2 + 1;
    if r % s != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let factors = one_factorization_bipartite(g, &b)?;
    let mut stars = Vec::new();
    for bundle in factors.chunks(s) {
        let keep: Vec<EdgeId> = bundle.iter().flat_map(|m| m.edges().iter().copied()).collect();
        let piece = g.keep_edges(&keep)?;
        stars.extend(decompose_regular_bipartite(&piece, k1, k2)?.stars);
    }
    Ok(Decomposition::new(stars, [(k1, k2)], "bipartite-divisible"))
}

/// Decomposes an r-regular bipartite graph into a mix of S_{k1,k2} and
/// S_{l1,l2} whenever r = q * (k1+k2+1) + (l1+l2+1) for some q >= 1.
pub fn decompose_bipartite_two_sizes(
    g: &Graph,
    (k1, k2): (usize, usize),
    (l1, l2): (usize, usize),
) -> Result<Decomposition> {
    let b = g.bipartition().ok_or(Error::NotBipartite)?;
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if k1 == 0 || k2 == 0 || l1 == 0 || l2 == 0 {
        return Err(Error::BadShape);
    }
    let s = k1 + k2 + 1;
    let t = l1 + l2 + 1;
    if r <= t || (r - t) % s != 0 {
        return Err(Error::NoValidSplit);
    }
    let q = (r - t) / s;
    let factors = one_factorization_bipartite(g, &b)?;
    let mut stars = Vec::new();
    for i in 0..q {
        let keep: Vec<EdgeId> = factors[i * s..(i + 1) * s]
            .iter()
            .flat_map(|m| m.edges().iter().copied())
            .collect();
        let piece = g.keep_edges(&keep)?;
        stars.extend(decompose_regular_bipartite(&piece, k1, k2)?.stars);
    }
    let keep: Vec<EdgeId> =
        factors[q * s..].iter().flat_map(|m| m.edges().iter().copied()).collect();
    let piece = g.keep_edges(&keep)?;
    stars.extend(decompose_regular_bipartite(&piece, l1, l2)?.stars);
    let mut shapes = vec![(k1, k2), (l1, l2)];
    shapes.dedup();
    Ok(Decomposition::new(stars, shapes, "bipartite-two-sizes"))
}

/// Splits every vertex of a bipartite graph whose degrees are all divisible
/// by r into clones of degree exactly r. The i-th clone of v receives the
/// i-th block of r edges of v's adjacency in ascending neighbor order.
/// Edges of the result appear in the same order as `g.live_edges()`, so the
/// i-th edge of the split graph corresponds to `g.live_edge_ids()[i]`.
/// Vertices of degree zero are dropped.
pub fn split_vertices(g: &Graph, b: &Bipartition, r: usize) -> Result<(Graph, VertexMap)> {
    assert!(r >= 1);
    if !b.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) % r != 0 {
            return Err(Error::DegreeNotDivisible(v));
        }
    }
    // Assign clone ids in vertex order, clone index ascending.
    let mut first_clone = vec![0usize; g.vertex_count()];
    let mut forward = Vec::new();
    for v in 0..g.vertex_count() {
        first_clone[v] = forward.len();
        for _ in 0..g.degree(v) / r {
            forward.push(v);
        }
    }
    // For each edge, the clone at endpoint v is determined by the edge's
    // rank in v's adjacency sorted by (neighbor, edge id).
    let mut clone_of_end: Vec<[Vertex; 2]> = vec![[0, 0]; g.edge_id_bound()];
    for v in 0..g.vertex_count() {
        let mut inc: Vec<(Vertex, EdgeId)> = g.adjacency(v).to_vec();
        inc.sort_unstable();
        for (rank, &(_, e)) in inc.iter().enumerate() {
            let (p, _) = g.endpoints(e).expect("adjacency lists reference live edges");
            let slot = if p == v { 0 } else { 1 };
            clone_of_end[e][slot] = first_clone[v] + rank / r;
        }
    }
    let edges: Vec<(Vertex, Vertex)> =
        g.live_edge_ids().iter().map(|&e| (clone_of_end[e][0], clone_of_end[e][1])).collect();
    let h = Graph::build(forward.len(), &edges)?;
    let tag = vec![CloneTag::SplitClone; forward.len()];
    Ok((h, VertexMap { forward, tag }))
}

/// Decomposes a bipartite graph, all of whose degrees are divisible by
/// r = k1 + k2 + 1, by splitting vertices into degree-r clones, decomposing
/// the resulting r-regular bipartite graph, and mapping clones back.
pub fn decompose_bipartite_degree_divisible(
    g: &Graph,
    k1: usize,
    k2: usize,
) -> Result<Decomposition> {
    if k1 == 0 || k2 == 0 {
        return Err(Error::BadShape);
    }
    let b = g.bipartition().ok_or(Error::NotBipartite)?;
    let r = k1 + k2 + 1;
    let (h, map) = split_vertices(g, &b, r)?;
    let live = g.live_edge_ids();
    let d = decompose_regular_bipartite(&h, k1, k2)?;
    let back = |(w, e): (Vertex, EdgeId)| (map.forward[w], live[e]);
    let stars = d
        .stars
        .into_iter()
        .map(|s| DoubleStar {
            u1: map.forward[s.u1],
            u2: map.forward[s.u2],
            central: live[s.central],
            x: s.x.into_iter().map(back).collect(),
            y: s.y.into_iter().map(back).collect(),
        })
        .collect();
    Ok(Decomposition::new(stars, [(k1, k2)], "bipartite-degree-divisible"))
}
