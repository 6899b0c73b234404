//! Orientations and factorizations: Eulerian orientation, 1-factorization of
//! regular bipartite graphs, 2-factorization of even-regular graphs, and
//! regular spanning splits.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Graph, Side, Vertex};

/// A direction assignment for every live edge of an underlying graph,
/// stored as the tail vertex per edge id.
#[derive(Debug, Clone)]
pub struct Orientation {
    tail: Vec<Option<Vertex>>,
    /// Per-vertex out-neighbors `(head, edge id)`, ascending edge id.
    out_adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Orientation {
    /// Builds from an explicit tail assignment covering every live edge.
    pub fn from_tails(g: &Graph, tail: Vec<Option<Vertex>>) -> Orientation {
        let mut out_adj = vec![Vec::new(); g.vertex_count()];
        for (e, (u, v)) in g.live_edges() {
            let t = tail[e].expect("every live edge must be oriented");
            debug_assert!(t == u || t == v);
            let head = if t == u { v } else { u };
            out_adj[t].push((head, e));
        }
        Orientation { tail, out_adj }
    }

    pub fn tail(&self, e: EdgeId) -> Option<Vertex> {
        self.tail.get(e).copied().flatten()
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.out_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }
}

/// An edge set in which no two members share a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    /// Sorts and validates against the graph.
    pub fn new(g: &Graph, mut edges: Vec<EdgeId>) -> Result<Matching> {
        edges.sort_unstable();
        edges.dedup();
        let mut seen = vec![false; g.vertex_count()];
        for &e in &edges {
            let (u, v) = g.endpoints(e).ok_or(Error::UnknownEdgeIndex(e))?;
            if seen[u] || seen[v] {
                return Err(Error::NotPerfectMatching);
            }
            seen[u] = true;
            seen[v] = true;
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.edges.len() == g.vertex_count()
    }

    pub fn is_disjoint_from(&self, other: &Matching) -> bool {
        self.edges.iter().all(|e| !other.edges.contains(e))
    }

    /// The matched partner of `v`, with the matching edge id.
    pub fn partner(&self, g: &Graph, v: Vertex) -> Option<(Vertex, EdgeId)> {
        for &e in &self.edges {
            let (a, b) = g.endpoints(e)?;
            if a == v {
                return Some((b, e));
            }
            if b == v {
                return Some((a, e));
            }
        }
        None
    }
}

/// A spanning 2-regular subgraph together with its cycle list.
#[derive(Debug, Clone)]
pub struct TwoFactor {
    pub edges: Vec<EdgeId>,
    /// Cycles ordered by lowest vertex; each starts at its lowest vertex and
    /// proceeds toward the lower-indexed of the two neighbors.
    pub cycles: Vec<Vec<Vertex>>,
}

impl TwoFactor {
    /// Builds from an edge set that must be spanning and 2-regular.
    pub fn from_edges(g: &Graph, mut edges: Vec<EdgeId>) -> Result<TwoFactor> {
        edges.sort_unstable();
        edges.dedup();
        let n = g.vertex_count();
        let mut inc: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        for &e in &edges {
            let (u, v) = g.endpoints(e).ok_or(Error::UnknownEdgeIndex(e))?;
            inc[u].push((v, e));
            inc[v].push((u, e));
        }
        if inc.iter().any(|l| l.len() != 2) {
            return Err(Error::No2FactorFound);
        }
        let cycles = cycles_of_2regular(&inc);
        Ok(TwoFactor { edges, cycles })
    }
}

/// Extracts the canonical cycle list of a 2-regular incidence structure.
fn cycles_of_2regular(inc: &[Vec<(Vertex, EdgeId)>]) -> Vec<Vec<Vertex>> {
    let n = inc.len();
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if visited[start] || inc[start].is_empty() {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        // Head toward the lower-indexed neighbor first.
        let (mut cur, mut via) = {
            let mut nbrs = [inc[start][0], inc[start][1]];
            nbrs.sort_unstable();
            nbrs[0]
        };
        while cur != start {
            visited[cur] = true;
            cycle.push(cur);
            let next = inc[cur]
                .iter()
                .copied()
                .find(|&(_, e)| e != via)
                .expect("2-regular vertex has a second edge");
            cur = next.0;
            via = next.1;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Eulerian orientation of a graph in which every vertex has even degree:
/// Hierholzer walks per connected component, always leaving along the
/// lowest-indexed unused incident edge; edges are oriented in walk direction.
pub fn eulerian_orientation(g: &Graph) -> Result<Orientation> {
    let n = g.vertex_count();
    for v in 0..n {
        if g.degree(v) % 2 != 0 {
            return Err(Error::OddDegreeVertex(v));
        }
    }
    let mut tail: Vec<Option<Vertex>> = vec![None; g.edge_id_bound()];
    let mut ptr = vec![0usize; n];
    let mut used = vec![false; g.edge_id_bound()];
    for start in 0..n {
        if g.degree(start) == 0 {
            continue;
        }
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            let adj = g.adjacency(v);
            while ptr[v] < adj.len() && used[adj[ptr[v]].1] {
                ptr[v] += 1;
            }
            if ptr[v] == adj.len() {
                stack.pop();
            } else {
                let (w, e) = adj[ptr[v]];
                used[e] = true;
                tail[e] = Some(v);
                stack.push(w);
            }
        }
    }
    let o = Orientation::from_tails(g, tail);
    debug_assert!((0..n).all(|v| o.out_degree(v) == g.degree(v) / 2));
    Ok(o)
}

/// A perfect matching of the unused edges of an r-regular bipartite graph,
/// by augmenting paths (Kuhn). Returns edge ids. Hall's condition holds on
/// every regular bipartite residual, so this cannot fail on valid input.
fn bipartite_round_matching(
    g: &Graph,
    a_side: &[Vertex],
    used: &[bool],
) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut match_edge: Vec<Option<EdgeId>> = vec![None; n]; // for B vertices
    let mut match_of: Vec<Option<Vertex>> = vec![None; n]; // B -> A

    fn try_augment(
        g: &Graph,
        used: &[bool],
        a: Vertex,
        visited: &mut [bool],
        match_of: &mut [Option<Vertex>],
        match_edge: &mut [Option<EdgeId>],
    ) -> bool {
        for &(b, e) in g.adjacency(a) {
            if used[e] || visited[b] {
                continue;
            }
            visited[b] = true;
            let free = match match_of[b] {
                None => true,
                Some(a2) => try_augment(g, used, a2, visited, match_of, match_edge),
            };
            if free {
                match_of[b] = Some(a);
                match_edge[b] = Some(e);
                return true;
            }
        }
        false
    }

    for &a in a_side {
        let mut visited = vec![false; n];
        let ok = try_augment(g, used, a, &mut visited, &mut match_of, &mut match_edge);
        assert!(ok, "regular bipartite residual violated Hall's condition");
    }
    let mut out: Vec<EdgeId> = match_edge.into_iter().flatten().collect();
    out.sort_unstable();
    out
}

/// 1-factorization of an r-regular bipartite graph into r pairwise disjoint
/// perfect matchings whose union is the edge set.
pub fn one_factorization_bipartite(g: &Graph, b: &Bipartition) -> Result<Vec<Matching>> {
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if r == 0 {
        return Err(Error::NotRegular);
    }
    if !b.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    let a_side = b.vertices_on(Side::A);
    let b_side = b.vertices_on(Side::B);
    if a_side.len() != b_side.len() {
        return Err(Error::NotRegular);
    }
    let mut used = vec![false; g.edge_id_bound()];
    let mut factors = Vec::with_capacity(r);
    for _ in 0..r {
        let round = bipartite_round_matching(g, &a_side, &used);
        for &e in &round {
            used[e] = true;
        }
        factors.push(Matching::new(g, round)?);
    }
    Ok(factors)
}

/// 2-factorization of a 2k-regular graph into k edge-disjoint 2-factors:
/// Eulerian orientation, then the out/in bipartite double cover is k-regular,
/// 1-factorize it, and each 1-factor maps back to a 2-factor.
pub fn two_factorization(g: &Graph) -> Result<Vec<TwoFactor>> {
    let r = g.is_regular().ok_or(Error::NotEvenRegular)?;
    if r == 0 || r % 2 != 0 {
        return Err(Error::NotEvenRegular);
    }
    let k = r / 2;
    let o = eulerian_orientation(g)?;
    let n = g.vertex_count();
    // Aux vertex v is the out-copy, n + v the in-copy.
    let mut aux_edges = Vec::with_capacity(g.edge_count());
    let mut orig_of = Vec::with_capacity(g.edge_count());
    for (e, (u, v)) in g.live_edges() {
        let t = o.tail(e).unwrap();
        let h = if t == u { v } else { u };
        aux_edges.push((t, n + h));
        orig_of.push(e);
    }
    let aux = Graph::build(2 * n, &aux_edges)?;
    let side = (0..2 * n).map(|v| if v < n { Side::A } else { Side::B }).collect();
    let factors = one_factorization_bipartite(&aux, &Bipartition { side })?;
    debug_assert_eq!(factors.len(), k);
    factors
        .into_iter()
        .map(|f| {
            let edges: Vec<EdgeId> = f.edges().iter().map(|&ae| orig_of[ae]).collect();
            TwoFactor::from_edges(g, edges)
        })
        .collect()
}

/// Splits an r-regular graph into edge-disjoint spanning regular subgraphs
/// with the given degrees. Routes: a supplied 1-factorization, bipartite
/// 1-factorization, or (all-even degrees) 2-factorization.
pub fn split_regular_spanning(
    g: &Graph,
    piece_degrees: &[usize],
    supplied: Option<&[Matching]>,
) -> Result<Vec<Graph>> {
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    let sum: usize = piece_degrees.iter().sum();
    if sum != r {
        return Err(Error::DegreeSumMismatch(sum, r));
    }

    let group_matchings = |factors: Vec<Matching>| -> Result<Vec<Graph>> {
        let mut pieces = Vec::with_capacity(piece_degrees.len());
        let mut it = factors.into_iter();
        for &d in piece_degrees {
            let mut ids = Vec::new();
            for _ in 0..d {
                ids.extend_from_slice(it.next().expect("enough factors").edges());
            }
            pieces.push(g.keep_edges(&ids)?);
        }
        Ok(pieces)
    };

    if let Some(factors) = supplied {
        validate_one_factorization(g, factors)?;
        return group_matchings(factors.to_vec());
    }
    if let Some(b) = g.bipartition() {
        let factors = one_factorization_bipartite(g, &b)?;
        return group_matchings(factors);
    }
    if piece_degrees.iter().all(|&d| d % 2 == 0) {
        let two_factors = two_factorization(g)?;
        let mut pieces = Vec::with_capacity(piece_degrees.len());
        let mut it = two_factors.into_iter();
        for &d in piece_degrees {
            let mut ids = Vec::new();
            for _ in 0..d / 2 {
                ids.extend_from_slice(&it.next().expect("enough 2-factors").edges);
            }
            pieces.push(g.keep_edges(&ids)?);
        }
        return Ok(pieces);
    }
    Err(Error::UnsupportedSplit)
}

/// Checks that `factors` is a 1-factorization of `g`: r disjoint perfect
/// matchings whose union is the live edge set.
pub fn validate_one_factorization(g: &Graph, factors: &[Matching]) -> Result<()> {
    let r = g.is_regular().ok_or(Error::InvalidSuppliedFactorization)?;
    if factors.len() != r {
        return Err(Error::InvalidSuppliedFactorization);
    }
    let mut seen = vec![false; g.edge_id_bound()];
    for f in factors {
        if !f.is_perfect(g) {
            return Err(Error::InvalidSuppliedFactorization);
        }
        for &e in f.edges() {
            if !g.has_edge_id(e) || seen[e] {
                return Err(Error::InvalidSuppliedFactorization);
            }
            seen[e] = true;
        }
    }
    if g.live_edge_ids().iter().any(|&e| !seen[e]) {
        return Err(Error::InvalidSuppliedFactorization);
    }
    Ok(())
}

/// Greedy peeling search for a 1-factorization of an r-regular graph, with
/// backtracking over alternative perfect matchings and a node budget.
/// Deciding 1-factorability is hard in general; `None` means the budget ran
/// out or no factorization exists.
pub fn one_factorization_general(
    g: &Graph,
    supplied: Option<&[Matching]>,
    budget: usize,
) -> Result<Option<Vec<Matching>>> {
    if let Some(factors) = supplied {
        validate_one_factorization(g, factors)?;
        return Ok(Some(factors.to_vec()));
    }
    let r = match g.is_regular() {
        Some(r) => r,
        None => return Ok(None),
    };
    let mut nodes = budget;
    let mut acc: Vec<Matching> = Vec::with_capacity(r);
    if peel(g, r, &mut acc, &mut nodes) {
        Ok(Some(acc))
    } else {
        Ok(None)
    }
}

fn peel(residual: &Graph, remaining: usize, acc: &mut Vec<Matching>, nodes: &mut usize) -> bool {
    if remaining == 0 {
        return residual.edge_count() == 0;
    }
    if *nodes == 0 {
        return false;
    }
    *nodes -= 1;
    let pms = crate::matching::enumerate_perfect_matchings(residual, usize::MAX);
    for pm in pms {
        let next = residual.remove_edges(pm.edges()).expect("matching edges exist");
        acc.push(pm);
        if peel(&next, remaining - 1, acc, nodes) {
            return true;
        }
        acc.pop();
        if *nodes == 0 {
            return false;
        }
    }
    false
}
