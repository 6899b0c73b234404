//! Undirected simple graphs with stable edge indices.
//!
//! Vertices are dense integers `0..n`. Every edge carries a stable index so
//! that orientations, matchings and decompositions can reference edges by
//! index; subgraphs obtained by edge removal keep the surviving indices.

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Indexed by edge id; `None` marks an edge removed from a supergraph.
    edges: Vec<Option<(Vertex, Vertex)>>,
    /// Per-vertex `(neighbor, edge id)`, in ascending edge-id order.
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    live: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Edge ids are assigned in
    /// input order.
    pub fn build(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edge_list.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].iter().any(|&(w, _)| w == v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
            edges.push(Some((u.min(v), u.max(v))));
        }
        let live = edges.len();
        Ok(Graph { n, edges, adj, live })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.live
    }

    /// One past the largest edge id ever assigned (removed ids included).
    pub fn edge_id_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        self.edges.get(e).copied().flatten()
    }

    pub fn has_edge_id(&self, e: EdgeId) -> bool {
        self.endpoints(e).is_some()
    }

    /// Live edge ids in ascending order.
    pub fn live_edge_ids(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| self.edges[e].is_some()).collect()
    }

    /// Live edges as `(id, (u, v))` with `u < v`, ascending by id.
    pub fn live_edges(&self) -> Vec<(EdgeId, (Vertex, Vertex))> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(id, e)| e.map(|uv| (id, uv)))
            .collect()
    }

    pub fn adjacency(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Returns `Some(r)` iff every vertex has degree `r`. The graph on zero
    /// vertices counts as 0-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, |a| a.len());
        if self.adj.iter().all(|a| a.len() == r) {
            Some(r)
        } else {
            None
        }
    }

    /// Deterministic 2-coloring: BFS per connected component, component
    /// roots (lowest vertex index) colored A. `None` iff an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &(w, _) in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(sv.other());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition { side: side.into_iter().map(|s| s.unwrap_or(Side::A)).collect() })
    }

    /// Vertices adjacent to both `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        debug_assert_ne!(u, v);
        let mut out: Vec<Vertex> = self.adj[u]
            .iter()
            .filter(|&&(w, _)| self.edge_between(v, w).is_some())
            .map(|&(w, _)| w)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.live_edges()
            .iter()
            .all(|&(_, (u, v))| self.common_neighbors(u, v).is_empty())
    }

    /// Cartesian product with K2: two copies of the graph plus the rung
    /// matching joining corresponding vertices.
    ///
    /// Vertex layout: copy 1 keeps ids `0..n`, copy 2 is `n..2n`. Edge layout:
    /// the i-th live edge of `self` gets product ids `i` (copy 1) and
    /// `m + i` (copy 2); rung `{v, v'}` gets id `2m + v`.
    pub fn cartesian_product_k2(&self) -> (Graph, VertexMap) {
        let n = self.n;
        let live = self.live_edges();
        let m = live.len();
        let mut edge_list = Vec::with_capacity(2 * m + n);
        for &(_, (u, v)) in &live {
            edge_list.push((u, v));
        }
        for &(_, (u, v)) in &live {
            edge_list.push((u + n, v + n));
        }
        for v in 0..n {
            edge_list.push((v, v + n));
        }
        let h = Graph::build(2 * n, &edge_list).expect("product of a simple graph is simple");
        let mut forward = Vec::with_capacity(2 * n);
        let mut tag = Vec::with_capacity(2 * n);
        for v in 0..n {
            forward.push(v);
            tag.push(CloneTag::ProductCopy1);
        }
        for v in 0..n {
            forward.push(v);
            tag.push(CloneTag::ProductCopy2);
        }
        (h, VertexMap { forward, tag })
    }

    /// Subgraph on the same vertex set with the given edge ids removed;
    /// surviving edges keep their ids.
    pub fn remove_edges(&self, remove: &[EdgeId]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in remove {
            if !g.has_edge_id(e) {
                return Err(Error::UnknownEdgeIndex(e));
            }
            let (u, v) = g.edges[e].take().unwrap();
            g.adj[u].retain(|&(_, id)| id != e);
            g.adj[v].retain(|&(_, id)| id != e);
            g.live -= 1;
        }
        Ok(g)
    }

    /// Subgraph on the same vertex set that keeps exactly the given edge ids.
    pub fn keep_edges(&self, keep: &[EdgeId]) -> Result<Graph> {
        let keep_set: std::collections::HashSet<EdgeId> = keep.iter().copied().collect();
        for &e in keep {
            if !self.has_edge_id(e) {
                return Err(Error::UnknownEdgeIndex(e));
            }
        }
        let drop: Vec<EdgeId> =
            self.live_edge_ids().into_iter().filter(|e| !keep_set.contains(e)).collect();
        self.remove_edges(&drop)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A two-sided vertex labeling; valid when every edge crosses sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
}

impl Bipartition {
    pub fn vertices_on(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.vertex_count()
            && g.live_edges().iter().all(|&(_, (u, v))| self.side[u] != self.side[v])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloneTag {
    ProductCopy1,
    ProductCopy2,
    SplitClone,
}

/// Maps vertices of a derived graph back to the originating graph.
#[derive(Debug, Clone)]
pub struct VertexMap {
    pub forward: Vec<Vertex>,
    pub tag: Vec<CloneTag>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    pub(crate) fn petersen() -> Graph {
        crate::generate::petersen()
    }

    #[test]
    fn build_cycle_and_k2() {
        let g = c4();
        assert_eq!(g.is_regular(), Some(2));
        assert_eq!(g.edge_count(), 4);
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.degree(0), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::build(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::build(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::build(2, &[(0, 2)]), Err(Error::VertexOutOfRange(2, 2)));
    }

    #[test]
    fn regularity() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.is_regular(), None);
        let k5 = crate::generate::complete_graph(5);
        assert_eq!(k5.is_regular(), Some(4));
    }

    #[test]
    fn bipartition_cases() {
        let k33 = crate::generate::complete_bipartite(3, 3);
        let b = k33.bipartition().unwrap();
        assert_eq!(b.vertices_on(Side::A).len(), 3);
        assert_eq!(b.vertices_on(Side::B).len(), 3);
        assert!(b.is_valid_for(&k33));
        let c5 = crate::generate::cycle(5);
        assert!(c5.bipartition().is_none());
        let empty = Graph::build(4, &[]).unwrap();
        let b = empty.bipartition().unwrap();
        assert!(b.side.iter().all(|&s| s == Side::A));
    }

    #[test]
    fn common_neighbors_and_triangles() {
        let k4 = crate::generate::complete_graph(4);
        assert_eq!(k4.common_neighbors(0, 1), vec![2, 3]);
        assert!(!k4.is_triangle_free());
        assert!(crate::generate::cycle(6).is_triangle_free());
        assert!(petersen().is_triangle_free());
    }

    #[test]
    fn product_with_k2() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let (h, _) = k2.cartesian_product_k2();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.is_regular(), Some(2));

        let (prism, map) = crate::generate::cycle(3).cartesian_product_k2();
        assert_eq!(prism.vertex_count(), 6);
        assert_eq!(prism.edge_count(), 9);
        assert_eq!(map.forward[4], 1);
        assert_eq!(map.tag[4], CloneTag::ProductCopy2);

        let (h, _) = petersen().cartesian_product_k2();
        assert_eq!(h.vertex_count(), 20);
        assert_eq!(h.edge_count(), 40);
        assert_eq!(h.is_regular(), Some(4));
    }

    #[test]
    fn remove_edges_keeps_ids() {
        let g = c4();
        let p4 = g.remove_edges(&[3]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.endpoints(0), Some((0, 1)));
        assert_eq!(p4.endpoints(3), None);
        assert_eq!(p4.degree(0), 1);
        assert_eq!(g.remove_edges(&[]).unwrap(), g);
        assert_eq!(g.remove_edges(&[7]), Err(Error::UnknownEdgeIndex(7)));

        let k4 = crate::generate::complete_graph(4);
        let m = [k4.edge_between(0, 1).unwrap(), k4.edge_between(2, 3).unwrap()];
        let rest = k4.remove_edges(&m).unwrap();
        assert_eq!(rest.is_regular(), Some(2));
    }
}
