//! Perfect matchings in general graphs and the disjoint-pair search.

use crate::error::Result;
use crate::factorize::Matching;
use crate::graph::{EdgeId, Graph, Vertex};
use petgraph::graph::{NodeIndex, UnGraph};

/// Tuning knobs for the disjoint-pair search.
#[derive(Debug, Clone, Copy)]
pub struct PairSearchConfig {
    /// Below or at this vertex count the search enumerates all perfect
    /// matchings and is complete.
    pub exhaustive_threshold: usize,
    /// Backtrack-node budget above the threshold.
    pub budget: usize,
}

impl Default for PairSearchConfig {
    fn default() -> Self {
        PairSearchConfig { exhaustive_threshold: 12, budget: 100_000 }
    }
}

/// Outcome of the disjoint-pair search. `complete == false` means the budget
/// ran out: `pair == None` then means "not found", not "nonexistent".
#[derive(Debug, Clone)]
pub struct PairSearchOutcome {
    pub pair: Option<(Matching, Matching)>,
    pub complete: bool,
}

fn to_petgraph(g: &Graph) -> UnGraph<(), EdgeId> {
    let mut pg = UnGraph::<(), EdgeId>::new_undirected();
    let nodes: Vec<NodeIndex> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for (e, (u, v)) in g.live_edges() {
        pg.add_edge(nodes[u], nodes[v], e);
    }
    pg
}

/// Maximum matching by blossom contraction (via petgraph), checked for
/// perfectness. Deterministic given the graph.
pub fn find_perfect_matching(g: &Graph) -> Option<Matching> {
    let n = g.vertex_count();
    if n % 2 != 0 {
        return None;
    }
    if n == 0 {
        return Matching::new(g, vec![]).ok();
    }
    let pg = to_petgraph(g);
    let mm = petgraph::algo::matching::maximum_matching(&pg);
    let mut edges = Vec::new();
    for (a, b) in mm.edges() {
        let e = g
            .edge_between(a.index(), b.index())
            .expect("matched pair is an edge");
        edges.push(e);
    }
    if 2 * edges.len() != n {
        return None;
    }
    Matching::new(g, edges).ok()
}

/// Exhaustive enumeration of perfect matchings, branching on the lowest
/// unmatched vertex, truncated at `limit`. Deterministic order.
pub fn enumerate_perfect_matchings(g: &Graph, limit: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    if limit == 0 || g.vertex_count() % 2 != 0 {
        return out;
    }
    let n = g.vertex_count();
    let mut matched = vec![false; n];
    let mut chosen: Vec<EdgeId> = Vec::new();
    enumerate_rec(g, &mut matched, &mut chosen, limit, &mut out);
    out
}

fn enumerate_rec(
    g: &Graph,
    matched: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    limit: usize,
    out: &mut Vec<Matching>,
) {
    if out.len() >= limit {
        return;
    }
    let v = match (0..matched.len()).find(|&v| !matched[v]) {
        None => {
            out.push(Matching::new(g, chosen.clone()).expect("chosen edges form a matching"));
            return;
        }
        Some(v) => v,
    };
    matched[v] = true;
    for &(w, e) in g.adjacency(v) {
        if matched[w] {
            continue;
        }
        matched[w] = true;
        chosen.push(e);
        enumerate_rec(g, matched, chosen, limit, out);
        chosen.pop();
        matched[w] = false;
        if out.len() >= limit {
            break;
        }
    }
    matched[v] = false;
}

/// Searches for two disjoint perfect matchings. Exhaustive (hence complete)
/// up to the configured vertex threshold; above it, tries successive
/// enumerated choices of the first matching and completes each greedily.
pub fn find_two_disjoint_perfect_matchings(
    g: &Graph,
    config: PairSearchConfig,
) -> PairSearchOutcome {
    let n = g.vertex_count();
    if n % 2 != 0 {
        return PairSearchOutcome { pair: None, complete: true };
    }
    if n <= config.exhaustive_threshold {
        let all = enumerate_perfect_matchings(g, usize::MAX);
        for (i, m1) in all.iter().enumerate() {
            for m2 in all.iter().skip(i + 1) {
                if m1.is_disjoint_from(m2) {
                    return PairSearchOutcome { pair: Some((m1.clone(), m2.clone())), complete: true };
                }
            }
        }
        return PairSearchOutcome { pair: None, complete: true };
    }
    // Greedy route: enumerate candidate first matchings up to the budget and
    // look for a perfect matching in the leftover graph.
    let candidates = enumerate_perfect_matchings(g, config.budget.max(1).min(10_000));
    let complete = candidates.len() < config.budget.max(1).min(10_000);
    let mut tried = 0usize;
    for m1 in &candidates {
        if tried >= config.budget {
            return PairSearchOutcome { pair: None, complete: false };
        }
        tried += 1;
        let rest = g.remove_edges(m1.edges()).expect("matching edges exist");
        if let Some(m2) = find_perfect_matching(&rest) {
            return PairSearchOutcome { pair: Some((m1.clone(), m2)), complete: true };
        }
    }
    // If the enumeration was not truncated, every possible first matching was
    // tried against an exact matcher on the leftover, so the answer is final.
    PairSearchOutcome { pair: None, complete }
}

/// Finds a 2-factor via the degree-constrained-subgraph gadget: each vertex
/// of degree d becomes d edge-ports plus d-2 fillers, and a perfect matching
/// of the gadget selects exactly two edges per vertex.
pub fn find_two_factor_direct(g: &Graph) -> Result<Option<crate::factorize::TwoFactor>> {
    let n = g.vertex_count();
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let live = g.live_edges();
    // Gadget node numbering: ports first (one per edge endpoint), fillers after.
    let mut port_of: std::collections::HashMap<(Vertex, EdgeId), usize> =
        std::collections::HashMap::new();
    let mut next = 0usize;
    for v in 0..n {
        for &(_, e) in g.adjacency(v) {
            port_of.insert((v, e), next);
            next += 1;
        }
    }
    let mut gadget_edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        for _ in 0..d.saturating_sub(2) {
            let filler = next;
            next += 1;
            for &(_, e) in g.adjacency(v) {
                gadget_edges.push((port_of[&(v, e)], filler));
            }
        }
    }
    for &(e, (u, v)) in &live {
        gadget_edges.push((port_of[&(u, e)], port_of[&(v, e)]));
    }
    let gadget = Graph::build(next, &gadget_edges)?;
    let pm = match find_perfect_matching(&gadget) {
        None => return Ok(None),
        Some(pm) => pm,
    };
    let selected: Vec<EdgeId> = live
        .iter()
        .filter(|&&(e, (u, v))| {
            let pu = port_of[&(u, e)];
            let pv = port_of[&(v, e)];
            pm.edges().iter().any(|&ge| gadget.endpoints(ge) == Some((pu.min(pv), pu.max(pv))))
        })
        .map(|&(e, _)| e)
        .collect();
    Ok(Some(crate::factorize::TwoFactor::from_edges(g, selected)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn perfect_matching_basics() {
        let k4 = generate::complete_graph(4);
        let m = find_perfect_matching(&k4).unwrap();
        assert_eq!(m.len(), 2);

        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(find_perfect_matching(&star).is_none());

        let pet = generate::petersen();
        let m = find_perfect_matching(&pet).unwrap();
        assert_eq!(m.len(), 5);
    }

    #[test]
    fn enumeration_counts() {
        let c6 = generate::cycle(6);
        assert_eq!(enumerate_perfect_matchings(&c6, 10).len(), 2);
        let k4 = generate::complete_graph(4);
        assert_eq!(enumerate_perfect_matchings(&k4, 10).len(), 3);
        let pet = generate::petersen();
        assert_eq!(enumerate_perfect_matchings(&pet, 100).len(), 6);
    }

    #[test]
    fn disjoint_pair_search() {
        let k4 = generate::complete_graph(4);
        let out = find_two_disjoint_perfect_matchings(&k4, PairSearchConfig::default());
        let (m1, m2) = out.pair.unwrap();
        assert!(m1.is_disjoint_from(&m2));
        let union: Vec<EdgeId> =
            m1.edges().iter().chain(m2.edges()).copied().collect();
        let tf = crate::factorize::TwoFactor::from_edges(&k4, union).unwrap();
        assert_eq!(tf.cycles.len(), 1);
        assert_eq!(tf.cycles[0].len(), 4);

        let k6 = generate::complete_graph(6);
        assert!(find_two_disjoint_perfect_matchings(&k6, PairSearchConfig::default())
            .pair
            .is_some());

        // Every pair of Petersen's six perfect matchings intersects.
        let pet = generate::petersen();
        let out = find_two_disjoint_perfect_matchings(&pet, PairSearchConfig::default());
        assert!(out.pair.is_none());
        assert!(out.complete);
    }

    #[test]
    fn direct_two_factor() {
        let k5 = generate::complete_graph(5);
        let tf = find_two_factor_direct(&k5).unwrap().unwrap();
        assert_eq!(tf.edges.len(), 5);
        // Petersen has a 2-factor (two 5-cycles).
        let pet = generate::petersen();
        let tf = find_two_factor_direct(&pet).unwrap().unwrap();
        assert_eq!(tf.edges.len(), 10);
    }
}
