//! Independent checking machinery: an exhaustive decomposition-existence
//! search, a naive re-implementation of the partition check, and a
//! corruption generator for negative testing. Nothing here shares logic
//! with the constructive pipelines; that independence is the point.

use crate::certificate::Certificate;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::star::{canonical_shape, Decomposition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Decides by exhaustive backtracking whether `g` admits an edge partition
/// into double-stars with exactly the given shape multiset (unordered
/// shapes). Intended for graphs with at most ~10 vertices.
pub fn exhaustive_decomposition_exists(g: &Graph, multiset: &[(usize, usize)]) -> bool {
    let total: usize = multiset.iter().map(|&(a, b)| a + b + 1).sum();
    if total != g.edge_count() {
        return false;
    }
    let mut remaining: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &s in multiset {
        *remaining.entry(canonical_shape(s)).or_insert(0) += 1;
    }
    let mut covered = vec![true; g.edge_id_bound()];
    for e in g.live_edge_ids() {
        covered[e] = false;
    }
    recurse(g, &mut covered, &mut remaining)
}

fn recurse(
    g: &Graph,
    covered: &mut Vec<bool>,
    remaining: &mut BTreeMap<(usize, usize), usize>,
) -> bool {
    let e = match covered.iter().position(|&c| !c) {
        Some(e) => e,
        None => return remaining.values().all(|&c| c == 0),
    };
    let (u, v) = g.endpoints(e).expect("uncovered ids are live");
    // Candidate central edges: e itself or any uncovered edge sharing an
    // endpoint with e (e must be covered by the star we commit to now).
    let mut centrals: Vec<EdgeId> = vec![e];
    for &w in &[u, v] {
        for &(_, f) in g.adjacency(w) {
            if f != e && !covered[f] {
                centrals.push(f);
            }
        }
    }
    centrals.sort_unstable();
    centrals.dedup();

    let shapes: Vec<(usize, usize)> =
        remaining.iter().filter(|&(_, &c)| c > 0).map(|(&s, _)| s).collect();
    for f in centrals {
        let (fa, fb) = g.endpoints(f).expect("central candidate is live");
        for &(p, q) in &shapes {
            let mut orients = vec![(p, q)];
            if p != q {
                orients.push((q, p));
            }
            for (sa, sb) in orients {
                if try_star(g, covered, remaining, e, f, fa, fb, sa, sb, (p, q)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Tries every star with central edge `f` (centers `a`, `b`), `sa` pendants
/// at `a` and `sb` at `b`, that uses only uncovered edges and covers `e`.
#[allow(clippy::too_many_arguments)]
fn try_star(
    g: &Graph,
    covered: &mut Vec<bool>,
    remaining: &mut BTreeMap<(usize, usize), usize>,
    e: EdgeId,
    f: EdgeId,
    a: Vertex,
    b: Vertex,
    sa: usize,
    sb: usize,
    shape_key: (usize, usize),
) -> bool {
    let pend = |c: Vertex| -> Vec<(Vertex, EdgeId)> {
        let mut p: Vec<(Vertex, EdgeId)> = g
            .adjacency(c)
            .iter()
            .filter(|&&(w, id)| id != f && !covered[id] && w != a && w != b)
            .copied()
            .collect();
        p.sort_unstable();
        p
    };
    let at_a = pend(a);
    let at_b = pend(b);
    if at_a.len() < sa || at_b.len() < sb {
        return false;
    }
    choose(&at_a, sa, 0, &mut Vec::new(), &mut |xs| {
        choose(&at_b, sb, 0, &mut Vec::new(), &mut |ys| {
            // Pendant vertices must be pairwise distinct across sides.
            if xs.iter().any(|&(w, _)| ys.iter().any(|&(w2, _)| w2 == w)) {
                return false;
            }
            let ids: Vec<EdgeId> = std::iter::once(f)
                .chain(xs.iter().map(|&(_, id)| id))
                .chain(ys.iter().map(|&(_, id)| id))
                .collect();
            if !ids.contains(&e) {
                return false;
            }
            for &id in &ids {
                covered[id] = true;
            }
            *remaining.get_mut(&shape_key).unwrap() -= 1;
            let ok = recurse(g, covered, remaining);
            *remaining.get_mut(&shape_key).unwrap() += 1;
            for &id in &ids {
                covered[id] = false;
            }
            ok
        })
    })
}

fn choose(
    items: &[(Vertex, EdgeId)],
    need: usize,
    from: usize,
    cur: &mut Vec<(Vertex, EdgeId)>,
    f: &mut impl FnMut(&[(Vertex, EdgeId)]) -> bool,
) -> bool {
    if cur.len() == need {
        return f(cur);
    }
    for i in from..items.len() {
        if items.len() - i < need - cur.len() {
            break;
        }
        // Two parallel pendant edges cannot exist in a simple graph, but a
        // vertex may repeat within one side's candidate list only via
        // distinct edges; skip repeats to keep pendant vertices distinct.
        if cur.iter().any(|&(w, _)| w == items[i].0) {
            continue;
        }
        cur.push(items[i]);
        if choose(items, need, i + 1, cur, f) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Naive partition check, written directly from the definition: the stars'
/// edge ids, with multiplicity, are exactly the live edges; each star's
/// edges form a double-star on its declared centers; shapes are allowed.
pub fn naive_partition_check(g: &Graph, d: &Decomposition) -> bool {
    let mut ids: Vec<EdgeId> = d.stars.iter().flat_map(|s| s.edge_ids()).collect();
    ids.sort_unstable();
    let mut live = g.live_edge_ids();
    live.sort_unstable();
    if ids != live {
        return false;
    }
    for s in &d.stars {
        if !d.allowed_shapes.contains(&canonical_shape(s.shape())) {
            return false;
        }
        if s.u1 == s.u2 {
            return false;
        }
        match g.endpoints(s.central) {
            Some((p, q)) if (p, q) == (s.u1, s.u2) || (p, q) == (s.u2, s.u1) => {}
            _ => return false,
        }
        let mut verts = vec![s.u1, s.u2];
        for (&(w, id), center) in s
            .x
            .iter()
            .map(|p| (p, s.u1))
            .chain(s.y.iter().map(|p| (p, s.u2)))
        {
            match g.endpoints(id) {
                Some((p, q)) if (p, q) == (center, w) || (p, q) == (w, center) => {}
                _ => return false,
            }
            verts.push(w);
        }
        let mut dedup = verts.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() != verts.len() {
            return false;
        }
    }
    true
}

/// Produces a corrupted copy of a valid certificate; each corruption kind
/// is invalid by construction (duplicated edge, missing star, pendant equal
/// to a center, or dangling edge index).
pub fn mutate_certificate(c: &Certificate, seed: u64) -> Certificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = c.clone();
    let kinds: u32 = 4;
    loop {
        match rng.gen_range(0..kinds) {
            0 if out.stars.len() >= 2 => {
                // Duplicate another star's central edge id.
                let i = rng.gen_range(0..out.stars.len());
                let mut j = rng.gen_range(0..out.stars.len());
                if i == j {
                    j = (j + 1) % out.stars.len();
                }
                let donor = out.stars[j].central;
                let s = &mut out.stars[i];
                if let Some(slot) = s.x.first_mut() {
                    slot.1 = donor;
                } else if let Some(slot) = s.y.first_mut() {
                    slot.1 = donor;
                } else {
                    s.central = donor;
                }
                return out;
            }
            1 if !out.stars.is_empty() => {
                out.stars.pop();
                return out;
            }
            2 if out.stars.iter().any(|s| !s.x.is_empty() || !s.y.is_empty()) => {
                let i = rng.gen_range(0..out.stars.len());
                let s = &mut out.stars[i];
                let center = s.u1;
                if let Some(slot) = s.x.first_mut() {
                    slot.0 = center;
                } else if let Some(slot) = s.y.first_mut() {
                    slot.0 = center;
                } else {
                    continue;
                }
                return out;
            }
            3 if !out.stars.is_empty() => {
                let i = rng.gen_range(0..out.stars.len());
                out.stars[i].central = c.graph.m + 1_000_000;
                return out;
            }
            _ => continue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose_regular_bipartite;
    use crate::generate;
    use crate::star::verify_decomposition;

    #[test]
    fn oracle_confirms_k33() {
        let g = generate::complete_bipartite(3, 3);
        assert!(exhaustive_decomposition_exists(&g, &[(1, 1), (1, 1), (1, 1)]));
        // Wrong multiset: total size mismatch.
        assert!(!exhaustive_decomposition_exists(&g, &[(1, 1), (1, 1)]));
    }

    #[test]
    fn oracle_rejects_impossible_shape() {
        // C4 has 4 edges; one S_{1,2} would fit by size but the cycle has
        // no vertex of degree 3.
        let g = generate::cycle(4);
        assert!(!exhaustive_decomposition_exists(&g, &[(1, 2)]));
    }

    #[test]
    fn oracle_handles_path_cover() {
        // P4 (3 edges) is itself an S_{1,1}.
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(exhaustive_decomposition_exists(&g, &[(1, 1)]));
    }

    #[test]
    fn naive_check_agrees_on_valid_output() {
        let g = generate::complete_bipartite(4, 4);
        let d = decompose_regular_bipartite(&g, 2, 1).unwrap();
        assert!(verify_decomposition(&g, &d).valid);
        assert!(naive_partition_check(&g, &d));
    }

    #[test]
    fn mutations_are_detected_by_both_checkers() {
        let g = generate::complete_bipartite(4, 4);
        let d = decompose_regular_bipartite(&g, 2, 1).unwrap();
        let c = Certificate::from_decomposition(&g, &d);
        for seed in 0..50 {
            let bad = mutate_certificate(&c, seed);
            let bd = bad.to_decomposition();
            assert!(!verify_decomposition(&g, &bd).valid, "seed {seed}");
            assert!(!naive_partition_check(&g, &bd), "seed {seed}");
        }
    }
}
