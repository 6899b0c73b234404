//! Randomized structural invariants for the graph and factorization kernels.

use dstar_core::certificate::{parse_edge_list, write_edge_list};
use dstar_core::factorize::{eulerian_orientation, two_factorization};
use dstar_core::generate::{random_regular, random_regular_bipartite};
use dstar_core::graph::Side;
use proptest::prelude::*;

/// (n, r, seed) triples for which an r-regular graph on n vertices exists.
fn regular_params() -> impl Strategy<Value = (usize, usize, u64)> {
    (6usize..24, 2usize..6, any::<u64>()).prop_map(|(n, r, seed)| {
        let r = r.min(n - 1);
        let n = if n * r % 2 == 1 { n + 1 } else { n };
        (n, r, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_is_twice_edge_count((n, r, seed) in regular_params()) {
        let g = random_regular(n, r, seed).unwrap();
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
        prop_assert_eq!(g.is_regular(), Some(r));
    }

    #[test]
    fn product_with_k2_has_expected_counts((n, r, seed) in regular_params()) {
        let g = random_regular(n, r, seed).unwrap();
        let (h, map) = g.cartesian_product_k2();
        prop_assert_eq!(h.vertex_count(), 2 * n);
        prop_assert_eq!(h.edge_count(), 2 * g.edge_count() + n);
        prop_assert_eq!(map.forward.len(), 2 * n);
        // Rungs: every vertex is adjacent to its clone, and both map back
        // to the same base vertex.
        for v in 0..n {
            prop_assert!(h.edge_between(v, v + n).is_some());
            prop_assert_eq!(map.forward[v], map.forward[v + n]);
        }
    }

    #[test]
    fn eulerian_orientation_halves_degrees((n, seed) in (6usize..24, any::<u64>())) {
        let n = if n % 2 == 1 { n + 1 } else { n };
        let g = random_regular(n, 4, seed).unwrap();
        let o = eulerian_orientation(&g).unwrap();
        for v in 0..n {
            prop_assert_eq!(o.out_degree(v), 2);
        }
        // Each edge is oriented exactly once, away from its tail.
        for e in g.live_edge_ids() {
            let (u, v) = g.endpoints(e).unwrap();
            let t = o.tail(e).unwrap();
            prop_assert!(t == u || t == v);
        }
    }

    #[test]
    fn bipartite_edges_cross_sides((m, r, seed) in (4usize..16, 2usize..5, any::<u64>())) {
        let r = r.min(m);
        let (g, b) = random_regular_bipartite(m, r, seed).unwrap();
        for (_, (u, v)) in g.live_edges() {
            prop_assert_ne!(b.side[u], b.side[v]);
        }
        prop_assert_eq!(b.vertices_on(Side::A).len(), m);
        prop_assert_eq!(g.edge_count(), m * r);
    }

    #[test]
    fn keep_all_edges_is_identity((n, r, seed) in regular_params()) {
        let g = random_regular(n, r, seed).unwrap();
        let live = g.live_edge_ids();
        let h = g.keep_edges(&live).unwrap();
        prop_assert_eq!(h.live_edge_ids(), live.clone());
        for e in live {
            prop_assert_eq!(h.endpoints(e), g.endpoints(e));
        }
    }

    #[test]
    fn remove_then_keep_partitions_ids((n, seed) in (6usize..20, any::<u64>())) {
        let n = if n % 2 == 1 { n + 1 } else { n };
        let g = random_regular(n, 3, seed).unwrap();
        let live = g.live_edge_ids();
        let (first, rest) = live.split_at(live.len() / 2);
        let a = g.keep_edges(first).unwrap();
        let b = g.remove_edges(first).unwrap();
        prop_assert_eq!(a.edge_count() + b.edge_count(), g.edge_count());
        prop_assert_eq!(a.live_edge_ids(), first.to_vec());
        prop_assert_eq!(b.live_edge_ids(), rest.to_vec());
    }

    #[test]
    fn two_factorization_covers_all_edges((n, seed) in (6usize..20, any::<u64>())) {
        let g = random_regular(n, 4, seed).unwrap();
        let factors = two_factorization(&g).unwrap();
        prop_assert_eq!(factors.len(), 2);
        let mut seen: Vec<usize> = factors.iter().flat_map(|f| f.edges.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, g.live_edge_ids());
    }

    #[test]
    fn edge_list_round_trips((n, r, seed) in regular_params()) {
        let g = random_regular(n, r, seed).unwrap();
        let text = write_edge_list(&g);
        let h = parse_edge_list(&text).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count());
        prop_assert_eq!(write_edge_list(&h), text);
    }
}
