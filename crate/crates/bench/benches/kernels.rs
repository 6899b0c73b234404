//! Benchmarks for the hot kernels: factorization, matching search, and the
//! end-to-end decomposition pipelines.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use dstar_core::decompose::{
    decompose_even_regular, decompose_odd_two_matchings, decompose_regular_bipartite,
};
use dstar_core::factorize::{eulerian_orientation, one_factorization_bipartite, two_factorization};
use dstar_core::generate::{
    complete_bipartite, complete_graph, petersen, random_one_factorable, random_regular,
};
use dstar_core::matching::{
    find_perfect_matching, find_two_disjoint_perfect_matchings, PairSearchConfig,
};

fn factorization(c: &mut Criterion) {
    let k12 = complete_bipartite(12, 12);
    let b = k12.bipartition().unwrap();
    c.bench_function("one_factorization_bipartite/K12,12", |bench| {
        bench.iter(|| one_factorization_bipartite(&k12, &b).unwrap())
    });

    let k13 = complete_graph(13);
    c.bench_function("two_factorization/K13", |bench| {
        bench.iter(|| two_factorization(&k13).unwrap())
    });

    let g = random_regular(40, 6, 7).unwrap();
    c.bench_function("eulerian_orientation/n40-r6", |bench| {
        bench.iter(|| eulerian_orientation(&g).unwrap())
    });
}

fn matching(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("find_perfect_matching/petersen", |bench| {
        bench.iter(|| find_perfect_matching(&p).unwrap())
    });

    let k16 = complete_graph(16);
    c.bench_function("find_perfect_matching/K16", |bench| {
        bench.iter(|| find_perfect_matching(&k16).unwrap())
    });
    c.bench_function("disjoint_pair_search/K16", |bench| {
        bench.iter_batched(
            PairSearchConfig::default,
            |cfg| find_two_disjoint_perfect_matchings(&k16, cfg).pair.unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn pipelines(c: &mut Criterion) {
    let (bip, _) = dstar_core::generate::random_regular_bipartite(20, 5, 11).unwrap();
    c.bench_function("decompose_regular_bipartite/n40-r5", |bench| {
        bench.iter(|| decompose_regular_bipartite(&bip, 2, 2).unwrap())
    });

    let even = random_regular(40, 8, 13).unwrap();
    c.bench_function("decompose_even_regular/n40-r8", |bench| {
        bench.iter(|| decompose_even_regular(&even, 1, 2).unwrap())
    });

    let (odd, factors) = random_one_factorable(24, 7, 17).unwrap();
    c.bench_function("decompose_odd_two_matchings/n24-r7", |bench| {
        bench.iter(|| decompose_odd_two_matchings(&odd, &factors[0], &factors[1], 1, 2).unwrap())
    });
}

criterion_group!(kernels, factorization, matching, pipelines);
criterion_main!(kernels);
