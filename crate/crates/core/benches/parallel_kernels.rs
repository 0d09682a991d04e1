//! Sequential vs. data-parallel timings for the three hot kernels: building
//! the pairwise intersection relation, counting crossings, and verifying a
//! coloring. Run with and without `--no-default-features` to see what the
//! `parallel` feature buys on this machine.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use geochroma::bounds::{count_crossings_par, count_crossings_seq};
use geochroma::convex::color_convex;
use geochroma::geom::regular_polygon;
use geochroma::graph::{verify, verify_seq, GeometricGraph, IntersectionRelation};

fn convex_graph(n: usize) -> GeometricGraph {
    GeometricGraph::complete(regular_polygon(n).expect("valid order"))
}

fn bench_relation(c: &mut Criterion) {
    let mut group = c.benchmark_group("intersection_relation");
    for n in [40usize, 80] {
        let g = convex_graph(n);
        group.bench_with_input(BenchmarkId::new("seq", n), &g, |b, g| {
            b.iter(|| IntersectionRelation::build_seq(g).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &g, |b, g| {
            b.iter(|| IntersectionRelation::build_par(g).unwrap())
        });
    }
    group.finish();
}

fn bench_crossings(c: &mut Criterion) {
    let mut group = c.benchmark_group("crossing_count");
    for n in [40usize, 80] {
        let g = convex_graph(n);
        group.bench_with_input(BenchmarkId::new("seq", n), &g, |b, g| {
            b.iter(|| count_crossings_seq(g).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &g, |b, g| {
            b.iter(|| count_crossings_par(g).unwrap())
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_coloring");
    group.sample_size(20);
    for n in [30usize, 50] {
        let g = convex_graph(n);
        let (coloring, _) = color_convex(n).expect("supported order");
        g.relation().unwrap();
        group.bench_with_input(BenchmarkId::new("seq", n), &(), |b, _| {
            b.iter(|| verify_seq(&g, &coloring).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &(), |b, _| {
            b.iter(|| verify(&g, &coloring).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_relation, bench_crossings, bench_verify);
criterion_main!(benches);
