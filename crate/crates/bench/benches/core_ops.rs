//! Benchmarks for the hot paths: index sums, product construction,
//! the graph6 codec, and a small verification sweep.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sombor_core::{
    corona, elliptic_sombor, euler_sombor, join, parse_graph6, random_graph, run_sweep,
    write_graph6, Graph, SweepConfig,
};

fn bench_indices(c: &mut Criterion) {
    let g = random_graph(200, 0.3, 7).expect("valid probability");
    c.bench_function("eso/n200_p0.3", |b| {
        b.iter(|| elliptic_sombor(black_box(&g)).unwrap())
    });
    c.bench_function("eu/n200_p0.3", |b| {
        b.iter(|| euler_sombor(black_box(&g)).unwrap())
    });
}

fn bench_products(c: &mut Criterion) {
    let c50 = Graph::cycle(50);
    let k5 = Graph::complete(5);
    let c20 = Graph::cycle(20);
    c.bench_function("join/c50_c50", |b| {
        b.iter(|| join(black_box(&c50), black_box(&c50)).unwrap())
    });
    c.bench_function("corona/c20_k5", |b| {
        b.iter(|| corona(black_box(&c20), black_box(&k5)).unwrap())
    });
}

fn bench_codec(c: &mut Criterion) {
    let g = random_graph(62, 0.5, 11).expect("valid probability");
    let text = write_graph6(&g).expect("encodable order");
    c.bench_function("graph6/encode_n62", |b| {
        b.iter(|| write_graph6(black_box(&g)).unwrap())
    });
    c.bench_function("graph6/decode_n62", |b| {
        b.iter(|| parse_graph6(black_box(&text)).unwrap())
    });
}

fn bench_sweep(c: &mut Criterion) {
    let cfg = SweepConfig {
        max_order_1: 3,
        max_order_2: 3,
        ..SweepConfig::default()
    };
    c.bench_function("sweep/exhaustive_orders_3", |b| {
        b.iter(|| run_sweep(black_box(&cfg)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_indices,
    bench_products,
    bench_codec,
    bench_sweep
);
criterion_main!(benches);
