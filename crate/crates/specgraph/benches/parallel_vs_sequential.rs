//! Parallel vs sequential throughput on the three data-parallel cores:
//! corpus scanning, connected-graph enumeration, and tridiagonal
//! eigenvalue sweeps.
//!
//! Built with the default `parallel` feature, the plain entry points run
//! on the rayon pool while the `_seq` twins stay single-threaded, so one
//! run shows both sides. Without the feature both sides are sequential.

use criterion::{criterion_group, criterion_main, Criterion};
use specgraph::dominance::{scan_corpus, scan_corpus_seq, DominancePattern};
use specgraph::graph::{enumerate_connected, enumerate_connected_seq, Graph};
use specgraph::jacobi::JacobiSpec;
use std::hint::black_box;

fn bench_scan(c: &mut Criterion) {
    let corpus: Vec<Result<Graph, String>> = enumerate_connected(6)
        .expect("six-vertex census")
        .into_iter()
        .map(Ok)
        .collect();
    let mut group = c.benchmark_group("scan_112_graphs");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| scan_corpus(black_box(corpus.clone()), DominancePattern::NoDominant, 8))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| scan_corpus_seq(black_box(corpus.clone()), DominancePattern::NoDominant, 8))
    });
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_n6");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| enumerate_connected(black_box(6))));
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_connected_seq(black_box(6)))
    });
    group.finish();
}

fn bench_tridiag(c: &mut Criterion) {
    let m = JacobiSpec::perturbed(2.0).unwrap().truncate(1200).unwrap();
    let mut group = c.benchmark_group("tridiag_eigenvalues_1200");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| m.eigenvalues(black_box(1e-11))));
    group.bench_function("sequential", |b| {
        b.iter(|| m.eigenvalues_seq(black_box(1e-11)))
    });
    group.finish();
}

criterion_group!(benches, bench_scan, bench_enumerate, bench_tridiag);
criterion_main!(benches);
