//! Claim-suite throughput, parallel fan-out against the sequential path.
//! Run with `cargo bench -p pfrob-verify`.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use pfrob_verify::{run_suite, run_suite_seq, Registry, RunOptions};

fn bench_suite(c: &mut Criterion) {
    let registry = Registry::standard();

    let mut group = c.benchmark_group("run_suite/thm2+thm3");
    group.sample_size(20);
    let opts = RunOptions::with_filter("thm");
    group.bench_function("sequential", |b| {
        b.iter(|| run_suite_seq(black_box(&registry), black_box(&opts)))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| run_suite(black_box(&registry), black_box(&opts)))
    });
    group.finish();

    let mut group = c.benchmark_group("run_suite/remark4");
    group.sample_size(20);
    let opts = RunOptions::with_filter("remark4");
    group.bench_function("sequential", |b| {
        b.iter(|| run_suite_seq(black_box(&registry), black_box(&opts)))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| run_suite(black_box(&registry), black_box(&opts)))
    });
    group.finish();
}

criterion_group!(benches, bench_suite);
criterion_main!(benches);
