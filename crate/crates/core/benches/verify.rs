use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypdual::algebra::rat;
use hypdual::hypergeometric as hg;
use hypdual::q_hypergeometric as qhg;
use hypdual::sampling::{hg_samples, qhg_samples};
use hypdual::Execution;

const ORDER: usize = 40;

fn duality_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("duality_grid");
    group.sample_size(10).warm_up_time(Duration::from_millis(500));

    for r in [3, 5] {
        let p = &hg_samples(r, 1, 7)[0];
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("theta/{exec:?}"), r), &r, |b, _| {
                b.iter(|| black_box(hg::verify_theorem1_with(p, ORDER, exec).unwrap()))
            });
        }
    }

    let q = rat(1, 2);
    for r in [3, 4] {
        let p = &qhg_samples(r, &q, 1, 7)[0];
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("qshift/{exec:?}"), r), &r, |b, _| {
                b.iter(|| black_box(qhg::verify_theorem2_with(p, ORDER, exec).unwrap()))
            });
        }
    }

    group.finish();
}

criterion_group!(benches, duality_grid);
criterion_main!(benches);
