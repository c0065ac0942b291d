use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use prm_bench::Workload;
use prm_core::{AffineDecoder, AffineRegistry, Algorithm, BerlekampWelch, Exhaustive, RecursiveDecoder};

fn recursive(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursive");
    for (q, m, d, w) in [(4, 2, 3, 2), (3, 3, 2, 2), (5, 2, 4, 3), (4, 3, 3, 1)] {
        let load = Workload::prm(q, m, d, w, 16);
        for alg in [Algorithm::Basic, Algorithm::Guarded] {
            let dec = RecursiveDecoder::new(load.book.clone(), AffineRegistry::default(), alg);
            // Warm the code cache outside the measurement.
            let _ = dec.decode(m, d, &load.received[0]);
            let id = BenchmarkId::new(alg.to_string(), format!("q{q}_m{m}_d{d}_w{w}"));
            group.bench_with_input(id, &load, |b, load| {
                b.iter(|| {
                    for r in &load.received {
                        let _ = black_box(dec.decode(load.m, load.d, black_box(r)));
                    }
                })
            });
        }
    }
    group.finish();
}

fn affine(c: &mut Criterion) {
    let mut group = c.benchmark_group("affine");
    for (q, m, d, w) in [(4, 2, 2, 3), (3, 2, 2, 1), (4, 2, 3, 1)] {
        let load = Workload::rm(q, m, d, w, 16);
        let dec = Exhaustive::default();
        let _ = dec.decode(&load.code, &load.received[0]);
        group.bench_function(format!("exhaustive_q{q}_m{m}_d{d}_w{w}"), |b| {
            b.iter(|| {
                for r in &load.received {
                    let _ = black_box(dec.decode(&load.code, black_box(r)));
                }
            })
        });
    }
    for (q, d, w) in [(8, 3, 2), (9, 4, 2), (16, 7, 4)] {
        let load = Workload::rm(q, 1, d, w, 16);
        group.bench_function(format!("berlekamp_welch_q{q}_d{d}_w{w}"), |b| {
            b.iter(|| {
                for r in &load.received {
                    let _ = black_box(BerlekampWelch.decode(&load.code, black_box(r)));
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, recursive, affine);
criterion_main!(benches);
