//! Sequential vs rayon comparison on the block-parallel workloads.
//!
//! Run with `cargo bench -p melcoh`; building with
//! `--no-default-features` forces the sequential fallback everywhere, in
//! which case both sides of each pair coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use melcoh::cohomology::{h_total, Coefficients, Complex, Domain};
use melcoh::melikian::Melikian;
use melcoh::verify::run_all;
use melcoh::Exec;

fn bench_h1_weight0(c: &mut Criterion) {
    let alg = Melikian::build();
    let mut group = c.benchmark_group("h1_adjoint_weight0");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::new("exec", format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| {
                let cx =
                    Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg)).unwrap();
                assert_eq!(h_total(&cx, 1, exec), 0);
            })
        });
    }
    group.finish();
}

fn bench_structure_claims(c: &mut Criterion) {
    let alg = Melikian::build();
    let mut group = c.benchmark_group("structure_claims");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::new("exec", format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| {
                let reports = run_all(&alg, Some("structure"), exec).unwrap();
                assert!(reports.iter().all(|r| r.passed()));
            })
        });
    }
    group.finish();
}

fn bench_invariant_scan(c: &mut Criterion) {
    let alg = Melikian::build();
    let mut group = c.benchmark_group("invariant_cochain_scan");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::new("exec", format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| {
                let r = melcoh::verify::run_claim(&alg, "inv-cochain-d17", exec).unwrap();
                assert!(r.passed());
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_h1_weight0, bench_structure_claims, bench_invariant_scan);
criterion_main!(benches);
