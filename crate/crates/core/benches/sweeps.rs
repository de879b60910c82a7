use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use icf_core::interlace::{certificate_sweep, run_suite, Suite};
use icf_core::lab::conjecture_scan;
use icf_core::par::Execution;
use icf_core::qseries::truncations;
use num_bigint::BigInt;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("identity-suite");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 60), &exec, |b, &exec| {
            b.iter(|| run_suite(Suite::All, &BigInt::from(2), black_box(60), exec))
        });
    }
    g.finish();
}

fn certificates(c: &mut Criterion) {
    let xs: Vec<BigInt> = (2..=10).map(BigInt::from).collect();
    let ss: Vec<BigInt> = (1..=3).map(BigInt::from).collect();
    let mut g = c.benchmark_group("certificate-sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 30), &exec, |b, &exec| {
            b.iter(|| certificate_sweep(&xs, &ss, black_box(30), exec).unwrap())
        });
    }
    g.finish();
}

fn qseries(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduced-truncations");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 40), &exec, |b, &exec| {
            b.iter(|| truncations(black_box(40), exec))
        });
    }
    g.finish();
}

fn scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("conjecture-scan");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 1024), &exec, |b, &exec| {
            b.iter(|| conjecture_scan(&[2, 3], &[2, 3], black_box(1024), 200, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(sweeps, identities, certificates, qseries, scan);
criterion_main!(sweeps);
