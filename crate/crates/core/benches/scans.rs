use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use colorsuper::colored::{build_colored_explicit, derive_colored_with};
use colorsuper::leftaction::left_action_generators;
use colorsuper::verify::check_jacobi_with;
use colorsuper::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    group.sample_size(10);
    for two_ell in [4u32, 8] {
        let alg = build_colored_explicit(two_ell, false).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, two_ell), &alg, |b, alg| {
                b.iter(|| check_jacobi_with(alg, exec))
            });
        }
    }
    group.finish();
}

fn derivation(c: &mut Criterion) {
    let mut group = c.benchmark_group("derive");
    group.sample_size(10);
    for two_ell in [2u32, 4] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, two_ell), &two_ell, |b, &e| {
                b.iter(|| derive_colored_with(e, false, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn left_action(c: &mut Criterion) {
    let mut group = c.benchmark_group("left_action");
    group.sample_size(10);
    let alg = derive_colored_with(2, false, Exec::Sequential).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| left_action_generators(&alg, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, jacobi, derivation, left_action);
criterion_main!(benches);
