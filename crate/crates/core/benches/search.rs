use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sgl::automorphism::{automorphism_count_with, automorphism_group_with, is_stable_given};
use sgl::constructors::{asl, cyclic, dihedral};
use sgl::group::{direct_product, isomorphic_with, FiniteGroup};
use sgl::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn workloads() -> Vec<(&'static str, FiniteGroup)> {
    let k8 = asl(8).unwrap().group;
    let k16 = asl(16).unwrap().group;
    vec![
        ("K16", k16.clone()),
        ("D4xK8", direct_product(&dihedral(4).unwrap(), &k8).unwrap().group),
        ("C2xK16", direct_product(&cyclic(2).unwrap(), &k16).unwrap().group),
    ]
}

fn aut_group(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_group");
    group.sample_size(10);
    for (name, g) in workloads().into_iter().take(2) {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &g, |b, g| {
                b.iter(|| automorphism_group_with(black_box(g), exec).unwrap().order())
            });
        }
    }
    group.finish();
}

fn aut_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_count");
    group.sample_size(10);
    for (name, g) in workloads() {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &g, |b, g| {
                b.iter(|| automorphism_count_with(black_box(g), exec))
            });
        }
    }
    group.finish();
}

fn stability(c: &mut Criterion) {
    let mut group = c.benchmark_group("stability");
    group.sample_size(10);
    let g = direct_product(&cyclic(6).unwrap(), &asl(8).unwrap().group).unwrap().group;
    let aut = automorphism_group_with(&g, Execution::default()).unwrap();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "C6xK8"), |b| {
            b.iter(|| is_stable_given(black_box(&g), &aut, exec).stable)
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut group = c.benchmark_group("isomorphism");
    group.sample_size(10);
    let k8 = asl(8).unwrap().group;
    let left = direct_product(&dihedral(4).unwrap(), &k8).unwrap().group;
    let right = direct_product(&k8, &dihedral(4).unwrap()).unwrap().group;
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "D4xK8"), |b| {
            b.iter(|| isomorphic_with(black_box(&left), black_box(&right), exec).is_some())
        });
    }
    group.finish();
}

criterion_group!(benches, aut_group, aut_count, stability, isomorphism);
criterion_main!(benches);
