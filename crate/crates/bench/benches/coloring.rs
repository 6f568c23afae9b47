use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use chordfactor::classify::{edge_in_separating_pm, forced_hamiltonian};
use chordfactor::coloring::{special_3coloring, verify_special};
use chordfactor::factors::{separating_pm_through_edge, two_factor_with_chord};
use chordfactor_bench::{cubic_with_edge, labeled_triangulation};

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("special_3coloring");
    group.sample_size(10);
    for n in [250, 500, 1000, 2000] {
        let nt = labeled_triangulation(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &nt, |b, nt| {
            b.iter(|| special_3coloring(black_box(nt)).unwrap())
        });
    }
    group.finish();

    let nt = labeled_triangulation(2000, 1);
    let f = special_3coloring(&nt).unwrap();
    c.bench_function("verify_special/2000", |b| b.iter(|| verify_special(black_box(&nt), black_box(&f))));
}

fn factors(c: &mut Criterion) {
    let mut group = c.benchmark_group("two_factor_with_chord");
    group.sample_size(10);
    for n in [100, 400] {
        let (g, e) = cubic_with_edge(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(g.vertex_count()), &(g, e), |b, (g, e)| {
            b.iter(|| two_factor_with_chord(black_box(g), *e).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("separating_pm_through_edge");
    group.sample_size(10);
    for n in [100, 400] {
        let (g, e) = cubic_with_edge(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(g.vertex_count()), &(g, e), |b, (g, e)| {
            b.iter(|| separating_pm_through_edge(black_box(g), *e))
        });
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    for n in [30, 100] {
        let (g, e) = cubic_with_edge(n, 4);
        let v = g.vertex_count();
        group.bench_with_input(BenchmarkId::new("forced_hamiltonian", v), &(g.clone(), e), |b, (g, e)| {
            b.iter(|| forced_hamiltonian(black_box(g), *e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("edge_in_separating_pm", v), &(g, e), |b, (g, e)| {
            b.iter(|| edge_in_separating_pm(black_box(g), *e).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, coloring, factors, classify);
criterion_main!(benches);
