use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use vr_core::grid::{map_cells, map_cells_sequential, verify_cell};
use vr_core::numberfield::analyze;
use vr_core::Params;

fn bench_analyze(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze_grid");
    group.sample_size(10);
    for r_max in [15u32, 23, 31] {
        let cells = Params::grid(3, r_max);
        group.bench_with_input(BenchmarkId::new("sequential", r_max), &cells, |b, cells| {
            b.iter(|| map_cells_sequential(black_box(cells), |p| analyze(p).unwrap().r1))
        });
        // identical to the sequential run when built without `parallel`
        group.bench_with_input(BenchmarkId::new("parallel", r_max), &cells, |b, cells| {
            b.iter(|| map_cells(black_box(cells), |p| analyze(p).unwrap().r1))
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_grid");
    group.sample_size(10);
    let cells = Params::grid(3, 23);
    group.bench_function("sequential", |b| {
        b.iter(|| map_cells_sequential(black_box(&cells), |p| verify_cell(p, None).passed()))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| map_cells(black_box(&cells), |p| verify_cell(p, None).passed()))
    });
    group.finish();
}

criterion_group!(benches, bench_analyze, bench_verify);
criterion_main!(benches);
