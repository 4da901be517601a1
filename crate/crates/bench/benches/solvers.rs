use criterion::{black_box, criterion_group, criterion_main, Criterion};

use allroots::{amr, static_mesh, two_phase, CountedObjective, SolverConfig};
use allroots_bench::{five_roots, mixed_roots};

fn adaptive_five_roots(c: &mut Criterion) {
    let cfg = SolverConfig::default()
        .with_ht_scale(0.04)
        .with_tolerances(1e-2, 1e-3);
    c.bench_function("adaptive/five_roots", |b| {
        b.iter(|| {
            let mut obj = CountedObjective::new(five_roots);
            let report = amr::find_roots(&mut obj, black_box(0.0), black_box(10.0), &cfg).unwrap();
            black_box(report)
        })
    });
}

fn static_five_roots(c: &mut Criterion) {
    // The coarsest uniform mesh that still separates the 1e-5 pair.
    let cfg = static_mesh::StaticConfig::new(1e-5, 1e-6);
    let mut group = c.benchmark_group("static");
    group.sample_size(10);
    group.bench_function("five_roots_1e-5_mesh", |b| {
        b.iter(|| {
            let mut obj = CountedObjective::new(five_roots);
            let report =
                static_mesh::find_roots(&mut obj, black_box(0.0), black_box(10.0), &cfg).unwrap();
            black_box(report)
        })
    });
    group.finish();
}

fn two_phase_mixed(c: &mut Criterion) {
    let cfg = two_phase::TwoPhaseConfig {
        phase1: SolverConfig::default()
            .with_ht_scale(0.1)
            .with_width_exponent(5.0)
            .with_tolerances(1e-5, 1e-5),
        phase2: SolverConfig::default()
            .with_ht_scale(0.01)
            .with_tolerances(1e-5, 1e-5),
        exclusion_factor: 1e4,
    };
    c.bench_function("two_phase/mixed_roots", |b| {
        b.iter(|| {
            let mut obj = CountedObjective::new(mixed_roots);
            let out =
                two_phase::two_phase_solve(&mut obj, black_box(0.0), black_box(4.5), &cfg).unwrap();
            black_box(out)
        })
    });
}

criterion_group!(
    benches,
    adaptive_five_roots,
    static_five_roots,
    two_phase_mixed
);
criterion_main!(benches);
