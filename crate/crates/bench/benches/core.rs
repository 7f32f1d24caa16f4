use criterion::{black_box, criterion_group, criterion_main, Criterion};

use lifestory_bench::sample_seeds;
use lifestory_core::{
    cls_trajectory, cv, cv_trajectory, enumerate_autobiographical, find_praising_pairs,
    verify_cv_cycles, DEFAULT_MAX_STEPS,
};

fn maps(c: &mut Criterion) {
    let seeds = sample_seeds();
    c.bench_function("cv/sample", |b| {
        b.iter(|| {
            for s in &seeds {
                black_box(cv(black_box(s)).unwrap());
            }
        })
    });
    c.bench_function("trajectory/cv", |b| {
        b.iter(|| {
            for s in &seeds {
                black_box(cv_trajectory(s, DEFAULT_MAX_STEPS).unwrap());
            }
        })
    });
    c.bench_function("trajectory/cls", |b| {
        b.iter(|| {
            for s in &seeds {
                black_box(cls_trajectory(s, DEFAULT_MAX_STEPS).unwrap());
            }
        })
    });
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("autobiographical", |b| b.iter(enumerate_autobiographical));
    group.bench_function("praising_pairs", |b| b.iter(find_praising_pairs));
    group.bench_function("verify_cv_0_10000", |b| {
        b.iter(|| verify_cv_cycles(0, 10_000, DEFAULT_MAX_STEPS))
    });
    group.finish();
}

criterion_group!(benches, maps, searches);
criterion_main!(benches);
