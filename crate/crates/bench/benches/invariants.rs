use std::hint::black_box;

use criterion::{Criterion, criterion_group, criterion_main};
use lensd::{LensSpace, dedekind};

fn bench_d_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_table");
    group.sample_size(10);
    for (p, q) in [(97i64, 31i64), (997, 331), (4999, 1666)] {
        let lens = LensSpace::new(p, q).unwrap();
        group.bench_function(format!("L({p},{q})"), |b| {
            b.iter(|| black_box(&lens).d_table())
        });
    }
    group.finish();
}

fn bench_single_label(c: &mut Criterion) {
    let mut group = c.benchmark_group("single_label");
    group.sample_size(10);
    let lens = LensSpace::new(10007, 3141).unwrap();
    let s = lens.spinc(5003);
    group.bench_function("closed", |b| {
        b.iter(|| black_box(&lens).d_closed(black_box(s)))
    });
    group.bench_function("recursive", |b| {
        b.iter(|| black_box(&lens).d_recursive(black_box(s)))
    });
    group.bench_function("tange", |b| {
        b.iter(|| black_box(&lens).d_tange(black_box(s)))
    });
    group.finish();
}

fn bench_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("sums");
    group.sample_size(10);
    group.bench_function("dedekind_sum(3141,10007)", |b| {
        b.iter(|| dedekind::dedekind_sum(black_box(3141), black_box(10007)))
    });
    group.bench_function("rademacher_sum(3141,10007,271)", |b| {
        b.iter(|| dedekind::rademacher_sum(black_box(3141), black_box(10007), black_box(271)))
    });
    group.finish();
}

criterion_group!(benches, bench_d_table, bench_single_label, bench_sums);
criterion_main!(benches);
