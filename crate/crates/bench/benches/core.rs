use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use skcodes::codes::{dord_table, CodeContext, ONE_POINT_DIVISOR};
use skcodes::points::enumerate_points;
use skcodes::{CurveSpec, Family, Fe, FieldContext, NumericalSemigroup};

const S8: [u64; 5] = [40, 50, 60, 64, 65];

fn field(c: &mut Criterion) {
    let f = FieldContext::gf4096();
    c.bench_function("gf4096 mul 4096", |b| {
        b.iter(|| {
            let mut acc = Fe::ONE;
            for e in f.elements() {
                acc = f.add(acc, f.mul(e, black_box(Fe(1234))));
            }
            acc
        })
    });
}

fn semigroup(c: &mut Criterion) {
    c.bench_function("semigroup q=8", |b| b.iter(|| NumericalSemigroup::new(black_box(&S8), 0).unwrap()));
    c.bench_function("semigroup q=32", |b| {
        b.iter(|| NumericalSemigroup::new(black_box(&[800, 900, 1000, 1024, 1025]), 0).unwrap())
    });
    let s = NumericalSemigroup::new(&S8, 0).unwrap();
    c.bench_function("dord table q=8", |b| b.iter(|| dord_table(&s, 29184, 2..=589).unwrap()));
}

fn points(c: &mut Criterion) {
    let spec = CurveSpec::new(Family::SuzukiCover, 1);
    let f = std::sync::Arc::new(FieldContext::gf4096());
    let mut g = c.benchmark_group("points");
    g.sample_size(10);
    g.bench_function("enumerate q=8", |b| b.iter(|| enumerate_points(&spec, f.clone()).unwrap()));
    let ctx = CodeContext::q8().unwrap();
    g.bench_function("fiber rank r=14000", |b| {
        b.iter(|| ctx.fiber_rank(black_box(14000), ONE_POINT_DIVISOR).unwrap())
    });
    g.bench_function("direct rank r=392", |b| {
        b.iter(|| ctx.direct_rank(black_box(392), ONE_POINT_DIVISOR).unwrap())
    });
    g.finish();
}

criterion_group!(benches, field, semigroup, points);
criterion_main!(benches);
