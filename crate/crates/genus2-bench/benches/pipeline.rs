use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use num_bigint::BigInt;

use genus2_bench::fixtures;
use genus2_core::{
    classify_curve, classify_stable, compute_invariants, discriminant, run_twist, LocalContext,
    Rat, TwistQuery,
};

fn bench_invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    for (name, form) in fixtures() {
        group.bench_function(name, |b| b.iter(|| compute_invariants(&form)));
    }
    group.finish();
}

fn bench_discriminant(c: &mut Criterion) {
    let (_, form) = fixtures().pop().unwrap();
    c.bench_function("discriminant/sylvester", |b| b.iter(|| discriminant(&form)));
}

fn bench_classify(c: &mut Criterion) {
    let ctx = LocalContext::new(7).unwrap();
    let mut group = c.benchmark_group("classify");
    for (name, form) in fixtures() {
        let inv = compute_invariants(&form);
        group.bench_function(format!("stable/{name}"), |b| {
            b.iter(|| classify_stable(&inv, &ctx).unwrap())
        });
        group.bench_function(format!("full/{name}"), |b| {
            b.iter(|| classify_curve(&form, &ctx, None).unwrap())
        });
    }
    group.finish();
}

fn bench_twist(c: &mut Criterion) {
    let ctx = LocalContext::new(7).unwrap();
    let d = Rat::from(BigInt::from(7));
    let mut group = c.benchmark_group("run_twist");
    for (name, form) in fixtures() {
        group.bench_function(name, |b| {
            b.iter_batched(
                || TwistQuery::new(form.clone(), d.clone(), ctx),
                |query| run_twist(&query).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_invariants,
    bench_discriminant,
    bench_classify,
    bench_twist
);
criterion_main!(benches);
