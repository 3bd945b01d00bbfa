use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use ttlink::{braids_equal, jones_polynomial, linking_matrix, reduction_identity_pair, unlink_verdict};
use ttlink_bench::{sample_braids, sample_params};

fn bench_jones(c: &mut Criterion) {
    let mut group = c.benchmark_group("jones");
    for (params, braid) in sample_params().iter().zip(sample_braids()) {
        group.bench_function(params.to_string(), |b| {
            b.iter(|| jones_polynomial(black_box(&braid)).unwrap())
        });
    }
    group.finish();
}

fn bench_linking(c: &mut Criterion) {
    let braids = sample_braids();
    c.bench_function("linking_matrix", |b| {
        b.iter(|| {
            for braid in &braids {
                black_box(linking_matrix(braid).unwrap());
            }
        })
    });
}

fn bench_word_problem(c: &mut Criterion) {
    let (lhs, rhs) = reduction_identity_pair(2, 1).unwrap();
    c.bench_function("handle_reduction_equality_n2", |b| {
        b.iter(|| braids_equal(black_box(&lhs), black_box(&rhs)).unwrap())
    });
}

fn bench_classifier(c: &mut Criterion) {
    let params = sample_params();
    c.bench_function("unlink_verdict_batch", |b| {
        b.iter(|| {
            for p in &params {
                if p.gcd() >= 2 {
                    black_box(unlink_verdict(p).unwrap());
                }
            }
        })
    });
}

criterion_group!(
    benches,
    bench_jones,
    bench_linking,
    bench_word_problem,
    bench_classifier
);
criterion_main!(benches);
