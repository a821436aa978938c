use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use multitilde::{count_ptt, count_ptt_parallel, enumerate_ptt};

fn bench_counting(c: &mut Criterion) {
    c.bench_function("count arity 5", |b| {
        b.iter(|| black_box(count_ptt(5).unwrap().ptt_count))
    });
    c.bench_function("count arity 6", |b| {
        b.iter(|| black_box(count_ptt(6).unwrap().ptt_count))
    });
    c.bench_function("count arity 6, four workers", |b| {
        b.iter(|| black_box(count_ptt_parallel(6, 4).unwrap().ptt_count))
    });
}

fn bench_streaming(c: &mut Criterion) {
    c.bench_function("stream and decode arity 5", |b| {
        b.iter(|| black_box(enumerate_ptt(5).unwrap().count()))
    });
}

criterion_group!(benches, bench_counting, bench_streaming);
criterion_main!(benches);
