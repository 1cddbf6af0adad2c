use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use toricap::capacities::calg_sequence;
use toricap::oracle::brute_calg_table;
use toricap_bench::{fixtures, large_polygon};

fn calg(c: &mut Criterion) {
    let mut group = c.benchmark_group("calg_sequence");
    for (name, p) in fixtures() {
        for k_max in [20usize, 100] {
            group.bench_with_input(BenchmarkId::new(name, k_max), &k_max, |b, &k| {
                b.iter(|| calg_sequence(black_box(&p), k).unwrap())
            });
        }
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_calg_table");
    group.sample_size(10);
    for (name, p) in fixtures() {
        group.bench_function(name, |b| {
            b.iter(|| brute_calg_table(black_box(&p), 10, 6).unwrap())
        });
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let p = large_polygon(40);
    c.bench_function("lattice_count/64-gon", |b| b.iter(|| black_box(&p).lattice_count()));
    c.bench_function("lattice_width/64-gon", |b| b.iter(|| black_box(&p).lattice_width()));
}

criterion_group!(benches, calg, oracle, lattice);
criterion_main!(benches);
