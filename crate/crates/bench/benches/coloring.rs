use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use grundy_bench::{gnp, k_tree};
use grundy_core::oracle::{grundy_number_with, GrundySearch};
use grundy_core::{greedy_grundy_chordal, perfect_elimination_order, Direction, OracleLimits};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfect_elimination_order");
    for &n in &[1_000usize, 5_000, 10_000] {
        let g = k_tree(n, 3, 42);
        group.bench_with_input(BenchmarkId::new("ktree_k3", n), &g, |b, g| {
            b.iter(|| perfect_elimination_order(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_grundy_chordal");
    for &k in &[1usize, 3, 6] {
        let g = k_tree(5_000, k, 7);
        for dir in [Direction::Peo, Direction::ReversePeo] {
            group.bench_with_input(BenchmarkId::new(format!("k{k}"), dir), &g, |b, g| {
                b.iter(|| greedy_grundy_chordal(black_box(g), dir).unwrap())
            });
        }
    }
    group.finish();
}

fn grundy_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("grundy_number_exact");
    group.sample_size(10);
    let limits = OracleLimits::default();
    for &n in &[7usize, 8] {
        let g = gnp(n, 0.5, 3);
        for search in [GrundySearch::Exhaustive, GrundySearch::Pruned] {
            group.bench_with_input(BenchmarkId::new(format!("{search:?}"), n), &g, |b, g| {
                b.iter(|| grundy_number_with(black_box(g), &limits, search).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, elimination, greedy, grundy_oracle);
criterion_main!(benches);
