use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gbooks::cliques::{book_size, count_cliques};
use gbooks::lower_bound::sample_random_graph;

fn clique_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_cliques");
    for n in [32, 64, 128] {
        let g = sample_random_graph(n, 0.5, 7).unwrap();
        group.bench_with_input(BenchmarkId::new("k4", n), &g, |b, g| {
            b.iter(|| count_cliques(black_box(g), 4))
        });
    }
    group.finish();
}

fn book_sizes(c: &mut Criterion) {
    let mut group = c.benchmark_group("book_size");
    for n in [32, 64, 128] {
        let g = sample_random_graph(n, 0.5, 11).unwrap();
        for r in [2, 3] {
            group.bench_with_input(BenchmarkId::new(format!("r{r}"), n), &g, |b, g| {
                b.iter(|| book_size(black_box(g), r))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, clique_counting, book_sizes);
criterion_main!(benches);
