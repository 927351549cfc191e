use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gbooks::ramsey::{arrows, SearchConfig};
use gbooks::regularity::{eps_regular_exact, Partition};
use gbooks::Graph;

fn arrowing(c: &mut Criterion) {
    let mut group = c.benchmark_group("arrows");
    group.sample_size(10);
    for (n, symmetry) in [(6, true), (7, true), (7, false)] {
        let config = SearchConfig {
            symmetry,
            ..SearchConfig::default()
        };
        let label = if symmetry { "sym" } else { "plain" };
        group.bench_with_input(BenchmarkId::new(label, n), &config, |b, cfg| {
            b.iter(|| arrows(black_box(n), 2, 2, 2, cfg).unwrap())
        });
    }
    group.finish();
}

fn exact_regularity(c: &mut Criterion) {
    let g = Graph::complete_multipartite(&[12, 12]);
    let part = Partition::consecutive(24, 2, 12).unwrap();
    c.bench_function("eps_regular_exact 12x12", |b| {
        b.iter(|| eps_regular_exact(black_box(&g), &part.parts[0], &part.parts[1], 0.25).unwrap())
    });
}

criterion_group!(benches, arrowing, exact_regularity);
criterion_main!(benches);
