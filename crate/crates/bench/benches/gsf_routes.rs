use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gsf_bench::instances;
use gsf_core::{choquet_generalized, compute_gsf, ChoquetRoute, GsfRoute};

fn gsf_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("gsf");
    group.sample_size(20);
    for n in [3, 5, 7] {
        let batch = instances(n, 16);
        for route in GsfRoute::ALL {
            group.bench_with_input(BenchmarkId::new(route.name(), n), &batch, |b, batch| {
                b.iter(|| {
                    for i in batch {
                        black_box(compute_gsf(&i.fca, &i.measure, &i.x, route).unwrap());
                    }
                })
            });
        }
    }
    group.finish();
}

fn choquet_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("choquet");
    group.sample_size(20);
    let batch = instances(5, 16);
    for route in ChoquetRoute::ALL {
        group.bench_function(route.name(), |b| {
            b.iter(|| {
                for i in &batch {
                    black_box(choquet_generalized(&i.fca, &i.measure, &i.x, route).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, gsf_routes, choquet_routes);
criterion_main!(benches);
