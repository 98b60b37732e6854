use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use crownkit::lattice::all_subgroups;
use crownkit::verify::{builtin, desk_catalog, run_suite, Suite, SuiteOptions};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        ("1-thread", rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        ("default", rayon::ThreadPoolBuilder::new().build().unwrap()),
    ]
}

fn lattice(c: &mut Criterion) {
    let g = builtin("Wreath(Cyclic(2),Alt(4))").unwrap();
    let mut group = c.benchmark_group("all_subgroups C2wrA4");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| pool.install(|| all_subgroups(&g).unwrap().len())));
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let entries = desk_catalog().unwrap();
    let opts = SuiteOptions { max_order: Some(100) };
    let mut group = c.benchmark_group("sotto suite, order <= 100");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| run_suite(&entries, Suite::Sotto, &opts).rows.len()))
        });
    }
    group.finish();
}

criterion_group!(benches, lattice, suite);
criterion_main!(benches);
