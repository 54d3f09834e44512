//! Inner loops on a one-thread rayon pool against the default pool (one
//! thread per core).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use commuting_classes::catalog::{symmetric_group, GroupSpec, SubgroupSpec};
use commuting_classes::gl::gl4::cyclic_algebra_scan;
use commuting_classes::hall::{hall_audit, DEFAULT_SUBSET_CAP};
use commuting_classes::partitions::{counting_identity, proposition1_crosscheck};
use commuting_classes::{with_quotient, Partition, DEFAULT_CAP};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let default = rayon::ThreadPoolBuilder::new().build().expect("pool");
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool");
    vec![("sequential", single), ("parallel", default)]
}

fn relation_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("relation_sym7");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                pool.install(|| {
                    // a fresh group each time so the cached relation is rebuilt
                    let g = symmetric_group(7).expect("Sym(7)");
                    g.commuting_relation().row_count(0)
                })
            })
        });
    }
    group.finish();
}

fn gl4_scan(c: &mut Criterion) {
    let a: Partition = "3+1".parse().expect("partition");
    let b: Partition = "2+2".parse().expect("partition");
    let mut group = c.benchmark_group("gl4_cyclic_scan");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| pool.install(|| cyclic_algebra_scan(&a, &b)))
        });
    }
    group.finish();
}

fn hall(c: &mut Criterion) {
    let q = GroupSpec::Sym(7).build(&SubgroupSpec::Alt, DEFAULT_CAP).expect("Sym(7)/Alt(7)");
    let (relation, left, right) = with_quotient!(&q, q => {
        let g = q.group();
        let all: Vec<usize> = (0..g.classes().len()).collect();
        (g.commuting_relation().clone(), all.clone(), all)
    });
    let mut group = c.benchmark_group("hall_audit_sym7");
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| hall_audit(&relation, &left, &right, DEFAULT_SUBSET_CAP, 0).pass))
        });
    }
    group.finish();
}

fn partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partitions");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new("coarsening_crosscheck_7", name), |b| {
            b.iter(|| pool.install(|| proposition1_crosscheck(7).expect("consistent").pairs_checked))
        });
        group.bench_function(BenchmarkId::new("counting_identity_60", name), |b| {
            b.iter(|| pool.install(|| counting_identity(60).expect("identity").p_even))
        });
    }
    group.finish();
}

criterion_group!(benches, relation_matrix, gl4_scan, hall, partitions);
criterion_main!(benches);
