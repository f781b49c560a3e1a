use std::hint::black_box;

use bm_core::boros_moll::BMTable;
use bm_core::certificates::{self, GridBox};
use bm_core::criteria;
use bm_core::seq::{self, Seq};
use criterion::{criterion_group, criterion_main, Criterion};

fn table_build(c: &mut Criterion) {
    c.bench_function("table m<=120", |b| b.iter(|| BMTable::new(black_box(120))));
}

fn briggs_rows(c: &mut Criterion) {
    let t = BMTable::new(120);
    c.bench_function("row briggs m<=120", |b| {
        b.iter(|| {
            for m in 2..=120 {
                black_box(seq::check_briggs(&Seq::complete(0, t.row(m))));
            }
        })
    });
}

fn criterion_instance(c: &mut Criterion) {
    let t = BMTable::new(60);
    let mut g = c.benchmark_group("criterion");
    g.sample_size(10);
    g.bench_function("conditions i=5 n<=45", |b| b.iter(|| criteria::sunzhao_boros_moll(&t, 5, 45).unwrap()));
    g.bench_function("nth root i=10 n<=30", |b| {
        b.iter(|| criteria::nthroot_check(&t, 10, 30, seq::DEFAULT_BIT_BUDGET))
    });
    g.finish();
}

fn certificates_all(c: &mut Criterion) {
    let mut g = c.benchmark_group("certificates");
    g.sample_size(10);
    g.bench_function("all", |b| b.iter(|| certificates::run_all(GridBox::square(10)).unwrap()));
    g.finish();
}

criterion_group!(benches, table_build, briggs_rows, criterion_instance, certificates_all);
criterion_main!(benches);
