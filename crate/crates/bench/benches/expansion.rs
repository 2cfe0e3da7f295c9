use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qsign_core::dissection::{assemble, qq_components, quintuple_components};
use qsign_core::products::eta_quotient;
use qsign_core::signpattern::predict_theorem1;
use qsign_core::EtaQuotientSpec;

fn eta_quotients(c: &mut Criterion) {
    let mut group = c.benchmark_group("eta_quotient");
    group.sample_size(10);
    for (spec, t) in [("2^5 7^-1", 5000), ("2^5 7^-1", 20000), ("1^9 3^-12", 3000)] {
        let parsed: EtaQuotientSpec = spec.parse().unwrap();
        group.bench_with_input(BenchmarkId::new(spec, t), &t, |b, &t| {
            b.iter(|| eta_quotient(black_box(&parsed), t).unwrap())
        });
    }
    // general Pochhammer factors take the elementary path
    let rr: EtaQuotientSpec = "2.5^1 3.5^1 1.5^-1 4.5^-1".parse().unwrap();
    group.bench_function("rogers_ramanujan/5000", |b| {
        b.iter(|| eta_quotient(black_box(&rr), 5000).unwrap())
    });
    group.finish();
}

fn dissections(c: &mut Criterion) {
    let mut group = c.benchmark_group("assemble");
    for m in [5, 13] {
        let d = qq_components(m).unwrap();
        group.bench_with_input(BenchmarkId::new("euler", m), &d, |b, d| {
            b.iter(|| assemble(black_box(d), 500))
        });
    }
    let d = quintuple_components(8, 3, 11).unwrap();
    group.bench_function("quintuple_8_3_11", |b| {
        b.iter(|| assemble(black_box(&d), 500))
    });
    group.finish();
}

fn predictions(c: &mut Criterion) {
    c.bench_function("predict_theorem1/19x9", |b| {
        b.iter(|| {
            for p in [5, 7, 11, 13, 17, 19] {
                for i in (2..=9).filter(|i| i % p != 0) {
                    black_box(predict_theorem1(p, i).unwrap());
                }
            }
        })
    });
}

criterion_group!(benches, eta_quotients, dissections, predictions);
criterion_main!(benches);
