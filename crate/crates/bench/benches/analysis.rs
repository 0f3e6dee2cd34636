use criterion::{black_box, criterion_group, criterion_main, Criterion};

use centro::{analyze, chi_square, ContingencyTable, DistributionTable, SegmentConfig};
use centro_bench::fixture;

fn bench_chi_square(c: &mut Criterion) {
    let table = ContingencyTable {
        a: 56,
        b: 24,
        c: 13,
        d: 20,
    };
    c.bench_function("chi_square", |b| {
        b.iter(|| chi_square(black_box(table)).unwrap())
    });
}

fn bench_analyze(c: &mut Criterion) {
    let small = fixture("ex9");
    c.bench_function("analyze_small_document", |b| {
        b.iter(|| analyze(black_box(&small), SegmentConfig::default()).unwrap())
    });

    let synthetic = fixture("synthetic/synthetic_0");
    c.bench_function("analyze_synthetic_document", |b| {
        b.iter(|| analyze(black_box(&synthetic), SegmentConfig::default()).unwrap())
    });
}

fn bench_distribution(c: &mut Criterion) {
    let corpus: Vec<_> = (0..8)
        .map(|i| fixture(&format!("synthetic/synthetic_{i}")))
        .collect();
    c.bench_function("distribution_over_corpus", |b| {
        b.iter(|| {
            DistributionTable::from_documents(black_box(&corpus), SegmentConfig::default())
                .unwrap()
        })
    });
}

criterion_group!(benches, bench_chi_square, bench_analyze, bench_distribution);
criterion_main!(benches);
