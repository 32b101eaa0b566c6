use criterion::{criterion_group, criterion_main, Criterion};
use linecfg::search::{brute_force_oracle, theorem_a_candidates, DerivedConfig, OracleConfig};
use linecfg::{derived_search, InequalityId, RealizabilityClass};
use std::hint::black_box;

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("n3_d4_16", |b| {
        let cfg = OracleConfig::new(3, 4, 16, RealizabilityClass::RealLine)
            .excluding(&[InequalityId::Shnurnikov])
            .with_jobs(1);
        b.iter(|| brute_force_oracle(black_box(&cfg)).unwrap())
    });
    g.bench_function("n5_d4_18", |b| {
        let cfg = OracleConfig::new(5, 4, 18, RealizabilityClass::RealLine).with_jobs(1);
        b.iter(|| brute_force_oracle(black_box(&cfg)).unwrap())
    });
    g.finish();
}

fn derived(c: &mut Criterion) {
    c.bench_function("theorem_a_candidates", |b| b.iter(theorem_a_candidates));
    c.bench_function("derived_n5_d4_30", |b| {
        let cfg = DerivedConfig {
            n: 5,
            d_min: 4,
            d_max: 30,
            class: RealizabilityClass::RealLine,
            excluded: vec![],
            jobs: 1,
        };
        b.iter(|| derived_search(black_box(&cfg)).unwrap())
    });
}

criterion_group!(benches, oracle, derived);
criterion_main!(benches);
