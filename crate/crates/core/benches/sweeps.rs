use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lcdbch::bchcodes::{CodeSpec, Family};
use lcdbch::cosets::CosetParams;
use lcdbch::distance::{exact_distance, SearchBudget};
use lcdbch::polyring::RootField;
use lcdbch::sweep::{master_oracle, OracleConfig, ParamGrid};
use lcdbch::Exec;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn oracle(c: &mut Criterion) {
    let cfg = OracleConfig {
        grid: ParamGrid {
            max_qm: 729,
            binary_max_m: 12,
        },
        ..Default::default()
    };
    let mut group = c.benchmark_group("dimension_oracle");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_function(name, |b| b.iter(|| master_oracle(&cfg, exec)));
    }
    group.finish();
}

fn exact_search(c: &mut Criterion) {
    let specs = [
        ("lcd-b-3-3-4", CodeSpec::lcd_b(CosetParams::new(3, 3).unwrap(), 4).unwrap()),
        ("narrow-2-5-9", CodeSpec::narrow(CosetParams::new(2, 5).unwrap(), 9).unwrap()),
        // distance above the BCH bound: every message is visited
        (
            "lcd-a-2-5-2",
            CodeSpec::new(Family::LcdAOddN, CosetParams::new(2, 5).unwrap(), 2, None).unwrap(),
        ),
        (
            "lcd-b-tilde-3-3-3",
            CodeSpec::lcd_b_tilde(CosetParams::new(3, 3).unwrap(), 3).unwrap(),
        ),
    ];
    let mut group = c.benchmark_group("exact_distance");
    group.sample_size(10);
    for (label, spec) in &specs {
        for (name, exec) in POLICIES {
            let rf = RootField::new(spec.params()).unwrap();
            group.bench_with_input(BenchmarkId::new(name, label), spec, |b, spec| {
                b.iter(|| exact_distance(spec, &rf, SearchBudget::default(), exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, oracle, exact_search);
criterion_main!(benches);
