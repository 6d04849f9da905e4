//! Sequential vs rayon scheduling of a small experiment grid, plus a
//! single-run baseline for each optimizer.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use seahorse::engine::AlgoParams;
use seahorse::harness::{run_experiment, Execution, ExperimentConfig};
use seahorse::optimizer::{Algorithm, Variant};
use seahorse::problems::get_problem_spec;

fn grid() -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(&["msho", "sho"], &["spring", "welded-beam", "pressure-vessel", "sphere"]);
    cfg.runs = 4;
    for a in &mut cfg.algorithms {
        a.params.max_iter = 100;
    }
    cfg
}

fn execution(c: &mut Criterion) {
    let cfg = grid();
    let mut g = c.benchmark_group("grid");
    g.sample_size(10);
    for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        g.bench_with_input(BenchmarkId::from_parameter(label), &exec, |b, &exec| {
            b.iter(|| run_experiment(&cfg, exec).unwrap())
        });
    }
    g.finish();
}

fn single_run(c: &mut Criterion) {
    let spec = get_problem_spec("spring").unwrap();
    let params = AlgoParams {
        max_iter: 100,
        ..AlgoParams::default()
    };
    let mut g = c.benchmark_group("run");
    for v in [Variant::Sho, Variant::Msho] {
        g.bench_function(v.name(), |b| b.iter(|| v.run(&spec, &params, 3).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, execution, single_run);
criterion_main!(benches);
