use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::config::ExperimentConfig;
use crate::error::Result;
use crate::optimizer::{Algorithm, AlgorithmRegistry};
use crate::problems::{discrepancy_ledger, FixtureAudit, ProblemSpec, Registry};
use crate::stats::ComparisonReport;

/// How independent cells are scheduled. Results never depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Data-parallel over cells; `threads: None` uses the global pool.
    /// Without the `parallel` feature this runs sequentially.
    #[default]
    Parallel,
    ParallelWith { threads: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: String,
    pub problem: String,
    pub run_index: usize,
    pub seed: u64,
    pub best_position: Vec<f64>,
    /// Best-so-far at the last iteration (`+inf` if never feasible).
    pub final_cost: f64,
    pub objective: f64,
    pub violation: f64,
    pub feasible: bool,
    pub evaluations: u64,
    pub evaluations_per_iteration: Vec<u64>,
    pub wall_time_ms: f64,
    pub convergence: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellFailure {
    pub algorithm: String,
    pub problem: String,
    pub run_index: usize,
    pub seed: u64,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    /// Ordered by (algorithm, problem, run) as listed in the config.
    pub records: Vec<RunRecord>,
    pub failures: Vec<CellFailure>,
    pub report: Option<ComparisonReport>,
    pub report_error: Option<String>,
    pub ledger: Vec<FixtureAudit>,
}

struct Cell<'a> {
    algorithm: &'a str,
    runner: std::sync::Arc<dyn Algorithm>,
    params: &'a crate::engine::AlgoParams,
    spec: &'a ProblemSpec,
    run_index: usize,
    seed: u64,
}

type CellOutcome = std::result::Result<RunRecord, CellFailure>;

fn run_cell(cell: &Cell<'_>) -> CellOutcome {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| cell.runner.run(cell.spec, cell.params, cell.seed)));
    let failure = |error: String| CellFailure {
        algorithm: cell.algorithm.to_string(),
        problem: cell.spec.name().to_string(),
        run_index: cell.run_index,
        seed: cell.seed,
        error,
    };
    match outcome {
        Ok(Ok(trace)) => Ok(RunRecord {
            algorithm: cell.algorithm.to_string(),
            problem: cell.spec.name().to_string(),
            run_index: cell.run_index,
            seed: cell.seed,
            final_cost: trace.final_cost(),
            best_position: trace.best_position,
            objective: trace.best_objective,
            violation: trace.best_violation,
            feasible: trace.feasible,
            evaluations: trace.evaluations,
            evaluations_per_iteration: trace.evaluations_per_iteration,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            convergence: trace.convergence,
        }),
        Ok(Err(e)) => Err(failure(e.to_string())),
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "run panicked".into());
            Err(failure(format!("panic: {msg}")))
        }
    }
}

#[cfg(feature = "parallel")]
fn execute(cells: &[Cell<'_>], execution: Execution) -> Result<Vec<CellOutcome>> {
    use rayon::prelude::*;
    match execution {
        Execution::Sequential => Ok(cells.iter().map(run_cell).collect()),
        Execution::Parallel => Ok(cells.par_iter().map(run_cell).collect()),
        Execution::ParallelWith { threads } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| crate::error::Error::Config(format!("thread pool: {e}")))?;
            Ok(pool.install(|| cells.par_iter().map(run_cell).collect()))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn execute(cells: &[Cell<'_>], execution: Execution) -> Result<Vec<CellOutcome>> {
    if execution != Execution::Sequential {
        log::debug!("built without the parallel feature; running cells sequentially");
    }
    Ok(cells.iter().map(run_cell).collect())
}

pub fn run_experiment(config: &ExperimentConfig, execution: Execution) -> Result<ExperimentResult> {
    run_experiment_with(config, execution, &Registry::builtin(), &AlgorithmRegistry::default())
}

/// Run every (algorithm, problem, run) cell and aggregate. Failed cells are
/// recorded and skipped; the report covers the successful runs.
pub fn run_experiment_with(
    config: &ExperimentConfig,
    execution: Execution,
    problems: &Registry,
    algorithms: &AlgorithmRegistry,
) -> Result<ExperimentResult> {
    config.validate(problems, algorithms)?;
    let specs: Vec<&ProblemSpec> = config.problems.iter().map(|p| problems.get(p)).collect::<Result<_>>()?;
    let mut cells = Vec::new();
    for a in &config.algorithms {
        let runner = algorithms.get(&a.name)?;
        for spec in &specs {
            for r in 0..config.runs {
                cells.push(Cell {
                    algorithm: &a.name,
                    runner: runner.clone(),
                    params: &a.params,
                    spec,
                    run_index: r,
                    seed: config.seed(r),
                });
            }
        }
    }
    let outcomes = execute(&cells, execution)?;
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for o in outcomes {
        match o {
            Ok(r) => records.push(r),
            Err(f) => {
                log::warn!("{} on {} run {} failed: {}", f.algorithm, f.problem, f.run_index, f.error);
                failures.push(f);
            }
        }
    }

    let names: Vec<String> = config.algorithms.iter().map(|a| a.name.clone()).collect();
    let grid: Vec<Vec<Vec<f64>>> = config
        .problems
        .iter()
        .map(|p| {
            names
                .iter()
                .map(|a| {
                    records
                        .iter()
                        .filter(|r| &r.algorithm == a && &r.problem == p)
                        .map(|r| r.final_cost)
                        .collect()
                })
                .collect()
        })
        .collect();
    let (report, report_error) = match ComparisonReport::build(&config.reference, &names, &config.problems, &grid) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let ledger = discrepancy_ledger(problems)
        .into_iter()
        .filter(|a| config.problems.contains(&a.problem))
        .collect();
    Ok(ExperimentResult {
        records,
        failures,
        report,
        report_error,
        ledger,
    })
}
