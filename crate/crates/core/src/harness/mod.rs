//! Config-driven experiment grids: run, aggregate, export.

mod config;
mod export;
mod runner;

pub use config::{parse_config, parse_config_with, AlgorithmConfig, EmitConfig, ExperimentConfig, DEFAULT_RUNS};
pub use export::{
    export_convergence, export_ledger, export_records, export_report, format_value, render_report_text, write_outputs,
    ReportFile,
};
pub use runner::{run_experiment, run_experiment_with, CellFailure, Execution, ExperimentResult, RunRecord};
