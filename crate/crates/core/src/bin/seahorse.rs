use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seahorse::harness::{parse_config, run_experiment, write_outputs, Execution};
use seahorse::optimizer::AlgorithmRegistry;
use seahorse::problems::{audit_fixture, Registry};
use seahorse::{Error, Result};

#[derive(Parser)]
#[command(name = "seahorse", version, about = "Sea Horse Optimizer experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment grid described by a TOML config.
    Run {
        config: PathBuf,
        /// Override `base_seed`.
        #[arg(long)]
        seed: Option<u64>,
        /// Override `runs`.
        #[arg(long)]
        runs: Option<usize>,
        /// Override `output_dir`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (1 = sequential). Affects wall time only.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Registered problems with dimension, constraint count and bounds.
    ListProblems {
        #[arg(long)]
        json: bool,
    },
    ListAlgorithms,
    /// Re-evaluate every published best row and report discrepancies.
    ValidateFixtures {
        #[arg(long)]
        json: bool,
    },
    /// Full problem descriptions (bounds, fixtures) as JSON.
    ExportProblems,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            eprintln!("error: kind={} message={message}", e.kind());
            ExitCode::from(2)
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Run {
            config,
            seed,
            runs,
            out,
            threads,
        } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Io(format!("{}: {e}", config.display())))?;
            let mut cfg = parse_config(&text)?;
            if let Some(s) = seed {
                cfg.base_seed = s;
            }
            if let Some(r) = runs {
                if r == 0 {
                    return Err(Error::Parse {
                        path: "--runs".into(),
                        message: "must be at least 1".into(),
                    });
                }
                cfg.runs = r;
            }
            if let Some(o) = out {
                cfg.output_dir = o;
            }
            let execution = match threads {
                Some(0) => {
                    return Err(Error::Parse {
                        path: "--threads".into(),
                        message: "must be at least 1".into(),
                    })
                }
                Some(1) => Execution::Sequential,
                Some(n) => Execution::ParallelWith { threads: n },
                None => Execution::Parallel,
            };
            let result = run_experiment(&cfg, execution)?;
            write_outputs(&result, &cfg.emit, &cfg.output_dir)?;
            println!(
                "{} runs, {} failed, outputs in {}",
                result.records.len(),
                result.failures.len(),
                cfg.output_dir.display()
            );
            if let Some(e) = result.report_error {
                log::warn!("no comparison report: {e}");
            }
            Ok(())
        }
        Command::ListProblems { json } => {
            let reg = Registry::builtin();
            if json {
                let names: Vec<_> = reg.iter().map(|p| p.name()).collect();
                println!("{}", to_json(&names)?);
            } else {
                for p in reg.iter() {
                    println!(
                        "{:<30} D={:<3} constraints={:<3} kind={:?}",
                        p.name(),
                        p.dim(),
                        p.constraint_count(),
                        p.kind()
                    );
                }
            }
            Ok(())
        }
        Command::ListAlgorithms => {
            for name in AlgorithmRegistry::default().names() {
                println!("{name}");
            }
            Ok(())
        }
        Command::ValidateFixtures { json } => {
            let reg = Registry::builtin();
            let audits: Vec<_> = reg.iter().filter_map(audit_fixture).collect();
            if json {
                println!("{}", to_json(&audits)?);
            } else {
                for a in &audits {
                    println!(
                        "{:<16} {} printed={} recomputed={:.6} rel={:+.4}% violation={:.3e} oob={:?}{}",
                        a.problem,
                        if a.flagged() { "FLAG" } else { "ok  " },
                        a.printed_cost,
                        a.recomputed_cost,
                        100.0 * a.relative_error,
                        a.violation_sum,
                        a.out_of_bounds,
                        a.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default()
                    );
                }
            }
            Ok(())
        }
        Command::ExportProblems => {
            let summaries: Vec<_> = Registry::builtin().iter().map(|p| p.summary()).collect();
            println!("{}", to_json(&summaries)?);
            Ok(())
        }
    }
}
