use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::runner::{CellFailure, ExperimentResult, RunRecord};
use crate::error::{Error, Result};
use crate::problems::FixtureAudit;
use crate::stats::ComparisonReport;

const CONVERGENCE_COMMENT: &str = "# best-so-far per iteration; best_fitness is printed with Rust `{:.12e}` \
(12 fractional digits, scientific), `inf` until the first feasible point";

/// `{:.12e}` for finite values, `inf` / `-inf` / `nan` otherwise.
pub fn format_value(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.12e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Write `algorithm,problem,run,iteration,best_fitness` rows, keeping every
/// `every`-th iteration and always the last one.
pub fn export_convergence(records: &[RunRecord], path: &Path, every: usize) -> Result<()> {
    let every = every.max(1);
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "{CONVERGENCE_COMMENT}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["algorithm", "problem", "run", "iteration", "best_fitness"])
        .map_err(csv_err)?;
    for r in records {
        let last = r.convergence.len();
        for (i, v) in r.convergence.iter().enumerate() {
            let it = i + 1;
            if it % every != 0 && it != last {
                continue;
            }
            w.write_record([
                r.algorithm.as_str(),
                r.problem.as_str(),
                &r.run_index.to_string(),
                &it.to_string(),
                &format_value(*v),
            ])
            .map_err(csv_err)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Per-run summary rows including wall time (informational only).
pub fn export_records(records: &[RunRecord], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    w.write_record([
        "algorithm",
        "problem",
        "run",
        "seed",
        "final_cost",
        "objective",
        "violation",
        "feasible",
        "evaluations",
        "wall_time_ms",
        "best_position",
    ])
    .map_err(csv_err)?;
    for r in records {
        let pos: Vec<String> = r.best_position.iter().map(|v| format_value(*v)).collect();
        w.write_record([
            r.algorithm.clone(),
            r.problem.clone(),
            r.run_index.to_string(),
            r.seed.to_string(),
            format_value(r.final_cost),
            format_value(r.objective),
            format_value(r.violation),
            r.feasible.to_string(),
            r.evaluations.to_string(),
            format!("{:.3}", r.wall_time_ms),
            pos.join(" "),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Contents of `report.json`. Holds nothing timing-dependent, so equal
/// inputs give byte-identical files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub comparison: Option<ComparisonReport>,
    pub comparison_error: Option<String>,
    pub failures: Vec<CellFailure>,
    pub discrepancy_ledger: Vec<FixtureAudit>,
}

impl ReportFile {
    pub fn from_result(result: &ExperimentResult) -> Self {
        Self {
            comparison: result.report.clone(),
            comparison_error: result.report_error.clone(),
            failures: result.failures.clone(),
            discrepancy_ledger: result.ledger.clone(),
        }
    }
}

fn sci(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.6e}")
    } else {
        format_value(v)
    }
}

/// Plain-text tables: Min / Max / Mean / Std / Rank per problem, the
/// Friedman mean-rank row, then p-values against the reference.
pub fn render_report_text(report: &ReportFile) -> String {
    let mut s = String::new();
    let Some(c) = &report.comparison else {
        let _ = writeln!(s, "no comparison: {}", report.comparison_error.as_deref().unwrap_or("unknown"));
        return s;
    };
    let width = c.algorithms.iter().map(String::len).max().unwrap_or(4).max(13) + 2;
    for p in &c.problems {
        let _ = writeln!(s, "{}", p.problem);
        let _ = write!(s, "{:<6}", "");
        for a in &c.algorithms {
            let _ = write!(s, "{a:>width$}");
        }
        s.push('\n');
        let rows: [(&str, Box<dyn Fn(&crate::stats::AlgorithmRow) -> String>); 5] = [
            ("Min", Box::new(|r| sci(r.min))),
            ("Max", Box::new(|r| sci(r.max))),
            ("Mean", Box::new(|r| sci(r.mean))),
            ("Std", Box::new(|r| r.std.map(sci).unwrap_or_else(|| "-".into()))),
            ("Rank", Box::new(|r| format!("{}", r.rank))),
        ];
        for (label, f) in rows.iter() {
            let _ = write!(s, "{label:<6}");
            for r in &p.rows {
                let _ = write!(s, "{:>width$}", f(r));
            }
            s.push('\n');
        }
        s.push('\n');
    }
    let _ = write!(s, "Friedman's mean rank\n{:<6}", "");
    for (a, r) in c.algorithms.iter().zip(&c.friedman_mean_ranks) {
        let _ = write!(s, "  {a}={r:.4}");
    }
    s.push('\n');
    if let Some(f) = &c.friedman {
        let _ = writeln!(s, "Friedman chi2={:.4} df={} p={}", f.statistic, f.df, sci(f.p_value));
    }
    let others: Vec<&String> = c.algorithms.iter().filter(|a| **a != c.reference).collect();
    if !others.is_empty() {
        let _ = write!(s, "\nRank-sum p-values, {} vs.\n{:<24}", c.reference, "problem");
        for a in &others {
            let _ = write!(s, "{a:>width$}");
        }
        s.push('\n');
        for p in &c.problems {
            let _ = write!(s, "{:<24}", p.problem);
            for t in &p.tests {
                let _ = write!(s, "{:>width$}", sci(t.p_value));
            }
            s.push('\n');
        }
    }
    if !report.failures.is_empty() {
        let _ = writeln!(s, "\n{} failed runs", report.failures.len());
    }
    if !report.discrepancy_ledger.is_empty() {
        let _ = writeln!(s, "\nFixture discrepancies");
        for a in &report.discrepancy_ledger {
            let _ = writeln!(
                s,
                "  {}: printed {} recomputed {} ({:+.3}%), violation {}, out of bounds {:?}",
                a.problem,
                a.printed_cost,
                a.recomputed_cost,
                100.0 * a.relative_error,
                sci(a.violation_sum),
                a.out_of_bounds
            );
        }
    }
    s
}

/// `report.json` and `report.txt` in `dir`.
pub fn export_report(report: &ReportFile, dir: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(dir.join("report.json"), json + "\n")?;
    fs::write(dir.join("report.txt"), render_report_text(report))?;
    Ok(())
}

pub fn export_ledger(ledger: &[FixtureAudit], path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(ledger).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(path, json + "\n")?;
    Ok(())
}

/// Write everything the config asks for into `dir` (created if missing).
pub fn write_outputs(result: &ExperimentResult, emit: &super::EmitConfig, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    export_records(&result.records, &dir.join("runs.csv"))?;
    if emit.convergence {
        export_convergence(&result.records, &dir.join("convergence.csv"), emit.convergence_every)?;
    }
    if emit.report {
        export_report(&ReportFile::from_result(result), dir)?;
    }
    if emit.discrepancy_ledger {
        export_ledger(&result.ledger, &dir.join("discrepancy_ledger.json"))?;
    }
    Ok(())
}
