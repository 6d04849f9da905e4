use serde::{Deserialize, Serialize};

use super::{ProblemSpec, Registry};

/// Relative gap allowed between a fixture's printed and recomputed cost.
pub const AUDIT_COST_TOLERANCE: f64 = 2e-3;
/// Violation sum allowed at a fixture (tables carry rounded digits).
pub const AUDIT_VIOLATION_TOLERANCE: f64 = 1e-3;

/// Outcome of re-evaluating a problem's published best row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureAudit {
    pub problem: String,
    pub position: Vec<f64>,
    pub printed_cost: f64,
    pub recomputed_cost: f64,
    pub relative_error: f64,
    pub violation_sum: f64,
    /// Zero-based indices of coordinates outside the problem bounds.
    pub out_of_bounds: Vec<usize>,
    pub cost_ok: bool,
    pub violation_ok: bool,
    pub note: Option<String>,
}

impl FixtureAudit {
    /// True when the row disagrees with the implementation in any way.
    pub fn flagged(&self) -> bool {
        !self.cost_ok || !self.violation_ok || !self.out_of_bounds.is_empty()
    }
}

fn note(problem: &str) -> Option<&'static str> {
    Some(match problem {
        "pressure-vessel" => "row violates the shell-thickness constraint; printed cost not reproduced by the classical form",
        "speed-reducer" => "x5 lies below its printed lower bound of 7.8",
        "welded-beam" => "row mildly violates the shear-stress constraint at printed precision",
        "refrigeration" => "x14 = x13 as printed; the cost is reproduced with x14 = 12 * x13 (constraint 5 active)",
        "batch-plant" => "row mildly violates the batch-size constraint at printed precision",
        "clutch-brake" => "actuating force lies below its printed lower bound of 600",
        _ => return None,
    })
}

/// Re-evaluate `spec`'s fixture. `None` when the problem carries none.
pub fn audit_fixture(spec: &ProblemSpec) -> Option<FixtureAudit> {
    let fx = spec.fixture()?;
    let (recomputed, g) = spec.evaluate_raw(&fx.position);
    let violation_sum: f64 = g.iter().map(|v| v.max(0.0)).sum();
    let relative_error = (recomputed - fx.cost) / fx.cost.abs();
    let out_of_bounds = spec.bounds().out_of_range(&fx.position);
    let cost_ok = relative_error.abs() <= AUDIT_COST_TOLERANCE;
    let violation_ok = violation_sum <= AUDIT_VIOLATION_TOLERANCE;
    let clean = cost_ok && violation_ok && out_of_bounds.is_empty();
    Some(FixtureAudit {
        problem: spec.name().to_string(),
        position: fx.position.clone(),
        printed_cost: fx.cost,
        recomputed_cost: recomputed,
        relative_error,
        violation_sum,
        out_of_bounds,
        cost_ok,
        violation_ok,
        note: if clean { None } else { note(spec.name()).map(str::to_string) },
    })
}

/// Audits of every fixture in the registry, flagged rows only.
pub fn discrepancy_ledger(registry: &Registry) -> Vec<FixtureAudit> {
    registry
        .iter()
        .filter_map(audit_fixture)
        .filter(FixtureAudit::flagged)
        .collect()
}
