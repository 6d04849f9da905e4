//! Benchmark problems: the nine constrained engineering designs, classical
//! unconstrained test functions, and a registry that external problems can
//! be added to.
//!
//! Constraints follow the `g_i(x) <= 0` convention throughout.

mod audit;
mod engineering;
mod registry;
mod unconstrained;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::engine::Bounds;
use crate::error::{Error, Result};

pub use audit::{audit_fixture, discrepancy_ledger, FixtureAudit, AUDIT_COST_TOLERANCE, AUDIT_VIOLATION_TOLERANCE};
pub use engineering::ENGINEERING_PROBLEMS;
pub(crate) use registry::nearest as nearest_name;
pub use registry::{get_problem_spec, unconstrained_spec, Registry};
pub use unconstrained::{evaluate_unconstrained, optimum, UNCONSTRAINED_FUNCTIONS};

/// Default feasibility tolerance on the violation sum.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-6;

/// Anything that maps a position to an objective value and constraint values.
pub trait Objective: Send + Sync {
    /// Returns the objective and pushes one value per constraint into `g`
    /// (`g` arrives empty).
    fn evaluate(&self, x: &[f64], g: &mut Vec<f64>) -> f64;
}

struct FnObjective(fn(&[f64], &mut Vec<f64>) -> f64);

impl Objective for FnObjective {
    fn evaluate(&self, x: &[f64], g: &mut Vec<f64>) -> f64 {
        (self.0)(x, g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    Engineering,
    Unconstrained,
    External,
}

/// A published best position and the cost printed next to it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub position: Vec<f64>,
    pub cost: f64,
    pub source: String,
}

/// Result of evaluating one position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub objective: f64,
    pub g: Vec<f64>,
    pub feasible: bool,
    pub violation_sum: f64,
}

impl Evaluation {
    pub fn new(objective: f64, g: Vec<f64>, tolerance: f64) -> Self {
        let violation_sum = g.iter().map(|v| v.max(0.0)).sum::<f64>();
        Self {
            objective,
            g,
            feasible: violation_sum <= tolerance,
            violation_sum,
        }
    }
}

/// Everything an optimizer needs to know about a problem.
#[derive(Clone)]
pub struct ProblemSpec {
    name: String,
    kind: ProblemKind,
    bounds: Bounds,
    constraint_count: usize,
    objective: Arc<dyn Objective>,
    fixture: Option<Fixture>,
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("dim", &self.dim())
            .field("constraint_count", &self.constraint_count)
            .finish_non_exhaustive()
    }
}

impl ProblemSpec {
    pub fn new(
        name: impl Into<String>,
        kind: ProblemKind,
        bounds: Bounds,
        constraint_count: usize,
        objective: Arc<dyn Objective>,
    ) -> Self {
        Self {
            name: name.into(),
            kind,
            bounds,
            constraint_count,
            objective,
            fixture: None,
        }
    }

    /// Convenience constructor for a plain function.
    pub fn from_fn(
        name: impl Into<String>,
        bounds: Bounds,
        constraint_count: usize,
        f: fn(&[f64], &mut Vec<f64>) -> f64,
    ) -> Self {
        Self::new(name, ProblemKind::External, bounds, constraint_count, Arc::new(FnObjective(f)))
    }

    pub fn with_fixture(mut self, fixture: Fixture) -> Self {
        self.fixture = Some(fixture);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.bounds.dim()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn constraint_count(&self) -> usize {
        self.constraint_count
    }

    pub fn fixture(&self) -> Option<&Fixture> {
        self.fixture.as_ref()
    }

    /// Objective and constraint values with NaNs mapped to `+inf`, so a
    /// broken evaluation can only ever rank last.
    pub fn evaluate_raw(&self, x: &[f64]) -> (f64, Vec<f64>) {
        let mut g = Vec::with_capacity(self.constraint_count);
        let f = self.objective.evaluate(x, &mut g);
        debug_assert_eq!(g.len(), self.constraint_count, "{}: constraint count", self.name);
        for v in g.iter_mut() {
            if v.is_nan() {
                *v = f64::INFINITY;
            }
        }
        (if f.is_nan() { f64::INFINITY } else { f }, g)
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<Evaluation> {
        self.evaluate_with_tolerance(x, FEASIBILITY_TOLERANCE)
    }

    pub fn evaluate_with_tolerance(&self, x: &[f64], tolerance: f64) -> Result<Evaluation> {
        if x.len() != self.dim() {
            return Err(Error::Usage(format!(
                "{} expects {} variables, got {}",
                self.name,
                self.dim(),
                x.len()
            )));
        }
        let (f, g) = self.evaluate_raw(x);
        Ok(Evaluation::new(f, g, tolerance))
    }

    pub fn summary(&self) -> ProblemSummary {
        ProblemSummary {
            name: self.name.clone(),
            kind: self.kind,
            dimension: self.dim(),
            lower: self.bounds.lower().to_vec(),
            upper: self.bounds.upper().to_vec(),
            constraint_count: self.constraint_count,
            fixture: self.fixture.clone(),
        }
    }
}

/// Serializable description of a problem (no evaluator).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSummary {
    pub name: String,
    pub kind: ProblemKind,
    pub dimension: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub constraint_count: usize,
    pub fixture: Option<Fixture>,
}

/// Evaluate a registered engineering problem at `x`.
pub fn evaluate_engineering(name: &str, x: &[f64]) -> Result<Evaluation> {
    let spec = get_problem_spec(name)?;
    if spec.kind() != ProblemKind::Engineering {
        return Err(Error::UnknownProblem {
            name: name.to_string(),
            suggestion: None,
        });
    }
    spec.evaluate(x)
}
