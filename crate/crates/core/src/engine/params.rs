use serde::{Deserialize, Serialize};

use super::ConstraintHandling;
use crate::error::{Error, Result};

/// Exponent of the Lévy step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum LambdaPolicy {
    Fixed { value: f64 },
    /// Fresh draw in `(0, high]` for every Lévy step.
    Uniform { high: f64 },
}

/// Flight length used by the neighborhood moves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum FlightLength {
    Constant { value: f64 },
    /// Linear from `start` at iteration 0 to `end` at the last iteration.
    LinearDecay { start: f64, end: f64 },
}

impl FlightLength {
    pub fn at(&self, t: usize, max_iter: usize) -> f64 {
        match *self {
            FlightLength::Constant { value } => value,
            FlightLength::LinearDecay { start, end } => {
                let frac = if max_iter == 0 { 0.0 } else { t as f64 / max_iter as f64 };
                start + (end - start) * frac
            }
        }
    }
}

/// Predation update and its step-size schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredationForm {
    /// Convex blend toward the elite with `alpha = (1 - t/T)^(2t/T)`.
    #[default]
    Reconciled,
    /// Literal typeset form: `elite - rand*x + (1-alpha)*elite`,
    /// `alpha = (1 - t/T)^T`.
    Printed,
}

/// Non-neighbor global move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GlobalMove {
    /// `r * fl * (m_global - x)` with no base position.
    #[default]
    AsPrinted,
    /// `x + r * fl * (m_global - x)`.
    WithBase,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AlgoParams {
    pub pop: usize,
    pub max_iter: usize,
    /// Logarithmic spiral constants.
    pub u: f64,
    pub v: f64,
    /// Lévy step scale.
    pub s: f64,
    /// Brownian step coefficient.
    pub l: f64,
    pub levy_lambda: LambdaPolicy,
    pub predation_threshold: f64,
    pub flight_length: FlightLength,
    /// Conscious-neighborhood size; `None` means `max(2, pop / 5)`.
    pub neighborhood_k: Option<usize>,
    pub constraint_handling: ConstraintHandling,
    pub predation_form: PredationForm,
    pub global_move: GlobalMove,
}

impl Default for AlgoParams {
    fn default() -> Self {
        Self {
            pop: 30,
            max_iter: 1000,
            u: 0.05,
            v: 0.05,
            s: 0.01,
            l: 0.05,
            levy_lambda: LambdaPolicy::Uniform { high: 2.0 },
            predation_threshold: 0.1,
            flight_length: FlightLength::Constant { value: 2.0 },
            neighborhood_k: None,
            constraint_handling: ConstraintHandling::default(),
            predation_form: PredationForm::Reconciled,
            global_move: GlobalMove::AsPrinted,
        }
    }
}

impl AlgoParams {
    pub fn neighborhood_size(&self) -> usize {
        self.neighborhood_k.unwrap_or_else(|| (self.pop / 5).max(2))
    }

    /// Checks everything a full run needs. Returns the offending field name
    /// alongside the message so config errors can point at it.
    pub fn check(&self) -> std::result::Result<(), (&'static str, String)> {
        if self.pop < 4 || self.pop % 2 != 0 {
            return Err(("pop", format!("population must be even and at least 4, got {}", self.pop)));
        }
        if self.max_iter == 0 {
            return Err(("max_iter", "iteration budget must be positive".into()));
        }
        for (name, v) in [("u", self.u), ("v", self.v), ("s", self.s), ("l", self.l)] {
            if !v.is_finite() {
                return Err((name, format!("{name} must be finite")));
            }
        }
        if !(0.0..=1.0).contains(&self.predation_threshold) {
            return Err((
                "predation_threshold",
                format!("must lie in [0, 1], got {}", self.predation_threshold),
            ));
        }
        match self.levy_lambda {
            LambdaPolicy::Fixed { value } if !(value > 0.0 && value <= 2.0) => {
                return Err(("levy_lambda", format!("fixed lambda must lie in (0, 2], got {value}")));
            }
            LambdaPolicy::Uniform { high } if !(high > 0.0 && high <= 2.0) => {
                return Err(("levy_lambda", format!("lambda range upper end must lie in (0, 2], got {high}")));
            }
            _ => {}
        }
        match self.flight_length {
            FlightLength::Constant { value } if !value.is_finite() => {
                return Err(("flight_length", "flight length must be finite".into()));
            }
            FlightLength::LinearDecay { start, end } if !(start.is_finite() && end.is_finite()) => {
                return Err(("flight_length", "flight length must be finite".into()));
            }
            _ => {}
        }
        if self.neighborhood_k == Some(0) {
            return Err(("neighborhood_k", "neighborhood size must be positive".into()));
        }
        match self.constraint_handling {
            ConstraintHandling::FeasibilityRules { tolerance } if !(tolerance >= 0.0) => {
                return Err(("constraint_handling", "tolerance must be non-negative".into()));
            }
            ConstraintHandling::StaticPenalty { coefficient } if !(coefficient >= 0.0) => {
                return Err(("constraint_handling", "penalty coefficient must be non-negative".into()));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check()
            .map_err(|(field, msg)| Error::Config(format!("{field}: {msg}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let p = AlgoParams::default();
        assert_eq!((p.pop, p.max_iter), (30, 1000));
        assert_eq!((p.u, p.v, p.s), (0.05, 0.05, 0.01));
        assert_eq!(p.neighborhood_size(), 6);
        assert!(p.validate().is_ok());
    }

    #[test]
    fn odd_or_tiny_population_rejected() {
        for pop in [2, 3, 31] {
            let p = AlgoParams { pop, ..AlgoParams::default() };
            assert_eq!(p.check().unwrap_err().0, "pop");
        }
    }

    #[test]
    fn lambda_out_of_range_rejected() {
        let p = AlgoParams {
            levy_lambda: LambdaPolicy::Fixed { value: 2.5 },
            ..AlgoParams::default()
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn flight_length_decay() {
        let fl = FlightLength::LinearDecay { start: 2.0, end: 1.0 };
        assert_eq!(fl.at(0, 100), 2.0);
        assert_eq!(fl.at(50, 100), 1.5);
        assert_eq!(fl.at(100, 100), 1.0);
    }
}
