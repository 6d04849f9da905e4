use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How constraint violations enter the ordering of candidates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ConstraintHandling {
    /// Feasible beats infeasible; feasibles by objective; infeasibles by
    /// total violation. A candidate is feasible when its violation sum is at
    /// most `tolerance`.
    FeasibilityRules { tolerance: f64 },
    /// Order by `objective + coefficient * total violation`.
    StaticPenalty { coefficient: f64 },
}

impl Default for ConstraintHandling {
    fn default() -> Self {
        ConstraintHandling::FeasibilityRules { tolerance: 1e-6 }
    }
}

impl ConstraintHandling {
    pub fn fitness(&self, objective: f64, violation: f64) -> Fitness {
        match *self {
            ConstraintHandling::FeasibilityRules { tolerance } => {
                if violation <= tolerance {
                    Fitness { violated: false, value: objective }
                } else {
                    Fitness { violated: true, value: violation }
                }
            }
            ConstraintHandling::StaticPenalty { coefficient } => Fitness {
                violated: false,
                value: objective + coefficient * violation,
            },
        }
    }
}

/// Ordering key of an evaluated position (smaller is better).
///
/// Under feasibility rules `violated` splits the two classes and `value` is
/// the objective (feasible) or the violation sum (infeasible). Under a static
/// penalty `violated` is always false and `value` is the penalized objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fitness {
    pub violated: bool,
    pub value: f64,
}

impl Fitness {
    pub fn cmp(&self, other: &Fitness) -> Ordering {
        match (self.violated, other.violated) {
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            _ => self.value.total_cmp(&other.value),
        }
    }

    pub fn better_than(&self, other: &Fitness) -> bool {
        self.cmp(other) == Ordering::Less
    }

    /// Value reported in convergence series: the key itself when it is an
    /// objective, `+inf` while only infeasible points have been seen.
    pub fn reported(&self) -> f64 {
        if self.violated {
            f64::INFINITY
        } else {
            self.value
        }
    }
}

/// Best evaluation a slot has ever held (its "hiding position").
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Memory {
    pub position: Vec<f64>,
    pub objective: f64,
    pub violation: f64,
    pub fitness: Fitness,
}

/// One sea horse: an evaluated position plus its personal-best memory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub position: Vec<f64>,
    pub objective: f64,
    /// `max(0, g_i)` per constraint.
    pub violations: Vec<f64>,
    pub violation: f64,
    pub fitness: Fitness,
    pub memory: Memory,
}

impl Candidate {
    pub fn new(position: Vec<f64>, objective: f64, violations: Vec<f64>, fitness: Fitness) -> Self {
        let violation = violations.iter().sum();
        let memory = Memory {
            position: position.clone(),
            objective,
            violation,
            fitness,
        };
        Self {
            position,
            objective,
            violations,
            violation,
            fitness,
            memory,
        }
    }

    pub fn dim(&self) -> usize {
        self.position.len()
    }

    pub fn is_feasible(&self) -> bool {
        !self.fitness.violated
    }

    /// Record the current evaluation in memory if it beats the stored one.
    pub fn remember(&mut self) -> bool {
        if self.fitness.better_than(&self.memory.fitness) {
            self.memory = self.snapshot();
            true
        } else {
            false
        }
    }

    pub fn snapshot(&self) -> Memory {
        Memory {
            position: self.position.clone(),
            objective: self.objective,
            violation: self.violation,
            fitness: self.fitness,
        }
    }

    /// Move this slot to `next`, keeping the slot's memory and updating it
    /// greedily.
    pub fn replace_with(&mut self, mut next: Candidate) {
        next.memory = std::mem::replace(&mut self.memory, next.memory.clone());
        next.remember();
        *self = next;
    }
}

/// Total order on evaluated candidates; `Less` means `a` is better.
pub fn compare_candidates(a: &Candidate, b: &Candidate) -> Result<Ordering> {
    if a.dim() != b.dim() || a.violations.len() != b.violations.len() {
        return Err(Error::Usage(format!(
            "candidates come from different problems (dim {} vs {}, {} vs {} constraints)",
            a.dim(),
            b.dim(),
            a.violations.len(),
            b.violations.len()
        )));
    }
    Ok(a.fitness.cmp(&b.fitness))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(objective: f64, violation: f64, mode: ConstraintHandling) -> Candidate {
        Candidate::new(vec![0.0], objective, vec![violation], mode.fitness(objective, violation))
    }

    #[test]
    fn feasible_beats_infeasible() {
        let m = ConstraintHandling::default();
        let a = cand(10.0, 0.0, m);
        let b = cand(1.0, 0.1, m);
        assert_eq!(compare_candidates(&a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn feasibles_by_objective() {
        let m = ConstraintHandling::default();
        assert_eq!(
            compare_candidates(&cand(1.0, 0.0, m), &cand(2.0, 0.0, m)).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn infeasibles_by_violation() {
        let m = ConstraintHandling::default();
        assert_eq!(
            compare_candidates(&cand(0.0, 0.5, m), &cand(9.0, 0.2, m)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn static_penalty_orders_by_penalized_objective() {
        let m = ConstraintHandling::StaticPenalty { coefficient: 100.0 };
        // 1 + 100*0.1 = 11 vs 10
        assert_eq!(
            compare_candidates(&cand(1.0, 0.1, m), &cand(10.0, 0.0, m)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn feasible_key_is_raw_objective() {
        let c = cand(3.25, 0.0, ConstraintHandling::default());
        assert_eq!(c.fitness.value, 3.25);
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let m = ConstraintHandling::default();
        let a = cand(1.0, 0.0, m);
        let b = Candidate::new(vec![0.0, 1.0], 1.0, vec![0.0], m.fitness(1.0, 0.0));
        assert!(matches!(compare_candidates(&a, &b), Err(Error::Usage(_))));
    }

    #[test]
    fn replace_keeps_better_memory() {
        let m = ConstraintHandling::default();
        let mut slot = cand(1.0, 0.0, m);
        slot.replace_with(cand(5.0, 0.0, m));
        assert_eq!(slot.objective, 5.0);
        assert_eq!(slot.memory.objective, 1.0);
        slot.replace_with(cand(0.5, 0.0, m));
        assert_eq!(slot.memory.objective, 0.5);
    }
}
