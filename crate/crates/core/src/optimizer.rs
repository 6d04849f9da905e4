//! Run loop shared by both optimizers, run traces, and the algorithm
//! registry the harness resolves names against.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::engine::{init_population, AlgoParams, Evaluator, Population};
use crate::error::{Error, Result};
use crate::msho::{msho_movement_phase, MovementReport};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::sho::{breeding_phase, movement_phase, predation_phase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Sho,
    Msho,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Sho => "sho",
            Variant::Msho => "msho",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything a finished run reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub seed: u64,
    pub best_position: Vec<f64>,
    pub best_objective: f64,
    pub best_violation: f64,
    pub feasible: bool,
    /// Best-so-far after each iteration (`+inf` until a feasible point).
    pub convergence: Vec<f64>,
    pub evaluations: u64,
    /// Entry 0 is initialization, entry `t` iteration `t`.
    pub evaluations_per_iteration: Vec<u64>,
}

impl RunTrace {
    /// Final best value as reported in convergence series.
    pub fn final_cost(&self) -> f64 {
        self.convergence.last().copied().unwrap_or(f64::INFINITY)
    }
}

/// What one iteration did, for instrumented tests.
#[derive(Debug, Clone, PartialEq)]
pub struct StepReport {
    pub iteration: usize,
    pub movement: Option<MovementReport>,
    pub predation_successes: usize,
    pub evaluations: u64,
}

/// An in-progress run that can be stepped one iteration at a time.
pub struct Run<'a> {
    variant: Variant,
    params: AlgoParams,
    evaluator: Evaluator<'a>,
    rng: RngStream,
    population: Population,
    t: usize,
    convergence: Vec<f64>,
    per_iteration: Vec<u64>,
}

impl<'a> Run<'a> {
    pub fn new(variant: Variant, spec: &'a ProblemSpec, params: AlgoParams, seed: u64) -> Result<Self> {
        params.validate()?;
        let mut evaluator = Evaluator::new(spec, params.constraint_handling);
        let mut rng = RngStream::new(seed);
        let population = init_population(&mut evaluator, &params, &mut rng)?;
        let init = evaluator.count();
        Ok(Self {
            variant,
            params,
            evaluator,
            rng,
            population,
            t: 0,
            convergence: Vec::new(),
            per_iteration: vec![init],
        })
    }

    pub fn population(&self) -> &Population {
        &self.population
    }

    pub fn iteration(&self) -> usize {
        self.t
    }

    pub fn is_done(&self) -> bool {
        self.t >= self.params.max_iter
    }

    pub fn step(&mut self) -> Result<StepReport> {
        if self.is_done() {
            return Err(Error::Usage(format!("run already finished {} iterations", self.t)));
        }
        self.t += 1;
        let before = self.evaluator.count();
        let bounds = self.evaluator.spec().bounds().clone();
        let (moved, movement) = match self.variant {
            Variant::Sho => {
                let (moved, _) = movement_phase(&self.population, &bounds, &self.params, &mut self.rng)?;
                (moved, None)
            }
            Variant::Msho => {
                let report = msho_movement_phase(
                    &mut self.population,
                    self.t,
                    &self.params,
                    &mut self.evaluator,
                    &mut self.rng,
                )?;
                (self.population.positions(), Some(report))
            }
        };
        let predation_successes = predation_phase(
            &mut self.population,
            moved,
            self.t,
            &self.params,
            &mut self.evaluator,
            &mut self.rng,
        )?;
        breeding_phase(&mut self.population, &mut self.evaluator, &mut self.rng)?;
        let evaluations = self.evaluator.count() - before;
        self.per_iteration.push(evaluations);
        self.convergence.push(self.population.elite.fitness.reported());
        Ok(StepReport {
            iteration: self.t,
            movement,
            predation_successes,
            evaluations,
        })
    }

    pub fn finish(mut self) -> Result<RunTrace> {
        while !self.is_done() {
            self.step()?;
        }
        Ok(self.trace())
    }

    pub fn trace(&self) -> RunTrace {
        let best = &self.population.elite;
        RunTrace {
            seed: self.rng.seed(),
            best_position: best.position.clone(),
            best_objective: best.objective,
            best_violation: best.violation,
            feasible: best.is_feasible(),
            convergence: self.convergence.clone(),
            evaluations: self.evaluator.count(),
            evaluations_per_iteration: self.per_iteration.clone(),
        }
    }
}

/// Anything the harness can run by name.
pub trait Algorithm: Send + Sync {
    fn name(&self) -> &str;
    fn run(&self, spec: &ProblemSpec, params: &AlgoParams, seed: u64) -> Result<RunTrace>;
}

impl Algorithm for Variant {
    fn name(&self) -> &str {
        Variant::name(*self)
    }

    fn run(&self, spec: &ProblemSpec, params: &AlgoParams, seed: u64) -> Result<RunTrace> {
        Run::new(*self, spec, params.clone(), seed)?.finish()
    }
}

/// Name lookup for algorithms; holds `sho` and `msho` by default.
#[derive(Clone)]
pub struct AlgorithmRegistry {
    entries: Vec<Arc<dyn Algorithm>>,
}

impl fmt::Debug for AlgorithmRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

impl Default for AlgorithmRegistry {
    fn default() -> Self {
        Self {
            entries: vec![Arc::new(Variant::Sho), Arc::new(Variant::Msho)],
        }
    }
}

impl AlgorithmRegistry {
    pub fn register(&mut self, algorithm: Arc<dyn Algorithm>) -> Result<()> {
        if self.contains(algorithm.name()) {
            return Err(Error::Config(format!("algorithm {} is already registered", algorithm.name())));
        }
        self.entries.push(algorithm);
        Ok(())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.iter().any(|a| a.name() == name)
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Algorithm>> {
        self.entries
            .iter()
            .find(|a| a.name() == name)
            .cloned()
            .ok_or_else(|| Error::UnknownAlgorithm {
                name: name.to_string(),
                suggestion: crate::problems::nearest_name(name, self.names()),
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|a| a.name())
    }
}
