//! Machinery shared by both optimizers: bounds, candidates, the constraint
//! ordering, repair operators, population initialisation and parameters.

mod bounds;
mod candidate;
mod params;
mod population;
mod repair;

pub use bounds::Bounds;
pub use candidate::{compare_candidates, Candidate, ConstraintHandling, Fitness, Memory};
pub use params::{AlgoParams, FlightLength, GlobalMove, LambdaPolicy, PredationForm};
pub use population::{init_population, select_elite, Evaluator, Population};
pub use repair::{repair_clamp, repair_random_reinit};
