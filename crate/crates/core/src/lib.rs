//! Sea Horse Optimizer (SHO) and its conscious-neighborhood variant (mSHO).
//!
//! The crate is organised around five pieces:
//!
//! * [`engine`]: candidates, populations, bounds repair, constraint ordering and
//!   the seeded random stream every run draws from.
//! * [`sho`]: the baseline optimizer (spiral/Brownian movement, predation, breeding).
//! * [`msho`]: the variant whose movement phase is the three-strategy
//!   neighborhood search; predation and breeding are shared with [`sho`].
//! * [`problems`]: the nine constrained engineering benchmarks, a family of
//!   unconstrained test functions and the fixture audit.
//! * [`stats`] and [`harness`]: descriptive statistics, Friedman ranks, rank-sum
//!   tests, and the configuration-driven experiment runner behind the CLI.
//!
//! ```
//! use seahorse::{engine::AlgoParams, msho::run_msho, problems::get_problem_spec};
//!
//! let spec = get_problem_spec("spring").unwrap();
//! let params = AlgoParams { pop: 10, max_iter: 20, ..AlgoParams::default() };
//! let trace = run_msho(&spec, &params, 7).unwrap();
//! assert_eq!(trace.convergence.len(), 20);
//! ```

pub mod engine;
pub mod error;
pub mod harness;
pub mod msho;
pub mod optimizer;
pub mod problems;
pub mod rng;
pub mod sho;
pub mod stats;

pub use error::{Error, Result};
pub use optimizer::{Algorithm, RunTrace, Variant};
pub use rng::RngStream;
