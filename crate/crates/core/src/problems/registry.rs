use std::sync::{Arc, OnceLock};

use super::unconstrained::{self, DEFAULT_DIMENSION, DEFAULT_RANGE};
use super::{engineering, Objective, ProblemKind, ProblemSpec};
use crate::engine::Bounds;
use crate::error::{Error, Result};

/// Name lookup for problems. Starts with the built-ins; anything else
/// implementing [`Objective`] can be added with [`Registry::register`].
#[derive(Debug, Clone)]
pub struct Registry {
    problems: Vec<ProblemSpec>,
}

struct Unconstrained(fn(&[f64]) -> f64);

impl Objective for Unconstrained {
    fn evaluate(&self, x: &[f64], _g: &mut Vec<f64>) -> f64 {
        (self.0)(x)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl Registry {
    pub fn empty() -> Self {
        Self { problems: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut problems = engineering::builtin();
        for name in unconstrained::UNCONSTRAINED_FUNCTIONS {
            problems.push(unconstrained_spec(name, DEFAULT_DIMENSION).expect("built-in name"));
        }
        Self { problems }
    }

    pub fn register(&mut self, spec: ProblemSpec) -> Result<()> {
        if self.problems.iter().any(|p| p.name() == spec.name()) {
            return Err(Error::Config(format!("problem {} is already registered", spec.name())));
        }
        self.problems.push(spec);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&ProblemSpec> {
        self.problems
            .iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::UnknownProblem {
                name: name.to_string(),
                suggestion: self.suggest(name),
            })
    }

    pub fn contains(&self, name: &str) -> bool {
        self.problems.iter().any(|p| p.name() == name)
    }

    pub fn suggest(&self, name: &str) -> Option<String> {
        nearest(name, self.names())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.problems.iter().map(|p| p.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProblemSpec> {
        self.problems.iter()
    }

    pub fn engineering(&self) -> impl Iterator<Item = &ProblemSpec> {
        self.problems.iter().filter(|p| p.kind() == ProblemKind::Engineering)
    }
}

/// An unconstrained test function on `[-100, 100]^dim`.
pub fn unconstrained_spec(name: &str, dim: usize) -> Result<ProblemSpec> {
    let f = unconstrained::function(name).ok_or_else(|| Error::UnknownProblem {
        name: name.to_string(),
        suggestion: nearest(name, unconstrained::UNCONSTRAINED_FUNCTIONS.iter().copied()),
    })?;
    let bounds = Bounds::uniform(dim, -DEFAULT_RANGE, DEFAULT_RANGE)?;
    Ok(ProblemSpec::new(name, ProblemKind::Unconstrained, bounds, 0, Arc::new(Unconstrained(f))))
}

/// Closest candidate by edit distance (transpositions count once), if it
/// is plausibly a typo. Equal distances go to the more similar string.
pub(crate) fn nearest<'a>(name: &str, candidates: impl Iterator<Item = &'a str>) -> Option<String> {
    let limit = (name.chars().count() / 3).max(2);
    candidates
        .map(|c| (strsim::osa_distance(name, c), strsim::jaro_winkler(name, c), c))
        .filter(|(d, _, _)| *d <= limit)
        .min_by(|a, b| a.0.cmp(&b.0).then(b.1.total_cmp(&a.1)))
        .map(|(_, _, c)| c.to_string())
}

fn shared() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::builtin)
}

/// Look up a built-in problem.
pub fn get_problem_spec(name: &str) -> Result<ProblemSpec> {
    shared().get(name).cloned()
}
