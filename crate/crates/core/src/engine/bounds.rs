use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-dimension box `[lower[j], upper[j]]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::Config("bounds must have at least one dimension".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::Config(format!(
                "lower has {} entries but upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Config(format!("bound {j} is not finite")));
            }
            if lo > hi {
                return Err(Error::Config(format!(
                    "lower bound {lo} exceeds upper bound {hi} in dimension {j}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same interval on every dimension.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *lo <= *v && *v <= *hi)
    }

    /// Dimensions of `x` that fall outside the box.
    pub fn out_of_range(&self, x: &[f64]) -> Vec<usize> {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .enumerate()
            .filter(|(_, (v, (lo, hi)))| !(**lo <= **v && **v <= **hi))
            .map(|(j, _)| j)
            .collect()
    }
}
