//! Baseline Sea Horse Optimizer: spiral/Brownian movement, predation and
//! breeding.
//!
//! Each operator comes in two layers: a pure `*_from_draws` function that
//! takes every random quantity as an argument, and the sampling wrapper the
//! optimizer calls. Draw order inside a phase is member-ascending, then
//! dimension-ascending.

use std::f64::consts::PI;

use statrs::function::gamma::gamma;

use crate::engine::{
    repair_clamp, AlgoParams, Bounds, Candidate, Evaluator, LambdaPolicy, Population, PredationForm,
};
use crate::error::{Error, Result};
use crate::optimizer::{Run, RunTrace, Variant};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;

/// Scale factor of the Lévy step for exponent `lambda`.
pub fn levy_sigma(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda <= 2.0) {
        return Err(Error::Usage(format!("levy exponent must lie in (0, 2], got {lambda}")));
    }
    let num = gamma(1.0 + lambda) * (PI * lambda / 2.0).sin();
    let den = gamma((1.0 + lambda) / 2.0) * lambda * 2f64.powf((lambda - 1.0) / 2.0);
    Ok(num / den)
}

/// `s * w * sigma / |k|^lambda`.
pub fn levy_from_draws(s: f64, lambda: f64, w: f64, k: f64) -> Result<f64> {
    Ok(s * w * levy_sigma(lambda)? / k.abs().powf(lambda))
}

/// One Lévy step with standard normal `w` and `k`; `k == 0` is redrawn.
pub fn levy_step(s: f64, lambda: f64, rng: &mut RngStream) -> Result<f64> {
    let w = rng.normal();
    let mut k = rng.normal();
    while k == 0.0 {
        k = rng.normal();
    }
    levy_from_draws(s, lambda, w, k)
}

pub(crate) fn draw_lambda(policy: LambdaPolicy, rng: &mut RngStream) -> f64 {
    match policy {
        LambdaPolicy::Fixed { value } => value,
        // 1 - U lies in (0, 1], so the draw never hits zero.
        LambdaPolicy::Uniform { high } => high * (1.0 - rng.uniform()),
    }
}

/// Spiral coordinates `(x, y, z)` for angle `theta`.
pub fn spiral_coords(theta: f64, u: f64, v: f64) -> (f64, f64, f64) {
    let rho = u * (theta * v).exp();
    (rho * theta.cos(), rho * theta.sin(), rho * theta)
}

/// Spiral update of one coordinate, before repair.
pub fn spiral_from_draws(x: f64, elite: f64, theta: f64, levy: f64, u: f64, v: f64) -> f64 {
    let (sx, sy, sz) = spiral_coords(theta, u, v);
    x + levy * ((elite - x) * sx * sy * sz + elite)
}

/// Brownian update of one coordinate, before repair.
pub fn brownian_from_draws(x: f64, elite: f64, rand: f64, beta: f64, l: f64) -> f64 {
    x + rand * l * beta * (x - beta * elite)
}

/// Spiral move with per-dimension angle and Lévy step, clamped.
pub fn spiral_move(
    x: &[f64],
    elite: &[f64],
    bounds: &Bounds,
    params: &AlgoParams,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(x.len());
    for (xj, ej) in x.iter().zip(elite) {
        let theta = 2.0 * PI * rng.uniform();
        let lambda = draw_lambda(params.levy_lambda, rng);
        let levy = levy_step(params.s, lambda, rng)?;
        out.push(spiral_from_draws(*xj, *ej, theta, levy, params.u, params.v));
    }
    repair_clamp(&mut out, bounds);
    Ok(out)
}

/// Brownian move with per-dimension `beta ~ N(0,1)` and `rand ~ U[0,1)`,
/// clamped.
pub fn brownian_move(
    x: &[f64],
    elite: &[f64],
    bounds: &Bounds,
    params: &AlgoParams,
    rng: &mut RngStream,
) -> Vec<f64> {
    let mut out = Vec::with_capacity(x.len());
    for (xj, ej) in x.iter().zip(elite) {
        let beta = rng.normal();
        let rand = rng.uniform();
        out.push(brownian_from_draws(*xj, *ej, rand, beta, params.l));
    }
    repair_clamp(&mut out, bounds);
    out
}

/// Which movement branch a member took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MovementBranch {
    Spiral,
    Brownian,
}

impl MovementBranch {
    /// `r1 > 0` selects the spiral.
    pub fn from_r1(r1: f64) -> Self {
        if r1 > 0.0 {
            MovementBranch::Spiral
        } else {
            MovementBranch::Brownian
        }
    }
}

/// Moved positions (not evaluated) and the branch each member took.
pub fn movement_phase(
    pop: &Population,
    bounds: &Bounds,
    params: &AlgoParams,
    rng: &mut RngStream,
) -> Result<(Vec<Vec<f64>>, Vec<MovementBranch>)> {
    let elite = &pop.elite.position;
    let mut moved = Vec::with_capacity(pop.len());
    let mut branches = Vec::with_capacity(pop.len());
    for m in &pop.members {
        let branch = MovementBranch::from_r1(rng.normal());
        moved.push(match branch {
            MovementBranch::Spiral => spiral_move(&m.position, elite, bounds, params, rng)?,
            MovementBranch::Brownian => brownian_move(&m.position, elite, bounds, params, rng),
        });
        branches.push(branch);
    }
    Ok((moved, branches))
}

/// Predation step size at iteration `t` of `max_iter`.
pub fn alpha(t: usize, max_iter: usize, form: PredationForm) -> Result<f64> {
    if max_iter == 0 || t > max_iter {
        return Err(Error::Usage(format!("iteration {t} outside 0..={max_iter}")));
    }
    let frac = t as f64 / max_iter as f64;
    Ok(match form {
        PredationForm::Reconciled => (1.0 - frac).powf(2.0 * frac),
        PredationForm::Printed => (1.0 - frac).powf(max_iter as f64),
    })
}

/// Predation update of one position, before repair; `rand` holds one
/// draw per dimension.
pub fn predation_from_draws(
    x: &[f64],
    elite: &[f64],
    alpha: f64,
    success: bool,
    rand: &[f64],
    form: PredationForm,
) -> Vec<f64> {
    x.iter()
        .zip(elite)
        .zip(rand)
        .map(|((&xj, &ej), &rand)| match (success, form) {
            (true, PredationForm::Reconciled) => alpha * (ej - rand * xj) + (1.0 - alpha) * ej,
            (true, PredationForm::Printed) => ej - rand * xj + (1.0 - alpha) * ej,
            (false, _) => (1.0 - alpha) * (xj - rand * ej) + alpha * xj,
        })
        .collect()
}

/// Predation over the moved positions. Each result is clamped, evaluated
/// and written into its slot. Returns how many members took the success
/// branch.
pub fn predation_phase(
    pop: &mut Population,
    moved: Vec<Vec<f64>>,
    t: usize,
    params: &AlgoParams,
    evaluator: &mut Evaluator<'_>,
    rng: &mut RngStream,
) -> Result<usize> {
    if moved.len() != pop.len() {
        return Err(Error::Usage(format!(
            "{} moved positions for a population of {}",
            moved.len(),
            pop.len()
        )));
    }
    let a = alpha(t, params.max_iter, params.predation_form)?;
    let bounds = evaluator.spec().bounds().clone();
    let elite = pop.elite.position.clone();
    let mut successes = 0;
    for (slot, x) in pop.members.iter_mut().zip(moved) {
        let success = rng.uniform() > params.predation_threshold;
        successes += usize::from(success);
        let rand: Vec<f64> = (0..x.len()).map(|_| rng.uniform()).collect();
        let mut next = predation_from_draws(&x, &elite, a, success, &rand, params.predation_form);
        repair_clamp(&mut next, &bounds);
        slot.replace_with(evaluator.score(next));
    }
    pop.refresh();
    Ok(successes)
}

/// `r3 * father + (1 - r3) * mother`.
pub fn offspring_from_draws(father: &[f64], mother: &[f64], r3: f64) -> Vec<f64> {
    father.iter().zip(mother).map(|(f, m)| r3 * f + (1.0 - r3) * m).collect()
}

/// Indices sorted best-first; equal fitness keeps index order.
pub fn sorted_indices(members: &[Candidate]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..members.len()).collect();
    idx.sort_by(|&a, &b| members[a].fitness.cmp(&members[b].fitness));
    idx
}

/// Father (best half) and mother (worst half) indices, mothers shuffled.
pub fn breeding_pairs(members: &[Candidate], rng: &mut RngStream) -> Result<Vec<(usize, usize)>> {
    if members.len() % 2 != 0 {
        return Err(Error::Config(format!(
            "breeding needs an even population, got {}",
            members.len()
        )));
    }
    let order = sorted_indices(members);
    let half = members.len() / 2;
    let fathers = &order[..half];
    let mut mothers = order[half..].to_vec();
    rng.shuffle(&mut mothers);
    Ok(fathers.iter().copied().zip(mothers).collect())
}

/// Breed `pop/2` offspring and keep the best `pop` of parents and
/// offspring. Survivors are written best-first into the slots.
pub fn breeding_phase(pop: &mut Population, evaluator: &mut Evaluator<'_>, rng: &mut RngStream) -> Result<()> {
    let pairs = breeding_pairs(&pop.members, rng)?;
    let mut pool = pop.members.clone();
    for (f, m) in pairs {
        let r3 = rng.uniform();
        let child = offspring_from_draws(&pop.members[f].position, &pop.members[m].position, r3);
        pool.push(evaluator.score(child));
    }
    let order = sorted_indices(&pool);
    let n = pop.len();
    let mut pool: Vec<Option<Candidate>> = pool.into_iter().map(Some).collect();
    for (slot, &i) in pop.members.iter_mut().zip(order.iter().take(n)) {
        let survivor = pool[i].take().expect("each index is taken once");
        slot.replace_with(survivor);
    }
    pop.refresh();
    Ok(())
}

/// One full SHO run.
pub fn run_sho(spec: &ProblemSpec, params: &AlgoParams, seed: u64) -> Result<RunTrace> {
    Run::new(Variant::Sho, spec, params.clone(), seed)?.finish()
}
