//! Conscious-neighborhood movement that replaces the SHO movement phase.
//!
//! Per member: pick a local neighbor and the best non-neighbor, move toward
//! the better one's memory, and fall back to a wander around the global
//! best memory if that does not improve the member.

use crate::engine::{repair_clamp, repair_random_reinit, AlgoParams, Bounds, Evaluator, GlobalMove, Population};
use crate::error::{Error, Result};
use crate::optimizer::{Run, RunTrace, Variant};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborSelection {
    pub local_index: usize,
    pub global_index: usize,
    /// The `k` nearest members, nearest first.
    pub local_set: Vec<usize>,
}

/// Neighborhood of member `i`: its `k` nearest members by Euclidean
/// distance (ties by index), one of them drawn uniformly as the local
/// partner, and the fittest member outside the neighborhood as the global
/// partner. `k` shrinks to `pop - 2` when the population is too small.
pub fn pick_conscious_neighbors(
    pop: &Population,
    i: usize,
    k: usize,
    rng: &mut RngStream,
) -> Result<NeighborSelection> {
    let n = pop.len();
    if n < 3 {
        return Err(Error::Usage(format!("neighborhoods need at least 3 members, got {n}")));
    }
    if i >= n {
        return Err(Error::Usage(format!("member {i} out of range for population {n}")));
    }
    let mut k = k.max(1);
    if n < k + 2 {
        log::debug!("neighborhood size {k} shrunk to {} for population {n}", n - 2);
        k = n - 2;
    }
    let xi = &pop.members[i].position;
    let mut others: Vec<(f64, usize)> = (0..n)
        .filter(|&j| j != i)
        .map(|j| (squared_distance(xi, &pop.members[j].position), j))
        .collect();
    others.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let local_set: Vec<usize> = others[..k].iter().map(|&(_, j)| j).collect();
    let local_index = local_set[rng.index(k)];
    let global_index = others[k..]
        .iter()
        .map(|&(_, j)| j)
        .reduce(|best, j| {
            if pop.members[j].fitness.better_than(&pop.members[best].fitness)
                || (pop.members[j].fitness.cmp(&pop.members[best].fitness).is_eq() && j < best)
            {
                j
            } else {
                best
            }
        })
        .expect("at least one non-neighbor remains");
    Ok(NeighborSelection {
        local_index,
        global_index,
        local_set,
    })
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `x + r * fl * (m_local - x)`, before repair.
pub fn local_from_draws(x: &[f64], m_local: &[f64], r: f64, fl: f64) -> Vec<f64> {
    x.iter().zip(m_local).map(|(xj, mj)| xj + r * fl * (mj - xj)).collect()
}

/// `r * fl * (m_global - x)`, plus `x` in the with-base mode; before repair.
pub fn global_from_draws(x: &[f64], m_global: &[f64], r: f64, fl: f64, mode: GlobalMove) -> Vec<f64> {
    x.iter()
        .zip(m_global)
        .map(|(xj, mj)| {
            let step = r * fl * (mj - xj);
            match mode {
                GlobalMove::AsPrinted => step,
                GlobalMove::WithBase => xj + step,
            }
        })
        .collect()
}

/// `gbest + r * fl * (x_r - x_i)`, before repair.
pub fn wander_from_draws(gbest: &[f64], x_r: &[f64], x_i: &[f64], r: f64, fl: f64) -> Vec<f64> {
    gbest
        .iter()
        .zip(x_r.iter().zip(x_i))
        .map(|(g, (a, b))| g + r * fl * (a - b))
        .collect()
}

pub fn neighborhood_local_move(
    x: &[f64],
    m_local: &[f64],
    fl: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Vec<f64> {
    let r = rng.uniform();
    let mut out = local_from_draws(x, m_local, r, fl);
    repair_random_reinit(&mut out, bounds, rng);
    out
}

pub fn nonneighbor_global_move(
    x: &[f64],
    m_global: &[f64],
    fl: f64,
    mode: GlobalMove,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Vec<f64> {
    let r = rng.uniform();
    let mut out = global_from_draws(x, m_global, r, fl, mode);
    repair_random_reinit(&mut out, bounds, rng);
    out
}

/// Wander around the global best memory using a random other member `r_index`.
pub fn wander_move(
    pop: &Population,
    i: usize,
    fl: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Vec<f64> {
    let n = pop.len();
    let mut j = rng.index(n - 1);
    if j >= i {
        j += 1;
    }
    let r = rng.uniform();
    let mut out = wander_from_draws(&pop.gbest.position, &pop.members[j].position, &pop.members[i].position, r, fl);
    repair_clamp(&mut out, bounds);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Local,
    Global,
}

/// What happened to each member during one movement phase.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MovementReport {
    pub strategy: Vec<Strategy>,
    /// True when the first move improved the member and was kept.
    pub accepted: Vec<bool>,
    pub evaluations: Vec<u32>,
}

impl MovementReport {
    pub fn total_evaluations(&self) -> u64 {
        self.evaluations.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn wander_count(&self) -> usize {
        self.accepted.iter().filter(|a| !**a).count()
    }
}

/// Members are processed in index order and updated in place, so later
/// members see earlier members' new positions.
pub fn msho_movement_phase(
    pop: &mut Population,
    t: usize,
    params: &AlgoParams,
    evaluator: &mut Evaluator<'_>,
    rng: &mut RngStream,
) -> Result<MovementReport> {
    let bounds = evaluator.spec().bounds().clone();
    let fl = params.flight_length.at(t, params.max_iter);
    let k = params.neighborhood_size();
    let mut report = MovementReport::default();
    for i in 0..pop.len() {
        let sel = pick_conscious_neighbors(pop, i, k, rng)?;
        let local = &pop.members[sel.local_index];
        let global = &pop.members[sel.global_index];
        let x = &pop.members[i].position;
        let (strategy, moved) = if local.fitness.better_than(&global.fitness) {
            (Strategy::Local, neighborhood_local_move(x, &local.memory.position, fl, &bounds, rng))
        } else {
            let m = &global.memory.position;
            (Strategy::Global, nonneighbor_global_move(x, m, fl, params.global_move, &bounds, rng))
        };
        let trial = evaluator.score(moved);
        let improved = trial.fitness.better_than(&pop.members[i].fitness);
        if improved {
            pop.members[i].replace_with(trial);
        } else {
            let wandered = wander_move(pop, i, fl, &bounds, rng);
            let next = evaluator.score(wandered);
            pop.members[i].replace_with(next);
        }
        pop.refresh_gbest();
        report.strategy.push(strategy);
        report.accepted.push(improved);
        report.evaluations.push(if improved { 1 } else { 2 });
    }
    pop.refresh();
    Ok(report)
}

/// One full mSHO run.
pub fn run_msho(spec: &ProblemSpec, params: &AlgoParams, seed: u64) -> Result<RunTrace> {
    Run::new(Variant::Msho, spec, params.clone(), seed)?.finish()
}
