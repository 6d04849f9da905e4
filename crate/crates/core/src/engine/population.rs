use super::{AlgoParams, Candidate, ConstraintHandling, Memory};
use crate::error::{Error, Result};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;

/// Scores positions against one problem and counts every objective call.
#[derive(Debug)]
pub struct Evaluator<'a> {
    spec: &'a ProblemSpec,
    handling: ConstraintHandling,
    count: u64,
}

impl<'a> Evaluator<'a> {
    pub fn new(spec: &'a ProblemSpec, handling: ConstraintHandling) -> Self {
        Self { spec, handling, count: 0 }
    }

    pub fn spec(&self) -> &'a ProblemSpec {
        self.spec
    }

    pub fn handling(&self) -> ConstraintHandling {
        self.handling
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Evaluate `position`; the returned candidate's memory is itself.
    pub fn score(&mut self, position: Vec<f64>) -> Candidate {
        debug_assert_eq!(position.len(), self.spec.dim());
        self.count += 1;
        let (objective, g) = self.spec.evaluate_raw(&position);
        let violations: Vec<f64> = g.iter().map(|v| v.max(0.0)).collect();
        let violation: f64 = violations.iter().sum();
        let fitness = self.handling.fitness(objective, violation);
        Candidate::new(position, objective, violations, fitness)
    }
}

/// Ordered members, the best candidate seen so far and the best memory.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub members: Vec<Candidate>,
    /// Best evaluation seen by this population (never worsens).
    pub elite: Candidate,
    pub gbest: Memory,
}

impl Population {
    pub fn from_members(members: Vec<Candidate>) -> Result<Self> {
        let idx = select_elite(&members)?;
        let elite = members[idx].clone();
        let gbest = elite.memory.clone();
        let mut pop = Self { members, elite, gbest };
        pop.refresh();
        Ok(pop)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Fold the current members into the elite and the global memory.
    pub fn refresh(&mut self) {
        if let Ok(idx) = select_elite(&self.members) {
            if self.members[idx].fitness.better_than(&self.elite.fitness) {
                self.elite = self.members[idx].clone();
            }
        }
        self.refresh_gbest();
    }

    pub fn refresh_gbest(&mut self) {
        for m in &self.members {
            if m.memory.fitness.better_than(&self.gbest.fitness) {
                self.gbest = m.memory.clone();
            }
        }
    }

    pub fn positions(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|m| m.position.clone()).collect()
    }
}

/// Index of the best member; ties go to the lowest index.
pub fn select_elite(members: &[Candidate]) -> Result<usize> {
    let mut best = None::<usize>;
    for (i, m) in members.iter().enumerate() {
        match best {
            None => best = Some(i),
            Some(b) if m.fitness.better_than(&members[b].fitness) => best = Some(i),
            _ => {}
        }
    }
    best.ok_or_else(|| Error::Usage("cannot select an elite from an empty population".into()))
}

/// Uniform initial population `x = rand * (ub - lb) + lb`, drawn member by
/// member and dimension by dimension.
pub fn init_population(
    evaluator: &mut Evaluator<'_>,
    params: &AlgoParams,
    rng: &mut RngStream,
) -> Result<Population> {
    if params.pop == 0 {
        return Err(Error::Config("population size must be positive".into()));
    }
    let bounds = evaluator.spec().bounds().clone();
    let members = (0..params.pop)
        .map(|_| {
            let x = bounds
                .lower()
                .iter()
                .zip(bounds.upper())
                .map(|(lo, hi)| rng.uniform() * (hi - lo) + lo)
                .collect();
            evaluator.score(x)
        })
        .collect();
    Population::from_members(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Bounds;
    use crate::problems::ProblemSpec;

    fn square(x: &[f64], _g: &mut Vec<f64>) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    fn spec(lo: f64, hi: f64, dim: usize) -> ProblemSpec {
        ProblemSpec::from_fn("test", Bounds::uniform(dim, lo, hi).unwrap(), 0, square)
    }

    fn with_fitness(values: &[f64]) -> Vec<Candidate> {
        let h = ConstraintHandling::default();
        values
            .iter()
            .map(|&f| Candidate::new(vec![f], f, vec![], h.fitness(f, 0.0)))
            .collect()
    }

    #[test]
    fn elite_is_argmin() {
        assert_eq!(select_elite(&with_fitness(&[3.0, 1.0, 2.0])).unwrap(), 1);
    }

    #[test]
    fn elite_tie_goes_to_lowest_index() {
        assert_eq!(select_elite(&with_fitness(&[1.0, 1.0])).unwrap(), 0);
    }

    #[test]
    fn single_member_elite() {
        assert_eq!(select_elite(&with_fitness(&[7.0])).unwrap(), 0);
    }

    #[test]
    fn empty_population_is_usage_error() {
        assert!(matches!(select_elite(&[]), Err(Error::Usage(_))));
    }

    #[test]
    fn init_stays_in_bounds() {
        let s = spec(0.0, 1.0, 2);
        let mut ev = Evaluator::new(&s, ConstraintHandling::default());
        let params = AlgoParams { pop: 3, ..AlgoParams::default() };
        let pop = init_population(&mut ev, &params, &mut RngStream::new(11)).unwrap();
        assert_eq!(pop.len(), 3);
        assert_eq!(ev.count(), 3);
        for m in &pop.members {
            assert!(s.bounds().contains(&m.position));
            assert_eq!(m.memory.position, m.position);
        }
    }

    #[test]
    fn degenerate_bounds_pin_every_position() {
        let s = spec(5.0, 5.0, 1);
        let mut ev = Evaluator::new(&s, ConstraintHandling::default());
        let pop = init_population(&mut ev, &AlgoParams::default(), &mut RngStream::new(0)).unwrap();
        assert!(pop.members.iter().all(|m| m.position == vec![5.0]));
    }

    #[test]
    fn init_is_deterministic() {
        let s = spec(-3.0, 3.0, 4);
        let params = AlgoParams::default();
        let run = |seed| {
            let mut ev = Evaluator::new(&s, ConstraintHandling::default());
            init_population(&mut ev, &params, &mut RngStream::new(seed)).unwrap()
        };
        let (a, b) = (run(99), run(99));
        for (x, y) in a.members.iter().zip(&b.members) {
            let xb: Vec<u64> = x.position.iter().map(|v| v.to_bits()).collect();
            let yb: Vec<u64> = y.position.iter().map(|v| v.to_bits()).collect();
            assert_eq!(xb, yb);
        }
    }

    #[test]
    fn elite_dominates_members() {
        let s = spec(-3.0, 3.0, 4);
        let mut ev = Evaluator::new(&s, ConstraintHandling::default());
        let pop = init_population(&mut ev, &AlgoParams::default(), &mut RngStream::new(4)).unwrap();
        assert!(pop.members.iter().all(|m| !m.fitness.better_than(&pop.elite.fitness)));
    }
}
