//! Problem formulations against values frozen from an independent Python
//! implementation (tests/oracles/problems.py, tests/oracles/optima.py).

use std::sync::Arc;

use seahorse::engine::Bounds;
use seahorse::problems::{
    audit_fixture, discrepancy_ledger, evaluate_unconstrained, get_problem_spec, optimum, unconstrained_spec,
    Objective, ProblemKind, ProblemSpec, Registry, ENGINEERING_PROBLEMS, UNCONSTRAINED_FUNCTIONS,
};
use seahorse::Error;

/// Cost of each published best row, recomputed by the oracle.
const RECOMPUTED: [(&str, f64); 9] = [
    ("pressure-vessel", 5854.974430280494),
    ("speed-reducer", 2992.7983521647247),
    ("spring", 0.012665175692460418),
    ("welded-beam", 1.7248537409990399),
    ("three-bar-truss", 263.8871223503958),
    ("refrigeration", 0.2622446583478512),
    ("batch-plant", 58503.77523885785),
    ("cantilever", 1.339956384),
    ("clutch-brake", 0.2352424579008037),
];

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1e-300)
}

#[test]
fn fixture_costs_match_oracle() {
    for (name, want) in RECOMPUTED {
        let spec = get_problem_spec(name).unwrap();
        let fx = spec.fixture().expect("fixture");
        let got = spec.evaluate(&fx.position).unwrap().objective;
        assert!(close(got, want, 1e-9), "{name}: {got} vs {want}");
    }
}

#[test]
fn refrigeration_row_with_scaled_last_coordinate() {
    let spec = get_problem_spec("refrigeration").unwrap();
    let mut x = spec.fixture().unwrap().position.clone();
    x[13] = 12.0 * x[12];
    let e = spec.evaluate(&x).unwrap();
    assert!(close(e.objective, 0.03226267072371513, 1e-9), "{}", e.objective);
    assert!(e.feasible);
}

#[test]
fn fixture_violations_match_oracle() {
    let want = [
        ("pressure-vessel", 0.005059840799999993),
        ("speed-reducer", 0.00149467634031053),
        ("welded-beam", 0.02728268550345092),
        ("batch-plant", 0.07935858684774288),
        ("clutch-brake", 0.0),
    ];
    for (name, v) in want {
        let spec = get_problem_spec(name).unwrap();
        let e = spec.evaluate(&spec.fixture().unwrap().position).unwrap();
        assert!((e.violation_sum - v).abs() <= 1e-9, "{name}: {}", e.violation_sum);
    }
}

/// Local optima found by SLSQP / trust-constr; the implementation must
/// agree on the cost and find the point feasible at the solver's accuracy.
#[test]
fn refined_optima_evaluate_as_oracle() {
    let cases: [(&str, &[f64], f64); 5] = [
        ("spring", &[0.05168906, 0.35671761, 11.28897334], 0.012665232788319793),
        ("three-bar-truss", &[0.78867513, 0.4082483], 263.8958433637066),
        ("welded-beam", &[0.20572964, 3.47048867, 9.03662391, 0.20572964], 1.7248523085971612),
        (
            "cantilever",
            &[6.01601594, 5.30917386, 4.49432956, 3.50147497, 2.15266529],
            1.3399563605990743,
        ),
        ("pressure-vessel", &[0.77816864, 0.38464916, 40.31961873, 199.99999996], 5885.332773837439),
    ];
    for (name, x, cost) in cases {
        let spec = get_problem_spec(name).unwrap();
        let e = spec.evaluate_with_tolerance(x, 1e-4).unwrap();
        assert!(close(e.objective, cost, 1e-6), "{name}: {} vs {cost}", e.objective);
        assert!(e.feasible, "{name}: violation {}", e.violation_sum);
    }
}

#[test]
fn audit_flags_expected_rows() {
    let reg = Registry::builtin();
    let flagged: Vec<String> = discrepancy_ledger(&reg).into_iter().map(|a| a.problem).collect();
    for name in ["pressure-vessel", "speed-reducer", "welded-beam", "refrigeration", "batch-plant", "clutch-brake"] {
        assert!(flagged.iter().any(|f| f == name), "{name} not flagged: {flagged:?}");
    }
    for name in ["spring", "three-bar-truss", "cantilever"] {
        assert!(!flagged.iter().any(|f| f == name), "{name} flagged");
    }
    let sr = audit_fixture(reg.get("speed-reducer").unwrap()).unwrap();
    assert_eq!(sr.out_of_bounds, vec![4]);
    let cb = audit_fixture(reg.get("clutch-brake").unwrap()).unwrap();
    assert_eq!(cb.out_of_bounds, vec![3]);
}

#[test]
fn engineering_dimensions() {
    let dims = [4, 7, 3, 4, 2, 14, 10, 5, 5];
    for (name, d) in ENGINEERING_PROBLEMS.iter().zip(dims) {
        let spec = get_problem_spec(name).unwrap();
        assert_eq!(spec.dim(), d, "{name}");
        assert_eq!(spec.kind(), ProblemKind::Engineering);
        assert!(spec.constraint_count() > 0);
    }
}

#[test]
fn unconstrained_minimum_is_zero() {
    for name in UNCONSTRAINED_FUNCTIONS {
        for dim in [2, 10, 30] {
            let x = optimum(name, dim).unwrap();
            let f = evaluate_unconstrained(name, &x).unwrap();
            assert!(f.abs() <= 1e-12, "{name} at D={dim}: {f}");
        }
    }
}

#[test]
fn unconstrained_known_values() {
    assert_eq!(evaluate_unconstrained("sphere", &[1.0, 2.0, 3.0]).unwrap(), 14.0);
    assert_eq!(evaluate_unconstrained("rastrigin", &[1.0, 1.0]).unwrap(), 2.0);
    assert_eq!(evaluate_unconstrained("rosenbrock", &[0.0, 0.0]).unwrap(), 1.0);
    let spec = unconstrained_spec("ackley", 5).unwrap();
    assert_eq!(spec.dim(), 5);
    assert_eq!(spec.constraint_count(), 0);
}

#[test]
fn unknown_problem_suggests_nearest() {
    match get_problem_spec("presure-vessel") {
        Err(Error::UnknownProblem { suggestion, .. }) => assert_eq!(suggestion.as_deref(), Some("pressure-vessel")),
        other => panic!("{other:?}"),
    }
    match get_problem_spec("zzzzzzzzzz") {
        Err(Error::UnknownProblem { suggestion, .. }) => assert_eq!(suggestion, None),
        other => panic!("{other:?}"),
    }
}

struct Disk;

impl Objective for Disk {
    fn evaluate(&self, x: &[f64], g: &mut Vec<f64>) -> f64 {
        g.push(x[0] * x[0] + x[1] * x[1] - 1.0);
        x[0] + x[1]
    }
}

#[test]
fn external_problem_registers_and_runs() {
    let mut reg = Registry::builtin();
    let spec = ProblemSpec::new(
        "disk",
        ProblemKind::External,
        Bounds::uniform(2, -2.0, 2.0).unwrap(),
        1,
        Arc::new(Disk),
    );
    reg.register(spec.clone()).unwrap();
    assert!(matches!(reg.register(spec), Err(Error::Config(_))));
    let e = reg.get("disk").unwrap().evaluate(&[2.0, 2.0]).unwrap();
    assert!(!e.feasible);
    assert_eq!(e.violation_sum, 7.0);
}

#[test]
fn nan_objective_ranks_last() {
    let spec = ProblemSpec::from_fn("nan", Bounds::uniform(1, 0.0, 1.0).unwrap(), 1, |_, g| {
        g.push(f64::NAN);
        f64::NAN
    });
    let e = spec.evaluate(&[0.5]).unwrap();
    assert_eq!(e.objective, f64::INFINITY);
    assert_eq!(e.violation_sum, f64::INFINITY);
    assert!(matches!(spec.evaluate(&[0.5, 0.5]), Err(Error::Usage(_))));
}
