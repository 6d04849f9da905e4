//! Closed-form engineering design problems.
//!
//! Where the typeset formulations are ambiguous the classical literature form
//! is used and checked against the published best rows (see the fixture
//! audit). Every function returns the objective and appends its constraint
//! values, `g_i(x) <= 0` meaning satisfied.

use std::f64::consts::{PI, SQRT_2};
use std::sync::Arc;

use super::{Fixture, Objective, ProblemKind, ProblemSpec};
use crate::engine::Bounds;

/// Registry names of the nine engineering problems, in reporting order.
pub const ENGINEERING_PROBLEMS: [&str; 9] = [
    "pressure-vessel",
    "speed-reducer",
    "spring",
    "welded-beam",
    "three-bar-truss",
    "refrigeration",
    "batch-plant",
    "cantilever",
    "clutch-brake",
];

type Formula = fn(&[f64], &mut Vec<f64>) -> f64;

struct Engineering(Formula);

impl Objective for Engineering {
    fn evaluate(&self, x: &[f64], g: &mut Vec<f64>) -> f64 {
        (self.0)(x, g)
    }
}

/// Shell thickness, head thickness, inner radius, cylinder length.
pub(crate) fn pressure_vessel(x: &[f64], g: &mut Vec<f64>) -> f64 {
    let (ts, th, r, l) = (x[0], x[1], x[2], x[3]);
    g.push(-ts + 0.0193 * r);
    g.push(-th + 0.00954 * r);
    g.push(-PI * r * r * l - 4.0 / 3.0 * PI * r.powi(3) + 1_296_000.0);
    g.push(l - 240.0);
    0.6224 * ts * r * l + 1.7781 * th * r * r + 3.1661 * ts * ts * l + 19.84 * ts * ts * r
}

pub(crate) fn speed_reducer(x: &[f64], g: &mut Vec<f64>) -> f64 {
    let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    g.push(27.0 / (x1 * x2 * x2 * x3) - 1.0);
    g.push(397.5 / (x1 * x2 * x2 * x3 * x3) - 1.0);
    g.push(1.93 * x4.powi(3) / (x2 * x3 * x6.powi(4)) - 1.0);
    g.push(1.93 * x5.powi(3) / (x2 * x3 * x7.powi(4)) - 1.0);
    g.push(((745.0 * x4 / (x2 * x3)).powi(2) + 16.9e6).sqrt() / (110.0 * x6.powi(3)) - 1.0);
    g.push(((745.0 * x5 / (x2 * x3)).powi(2) + 157.5e6).sqrt() / (85.0 * x7.powi(3)) - 1.0);
    g.push(x2 * x3 / 40.0 - 1.0);
    g.push(5.0 * x2 / x1 - 1.0);
    g.push(x1 / (12.0 * x2) - 1.0);
    g.push((1.5 * x6 + 1.9) / x4 - 1.0);
    g.push((1.1 * x7 + 1.9) / x5 - 1.0);
    0.7854 * x1 * x2 * x2 * (3.3333 * x3 * x3 + 14.9334 * x3 - 43.0934)
        - 1.508 * x1 * (x6 * x6 + x7 * x7)
        + 7.4777 * (x6.powi(3) + x7.powi(3))
        + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7)
}

/// Wire diameter, mean coil diameter, active coils.
pub(crate) fn spring(x: &[f64], g: &mut Vec<f64>) -> f64 {
    let (d, dm, n) = (x[0], x[1], x[2]);
    g.push(1.0 - dm.powi(3) * n / (71785.0 * d.powi(4)));
    g.push(
        (4.0 * dm * dm - d * dm) / (12566.0 * (dm * d.powi(3) - d.powi(4)))
            + 1.0 / (5108.0 * d * d)
            - 1.0,
    );
    g.push(1.0 - 140.45 * d / (dm * dm * n));
    g.push((d + dm) / 1.5 - 1.0);
    (n + 2.0) * dm * d * d
}

/// Weld thickness, weld length, bar height, bar thickness.
pub(crate) fn welded_beam(x: &[f64], g: &mut Vec<f64>) -> f64 {
    const P: f64 = 6000.0;
    const L: f64 = 14.0;
    const E: f64 = 30e6;
    const G: f64 = 12e6;
    const TAU_MAX: f64 = 13_600.0;
    const SIGMA_MAX: f64 = 30_000.0;
    const DELTA_MAX: f64 = 0.25;

    let (h, l, t, b) = (x[0], x[1], x[2], x[3]);
    let tau_p = P / (SQRT_2 * h * l);
    let m = P * (L + l / 2.0);
    let r = (l * l / 4.0 + ((h + t) / 2.0).powi(2)).sqrt();
    let j = 2.0 * (SQRT_2 * h * l * (l * l / 12.0 + ((h + t) / 2.0).powi(2)));
    let tau_pp = m * r / j;
    let tau = (tau_p * tau_p + 2.0 * tau_p * tau_pp * l / (2.0 * r) + tau_pp * tau_pp).sqrt();
    let sigma = 6.0 * P * L / (b * t * t);
    let delta = 4.0 * P * L.powi(3) / (E * t.powi(3) * b);
    let pc = 4.013 * E * (t * t * b.powi(6) / 36.0).sqrt() / (L * L)
        * (1.0 - t / (2.0 * L) * (E / (4.0 * G)).sqrt());

    g.push(tau - TAU_MAX);
    g.push(sigma - SIGMA_MAX);
    g.push(h - b);
    g.push(0.10471 * h * h + 0.04811 * t * b * (14.0 + l) - 5.0);
    g.push(0.125 - h);
    g.push(delta - DELTA_MAX);
    g.push(P - pc);
    1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l)
}

pub(crate) fn three_bar_truss(x: &[f64], g: &mut Vec<f64>) -> f64 {
    const LEN: f64 = 100.0;
    const LOAD: f64 = 2.0;
    const STRESS: f64 = 2.0;
    let (a1, a2) = (x[0], x[1]);
    let denom = SQRT_2 * a1 * a1 + 2.0 * a1 * a2;
    g.push((SQRT_2 * a1 + a2) / denom * LOAD - STRESS);
    g.push(a2 / denom * LOAD - STRESS);
    g.push(1.0 / (SQRT_2 * a2 + a1) * LOAD - STRESS);
    (2.0 * SQRT_2 * a1 + a2) * LEN
}

pub(crate) fn refrigeration(x: &[f64], g: &mut Vec<f64>) -> f64 {
    // 1-based aliases keep the long posynomials readable.
    let v = |i: usize| x[i - 1];
    g.push(1.524 / v(7) - 1.0);
    g.push(1.524 / v(8) - 1.0);
    g.push(0.07789 * v(1) - 2.0 / v(7) * v(9) - 1.0);
    g.push(7.05305 / v(9) * v(1).powi(2) * v(10) / v(8) / v(2) / v(14) - 1.0);
    g.push(0.0833 / v(13) * v(14) - 1.0);
    g.push(0.04771 * v(10) * v(8).powf(1.8812) * v(12).powf(0.3424) - 1.0);
    g.push(0.0488 * v(9) * v(7).powf(1.893) * v(11).powf(0.316) - 1.0);
    g.push(0.0099 * v(1) / v(3) - 1.0);
    g.push(0.0193 * v(2) / v(4) - 1.0);
    g.push(0.0298 * v(1) / v(5) - 1.0);
    g.push(
        47.136 * v(2).powf(0.333) / v(10) * v(12) - 1.333 * v(8) * v(13).powf(2.1195)
            + 62.08 * v(13).powf(2.1195) / v(12) * v(8).powf(0.2) / v(10)
            - 1.0,
    );
    g.push(0.056 * v(2) / v(6) - 1.0);
    g.push(2.0 / v(9) - 1.0);
    g.push(2.0 / v(10) - 1.0);
    g.push(v(12) / v(11) - 1.0);

    63098.88 * v(2) * v(4) * v(12)
        + 5441.5 * v(2).powi(2) * v(12)
        + 115055.5 * v(2).powf(1.664) * v(6)
        + 6172.27 * v(2).powi(2) * v(6)
        + 63098.88 * v(1) * v(3) * v(11)
        + 5441.5 * v(1).powi(2) * v(11)
        + 115055.5 * v(1).powf(1.664) * v(5)
        + 6172.27 * v(1).powi(2) * v(5)
        + 140.53 * v(1) * v(11)
        + 281.29 * v(3) * v(11)
        + 70.26 * v(1).powi(2)
        + 281.29 * v(1) * v(3)
        + 281.29 * v(3).powi(2)
        + 14437.0 * v(8).powf(1.8812) * v(12).powf(0.3424) * v(10) / v(14) * v(1).powi(2) * v(7) / v(9)
        + 20470.2 * v(7).powf(2.893) * v(11).powf(0.316) * v(1).powi(2)
}

/// Two products through three stages: equipment counts `N_j` (rounded to the
/// nearest integer), volumes `V_j`, cycle times `T_i`, batch sizes `B_i`.
pub(crate) fn batch_plant(x: &[f64], g: &mut Vec<f64>) -> f64 {
    const SIZE: [[f64; 3]; 2] = [[2.0, 3.0, 4.0], [4.0, 6.0, 3.0]];
    const TIME: [[f64; 3]; 2] = [[8.0, 20.0, 8.0], [16.0, 4.0, 4.0]];
    const DEMAND: [f64; 2] = [40_000.0, 20_000.0];
    const HORIZON: f64 = 6000.0;
    const COST: f64 = 250.0;
    const EXPONENT: f64 = 0.6;

    let n = [x[0].round(), x[1].round(), x[2].round()];
    let vol = [x[3], x[4], x[5]];
    let cycle = [x[6], x[7]];
    let batch = [x[8], x[9]];

    g.push(DEMAND[0] * cycle[0] / batch[0] + DEMAND[1] * cycle[1] / batch[1] - HORIZON);
    for j in 0..3 {
        g.push(SIZE[0][j] * batch[0] + SIZE[1][j] * batch[1] - vol[j]);
    }
    for i in 0..2 {
        for j in 0..3 {
            g.push(TIME[i][j] - n[j] * cycle[i]);
        }
    }
    COST * (0..3).map(|j| n[j] * vol[j].powf(EXPONENT)).sum::<f64>()
}

/// Hollow square cross-section widths of five beam segments.
pub(crate) fn cantilever(x: &[f64], g: &mut Vec<f64>) -> f64 {
    const COEF: [f64; 5] = [61.0, 37.0, 19.0, 7.0, 1.0];
    g.push(COEF.iter().zip(x).map(|(c, v)| c / v.powi(3)).sum::<f64>() - 1.0);
    0.0624 * x.iter().sum::<f64>()
}

/// Inner radius, outer radius, disc thickness, actuating force, friction
/// surfaces (continuous). Radii and thickness in mm; the friction moment is
/// kept in N·mm against `s * M_s`, following the reference implementation of
/// this benchmark.
pub(crate) fn clutch_brake(x: &[f64], g: &mut Vec<f64>) -> f64 {
    const DELTA_R: f64 = 20.0;
    const I_Z: f64 = 55.0;
    const P_MAX: f64 = 1.0;
    const T_MAX: f64 = 15.0;
    const MU: f64 = 0.5;
    const S: f64 = 1.5;
    const M_S: f64 = 40.0;
    const M_F: f64 = 3.0;
    const N: f64 = 250.0;
    const V_SR_MAX: f64 = 10.0;
    const L_MAX: f64 = 30.0;
    const GAP: f64 = 0.5;
    const DENSITY: f64 = 0.0000078;

    let (ri, ro, t, f, z) = (x[0], x[1], x[2], x[3], x[4]);
    let area = PI * (ro * ro - ri * ri);
    let cubes = ro.powi(3) - ri.powi(3);
    let r_sr = 2.0 / 3.0 * cubes / (ro * ro * ri * ri);
    let v_sr = PI * r_sr * N / 30.0;
    let p_rz = f / area;
    let omega = PI * N / 30.0;
    let m_h = 2.0 / 3.0 * MU * f * z * cubes / (ro * ro - ri * ri);
    let stop_time = I_Z * omega / (m_h + M_F);

    g.push(ri - ro + DELTA_R);
    g.push((z + 1.0) * (t + GAP) - L_MAX);
    g.push(p_rz - P_MAX);
    g.push(p_rz * v_sr - P_MAX * V_SR_MAX);
    g.push(v_sr - V_SR_MAX);
    g.push(stop_time - T_MAX);
    g.push(S * M_S - m_h);
    g.push(-stop_time);
    area * t * (z + 1.0) * DENSITY
}

fn fixture(position: &[f64], cost: f64) -> Fixture {
    Fixture {
        position: position.to_vec(),
        cost,
        source: "published mSHO best-solution row".into(),
    }
}

fn build(name: &str, lower: &[f64], upper: &[f64], constraints: usize, f: Formula, fx: Fixture) -> ProblemSpec {
    let bounds = Bounds::new(lower.to_vec(), upper.to_vec()).expect("built-in bounds are valid");
    ProblemSpec::new(name, ProblemKind::Engineering, bounds, constraints, Arc::new(Engineering(f)))
        .with_fixture(fx)
}

pub(crate) fn builtin() -> Vec<ProblemSpec> {
    vec![
        build(
            "pressure-vessel",
            &[0.0, 0.0, 10.0, 10.0],
            &[99.0, 99.0, 200.0, 200.0],
            4,
            pressure_vessel,
            fixture(&[0.774555, 0.383203, 40.31962, 200.0], 5870.12409),
        ),
        build(
            "speed-reducer",
            &[2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0],
            &[3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5],
            11,
            speed_reducer,
            fixture(&[3.497599, 0.7, 17.0, 7.3, 7.713535, 3.350056, 5.285631], 2993.634),
        ),
        build(
            "spring",
            &[0.05, 0.25, 2.0],
            &[2.0, 1.30, 15.0],
            4,
            spring,
            fixture(&[0.051687, 0.356672, 11.29167], 0.012665),
        ),
        build(
            "welded-beam",
            &[0.1, 0.1, 0.1, 0.1],
            &[2.0, 10.0, 10.0, 2.0],
            7,
            welded_beam,
            fixture(&[0.20573, 3.470471, 9.036627, 0.20573], 1.724852),
        ),
        build(
            "three-bar-truss",
            &[0.0, 0.0],
            &[1.0, 1.0],
            3,
            three_bar_truss,
            fixture(&[0.788649, 0.408235], 263.8915),
        ),
        build(
            "refrigeration",
            &[0.001; 14],
            &[5.0; 14],
            15,
            refrigeration,
            fixture(
                &[
                    0.001, 0.001, 0.001, 0.001, 0.001, 0.001, 1.524, 1.524, 4.99999, 2.0, 0.001, 0.001,
                    0.007279, 0.007279,
                ],
                0.032255,
            ),
        ),
        build(
            "batch-plant",
            &[0.51, 0.51, 0.51, 250.0, 250.0, 250.0, 20.0 / 3.0, 16.0 / 3.0, 40_000.0 / 900.0, 20_000.0 / 1125.0],
            &[3.49, 3.49, 3.49, 2500.0, 2500.0, 2500.0, 20.0, 16.0, 2500.0 / 4.0, 2500.0 / 6.0],
            10,
            batch_plant,
            fixture(
                &[
                    1.525762, 1.508902, 0.674961, 479.9229, 719.8071, 660.2033, 9.999419, 7.999732,
                    120.1043, 59.92858,
                ],
                58507.14,
            ),
        ),
        build(
            "cantilever",
            &[0.01; 5],
            &[100.0; 5],
            1,
            cantilever,
            fixture(&[6.015906, 5.308734, 4.495939, 3.500899, 2.152182], 1.339956),
        ),
        build(
            "clutch-brake",
            &[60.0, 90.0, 1.0, 600.0, 2.0],
            &[80.0, 110.0, 3.0, 1000.0, 9.0],
            8,
            clutch_brake,
            fixture(&[70.0, 90.0, 1.0, 213.5391, 2.0], 0.235242),
        ),
    ]
}
