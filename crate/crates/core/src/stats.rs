//! Descriptive statistics, mean ranks, Friedman and Wilcoxon tests.

use std::cmp::Ordering;
use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// Significance level used for win/tie/loss verdicts.
pub const DEFAULT_ALPHA: f64 = 0.05;

/// Final costs of one algorithm on one problem, one per run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    pub label: String,
    pub values: Vec<f64>,
}

impl SampleSet {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        let label = label.into();
        if values.is_empty() {
            return Err(Error::Stats(format!("sample {label} is empty")));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Stats(format!("sample {label} contains non-finite value {v}")));
        }
        Ok(Self { label, values })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub n: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
    /// Sample standard deviation (`n - 1` denominator).
    pub std: f64,
}

pub fn descriptive_stats(s: &SampleSet) -> Result<DescriptiveStats> {
    let n = s.values.len();
    if n < 2 {
        return Err(Error::Stats(format!(
            "standard deviation of {} needs at least two values, got {n}",
            s.label
        )));
    }
    let mean = mean(&s.values);
    let var = s.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    Ok(DescriptiveStats {
        n,
        min: s.values.iter().copied().fold(f64::INFINITY, f64::min),
        max: s.values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean,
        median: median(&s.values),
        std: var.sqrt(),
    })
}

pub(crate) fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

pub fn median(v: &[f64]) -> f64 {
    if v.is_empty() {
        return f64::NAN;
    }
    let mut s = v.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    if n % 2 == 1 {
        s[n / 2]
    } else {
        0.5 * (s[n / 2 - 1] + s[n / 2])
    }
}

/// 1-based ranks with ties sharing the mean of the ranks they occupy.
pub fn mid_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]].total_cmp(&values[idx[i]]) == Ordering::Equal {
            j += 1;
        }
        let shared = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = shared;
        }
        i = j + 1;
    }
    ranks
}

/// Sizes of the groups of tied values.
fn tie_groups(values: &[f64]) -> Vec<usize> {
    let mut s = values.to_vec();
    s.sort_by(f64::total_cmp);
    let mut groups = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let mut j = i;
        while j + 1 < s.len() && s[j + 1].total_cmp(&s[i]) == Ordering::Equal {
            j += 1;
        }
        groups.push(j - i + 1);
        i = j + 1;
    }
    groups
}

/// Rank 1 for the lowest mean.
pub fn rank_by_mean(means: &[f64]) -> Vec<f64> {
    mid_ranks(means)
}

fn check_matrix(rows: &[Vec<f64>]) -> Result<usize> {
    let k = rows
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Usage("rank matrix has no rows".into()))?;
    if k == 0 {
        return Err(Error::Usage("rank matrix has no columns".into()));
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != k) {
        return Err(Error::Usage(format!("rank matrix row {i} has {} entries, expected {k}", r.len())));
    }
    Ok(k)
}

/// Column means of a problems-by-algorithms rank matrix.
pub fn friedman_mean_rank(rank_matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    let k = check_matrix(rank_matrix)?;
    let n = rank_matrix.len() as f64;
    Ok((0..k).map(|j| rank_matrix.iter().map(|r| r[j]).sum::<f64>() / n).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FriedmanResult {
    pub mean_ranks: Vec<f64>,
    /// Tie-corrected chi-square statistic.
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
}

/// Friedman test on a problems-by-algorithms matrix of values (lower is
/// better); each row is ranked with mid-ranks first.
pub fn friedman_test(values: &[Vec<f64>]) -> Result<FriedmanResult> {
    let k = check_matrix(values)?;
    if k < 2 {
        return Err(Error::Stats("Friedman test needs at least two algorithms".into()));
    }
    let ranks: Vec<Vec<f64>> = values.iter().map(|r| mid_ranks(r)).collect();
    let mean_ranks = friedman_mean_rank(&ranks)?;
    let n = ranks.len() as f64;
    let kf = k as f64;
    let sum_sq: f64 = ranks.iter().flatten().map(|r| r * r).sum();
    let denom = sum_sq - n * kf * (kf + 1.0).powi(2) / 4.0;
    let spread: f64 = (0..k)
        .map(|j| {
            let total: f64 = ranks.iter().map(|r| r[j]).sum();
            (total - n * (kf + 1.0) / 2.0).powi(2)
        })
        .sum();
    let (statistic, p_value) = if denom <= 0.0 {
        (0.0, 1.0)
    } else {
        let stat = (kf - 1.0) * spread / denom;
        let chi = ChiSquared::new(kf - 1.0).map_err(|e| Error::Stats(e.to_string()))?;
        (stat, chi.sf(stat))
    };
    Ok(FriedmanResult {
        mean_ranks,
        statistic,
        df: k - 1,
        p_value,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankSumResult {
    /// Mann-Whitney U of the first sample.
    pub u: f64,
    pub z: f64,
    pub p_value: f64,
}

/// Two-sided rank-sum (Mann-Whitney) test, normal approximation with tie
/// and continuity corrections.
pub fn rank_sum_test(a: &[f64], b: &[f64]) -> Result<RankSumResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Stats("rank-sum test needs two non-empty samples".into()));
    }
    if a.iter().chain(b).any(|v| v.is_nan()) {
        return Err(Error::Stats("rank-sum test got NaN".into()));
    }
    let (n, m) = (a.len() as f64, b.len() as f64);
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = mid_ranks(&pooled);
    let r_a: f64 = ranks[..a.len()].iter().sum();
    let u = r_a - n * (n + 1.0) / 2.0;
    let mu = n * m / 2.0;
    let total = n + m;
    let ties: f64 = tie_groups(&pooled)
        .into_iter()
        .map(|t| {
            let t = t as f64;
            t * t * t - t
        })
        .sum();
    let var = if total > 1.0 {
        n * m / 12.0 * ((total + 1.0) - ties / (total * (total - 1.0)))
    } else {
        0.0
    };
    if var <= 0.0 {
        return Ok(RankSumResult { u, z: 0.0, p_value: 1.0 });
    }
    let z = ((u - mu).abs() - 0.5).max(0.0) / var.sqrt();
    Ok(RankSumResult {
        u,
        z,
        p_value: erfc(z / SQRT_2).min(1.0),
    })
}

/// Two-sided p-value of [`rank_sum_test`].
pub fn wilcoxon_rank_sum(a: &SampleSet, b: &SampleSet) -> Result<f64> {
    Ok(rank_sum_test(&a.values, &b.values)?.p_value)
}

/// Paired signed-rank test on `a[i] - b[i]`, zero differences dropped,
/// normal approximation with tie and continuity corrections.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::Stats(format!(
            "signed-rank test needs paired non-empty samples, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).filter(|d| *d != 0.0).collect();
    if d.is_empty() {
        return Ok(1.0);
    }
    if d.iter().any(|v| v.is_nan()) {
        return Err(Error::Stats("signed-rank test got NaN".into()));
    }
    let abs: Vec<f64> = d.iter().map(|v| v.abs()).collect();
    let ranks = mid_ranks(&abs);
    let w_plus: f64 = d.iter().zip(&ranks).filter(|(v, _)| **v > 0.0).map(|(_, r)| r).sum();
    let n = d.len() as f64;
    let mu = n * (n + 1.0) / 4.0;
    let ties: f64 = tie_groups(&abs)
        .into_iter()
        .map(|t| {
            let t = t as f64;
            t * t * t - t
        })
        .sum();
    let var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - ties / 48.0;
    if var <= 0.0 {
        return Ok(1.0);
    }
    let z = ((w_plus - mu).abs() - 0.5).max(0.0) / var.sqrt();
    Ok(erfc(z / SQRT_2).min(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Win,
    Tie,
    Loss,
}

/// Verdict for the reference algorithm. `median_diff` is the reference
/// median minus the other median, so negative means the reference is
/// better when minimizing.
pub fn win_tie_loss(p: f64, median_diff: f64, alpha: f64) -> Verdict {
    if !(p < alpha) {
        return Verdict::Tie;
    }
    match median_diff.partial_cmp(&0.0) {
        Some(Ordering::Less) => Verdict::Win,
        Some(Ordering::Greater) => Verdict::Loss,
        _ => Verdict::Tie,
    }
}

/// Costs stay `+inf` for runs that never became feasible. JSON has no
/// infinity, so non-finite values go out as the strings `inf`, `-inf`,
/// `nan`.
mod lenient_f64 {
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_str(&crate::harness::format_value(*v))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = f64;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number or one of inf, -inf, nan")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "inf" => Ok(f64::INFINITY),
                    "-inf" => Ok(f64::NEG_INFINITY),
                    "nan" => Ok(f64::NAN),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// One algorithm's row for one problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmRow {
    pub algorithm: String,
    pub runs: usize,
    #[serde(with = "lenient_f64")]
    pub min: f64,
    #[serde(with = "lenient_f64")]
    pub max: f64,
    #[serde(with = "lenient_f64")]
    pub mean: f64,
    #[serde(with = "lenient_f64")]
    pub median: f64,
    /// Missing with fewer than two runs or non-finite values.
    pub std: Option<f64>,
    pub rank: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseTest {
    pub algorithm: String,
    pub p_value: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemComparison {
    pub problem: String,
    pub rows: Vec<AlgorithmRow>,
    /// Reference against each other algorithm.
    pub tests: Vec<PairwiseTest>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub reference: String,
    pub algorithms: Vec<String>,
    pub problems: Vec<ProblemComparison>,
    /// Mean of per-problem ranks, aligned with `algorithms`.
    pub friedman_mean_ranks: Vec<f64>,
    pub friedman: Option<FriedmanResult>,
}

impl ComparisonReport {
    /// `cells[p][a]` holds the final costs of `algorithms[a]` on
    /// `problems[p]`. Empty samples are rejected.
    pub fn build(
        reference: &str,
        algorithms: &[String],
        problems: &[String],
        cells: &[Vec<Vec<f64>>],
    ) -> Result<Self> {
        if algorithms.is_empty() {
            return Err(Error::Stats("no algorithms to compare".into()));
        }
        if cells.len() != problems.len() || cells.iter().any(|r| r.len() != algorithms.len()) {
            return Err(Error::Usage("sample grid does not match problems x algorithms".into()));
        }
        let ref_idx = algorithms.iter().position(|a| a == reference).unwrap_or(0);
        let reference = algorithms[ref_idx].clone();

        let mut out = Vec::with_capacity(problems.len());
        let mut rank_rows = Vec::with_capacity(problems.len());
        let mut mean_rows = Vec::with_capacity(problems.len());
        for (problem, row) in problems.iter().zip(cells) {
            if let Some(a) = row.iter().position(Vec::is_empty) {
                return Err(Error::Stats(format!("no successful runs of {} on {problem}", algorithms[a])));
            }
            let means: Vec<f64> = row.iter().map(|v| mean(v)).collect();
            let ranks = rank_by_mean(&means);
            let rows = algorithms
                .iter()
                .zip(row)
                .zip(&ranks)
                .map(|((name, v), &rank)| {
                    let std = SampleSet::new(name.clone(), v.clone())
                        .and_then(|s| descriptive_stats(&s))
                        .map(|d| d.std)
                        .ok();
                    AlgorithmRow {
                        algorithm: name.clone(),
                        runs: v.len(),
                        min: v.iter().copied().fold(f64::INFINITY, f64::min),
                        max: v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                        mean: mean(v),
                        median: median(v),
                        std,
                        rank,
                    }
                })
                .collect();
            let reference_values = &row[ref_idx];
            let mut tests = Vec::new();
            for (a, name) in algorithms.iter().enumerate() {
                if a == ref_idx {
                    continue;
                }
                let p = rank_sum_test(reference_values, &row[a])?.p_value;
                let diff = median(reference_values) - median(&row[a]);
                tests.push(PairwiseTest {
                    algorithm: name.clone(),
                    p_value: p,
                    verdict: win_tie_loss(p, diff, DEFAULT_ALPHA),
                });
            }
            out.push(ProblemComparison {
                problem: problem.clone(),
                rows,
                tests,
            });
            rank_rows.push(ranks);
            mean_rows.push(means);
        }
        let friedman_mean_ranks = if rank_rows.is_empty() {
            vec![]
        } else {
            friedman_mean_rank(&rank_rows)?
        };
        let friedman = if algorithms.len() >= 2 && !mean_rows.is_empty() {
            friedman_test(&mean_rows).ok()
        } else {
            None
        };
        Ok(Self {
            reference,
            algorithms: algorithms.to_vec(),
            problems: out,
            friedman_mean_ranks,
            friedman,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[f64]) -> SampleSet {
        SampleSet::new("x", v.to_vec()).unwrap()
    }

    #[test]
    fn descriptive_examples() {
        let d = descriptive_stats(&set(&[1.0, 2.0, 3.0])).unwrap();
        assert_eq!((d.min, d.max, d.mean, d.std), (1.0, 3.0, 2.0, 1.0));
        assert_eq!(descriptive_stats(&set(&[5.0, 5.0, 5.0])).unwrap().std, 0.0);
        assert!(descriptive_stats(&set(&[5.0])).is_err());
        assert!(SampleSet::new("x", vec![]).is_err());
        assert!(SampleSet::new("x", vec![f64::NAN]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_by_mean(&[3.0, 1.0, 2.0]), vec![3.0, 1.0, 2.0]);
        assert_eq!(rank_by_mean(&[1.0, 1.0, 2.0]), vec![1.5, 1.5, 3.0]);
    }

    #[test]
    fn friedman_examples() {
        let r = friedman_mean_rank(&[vec![1.0, 2.0], vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!((r[0] - 4.0 / 3.0).abs() < 1e-12 && (r[1] - 5.0 / 3.0).abs() < 1e-12);
        assert!(friedman_mean_rank(&[vec![1.0, 2.0], vec![1.0]]).is_err());
        let same = friedman_mean_rank(&[vec![2.0; 3], vec![2.0; 3]]).unwrap();
        assert_eq!(same, vec![2.0; 3]);
        let t = friedman_test(&[vec![1.0, 1.0], vec![3.0, 3.0]]).unwrap();
        assert_eq!(t.p_value, 1.0);
    }

    #[test]
    fn rank_sum_examples() {
        let p = wilcoxon_rank_sum(&set(&[1.0, 2.0, 3.0]), &set(&[4.0, 5.0, 6.0])).unwrap();
        assert!((p - 0.1).abs() <= 0.05, "{p}");
        let p = wilcoxon_rank_sum(&set(&[1.0, 2.0, 2.0]), &set(&[1.0, 2.0, 2.0])).unwrap();
        assert_eq!(p, 1.0);
        let p = wilcoxon_rank_sum(&set(&[4.0; 5]), &set(&[4.0; 3])).unwrap();
        assert_eq!(p, 1.0);
    }

    #[test]
    fn signed_rank_identical_is_one() {
        assert_eq!(wilcoxon_signed_rank(&[1.0, 2.0], &[1.0, 2.0]).unwrap(), 1.0);
        assert!(wilcoxon_signed_rank(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(win_tie_loss(0.01, -1.0, 0.05), Verdict::Win);
        assert_eq!(win_tie_loss(0.2, -1.0, 0.05), Verdict::Tie);
        assert_eq!(win_tie_loss(0.01, 1.0, 0.05), Verdict::Loss);
    }

    #[test]
    fn report_shape() {
        let algs = vec!["msho".to_string(), "sho".to_string()];
        let probs = vec!["p".to_string()];
        let cells = vec![vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]];
        let r = ComparisonReport::build("msho", &algs, &probs, &cells).unwrap();
        let ranks: Vec<f64> = r.problems[0].rows.iter().map(|x| x.rank).collect();
        assert_eq!(ranks, vec![1.0, 2.0]);
        assert_eq!(r.problems[0].tests.len(), 1);
        assert_eq!(r.friedman_mean_ranks, vec![1.0, 2.0]);
    }
}
