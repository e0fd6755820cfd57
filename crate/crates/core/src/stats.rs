//! Summaries and nonparametric comparisons of run batches.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// Threshold below which a p-value counts as significant.
pub const SIGNIFICANCE_LEVEL: f64 = 0.05;

/// Largest per-sample size handled by exact enumeration.
pub const EXACT_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n_runs: usize,
    #[serde(with = "crate::serde_real::real")]
    pub mean: f64,
    /// Sample standard deviation (divisor `n - 1`).
    #[serde(with = "crate::serde_real::real")]
    pub std: f64,
    #[serde(with = "crate::serde_real::real")]
    pub best: f64,
    #[serde(with = "crate::serde_real::real")]
    pub worst: f64,
}

/// Total order on fitness values: ascending, NaN after everything else.
pub fn fitness_cmp(a: &f64, b: &f64) -> Ordering {
    match (a.is_nan(), b.is_nan()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => a.partial_cmp(b).expect("non-NaN values are comparable"),
    }
}

pub fn summarize(values: &[f64]) -> Result<SummaryStats> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    let best = *values.iter().min_by(|a, b| fitness_cmp(a, b)).expect("non-empty");
    let worst = *values.iter().max_by(|a, b| fitness_cmp(a, b)).expect("non-empty");
    // keep best <= mean <= worst despite summation rounding
    let mean = if mean.is_finite() { mean.clamp(best, worst) } else { mean };
    Ok(SummaryStats { n_runs: n, mean, std, best, worst })
}

/// 1-based ranks in ascending order; tied values share the average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| fitness_cmp(&values[i], &values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && fitness_cmp(&values[order[start]], &values[order[end]]).is_eq() {
            end += 1;
        }
        // positions start..end hold ranks start+1..=end
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Sizes of the groups of tied values.
fn tie_groups(values: &[f64]) -> Vec<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_by(fitness_cmp);
    sorted
        .chunk_by(|a, b| fitness_cmp(a, b).is_eq())
        .map(<[f64]>::len)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TestMethod {
    Exact,
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonResult {
    pub p_value: f64,
    pub significant: bool,
    pub method: TestMethod,
}

impl ComparisonResult {
    fn new(p_value: f64, method: TestMethod) -> Self {
        let p_value = p_value.clamp(0.0, 1.0);
        Self { p_value, significant: p_value < SIGNIFICANCE_LEVEL, method }
    }
}

fn pooled(a: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(a.iter().chain(b).copied().collect())
}

/// Rank sum of the first `m` entries of `pooled`.
fn rank_sum_of_first(pooled: &[f64], m: usize) -> f64 {
    average_ranks(pooled)[..m].iter().sum()
}

/// `counts[s]` = number of `m`-subsets of `{1..=n}` with sum `s`.
fn subset_sum_counts(n: usize, m: usize) -> Vec<f64> {
    let max_sum = n * (n + 1) / 2;
    // table[k][s] over the items seen so far
    let mut table = vec![vec![0.0f64; max_sum + 1]; m + 1];
    table[0][0] = 1.0;
    for item in 1..=n {
        for k in (1..=m.min(item)).rev() {
            for s in (item..=max_sum).rev() {
                table[k][s] += table[k - 1][s - item];
            }
        }
    }
    table.swap_remove(m)
}

/// Two-sided exact p-value from the null distribution of the rank sum.
/// Requires tie-free samples.
pub fn rank_sum_exact(a: &[f64], b: &[f64]) -> Result<f64> {
    let all = pooled(a, b)?;
    if tie_groups(&all).iter().any(|&t| t > 1) {
        return Err(Error::InvalidInput("exact rank-sum test needs tie-free samples".into()));
    }
    let (m, n) = (a.len(), all.len());
    let w = rank_sum_of_first(&all, m).round() as usize;
    let counts = subset_sum_counts(n, m);
    let total: f64 = counts.iter().sum();
    let lower: f64 = counts[..=w].iter().sum();
    let upper: f64 = counts[w..].iter().sum();
    Ok((2.0 * lower.min(upper) / total).min(1.0))
}

/// Two-sided normal approximation with tie-corrected variance and continuity correction.
pub fn rank_sum_normal(a: &[f64], b: &[f64]) -> Result<f64> {
    let all = pooled(a, b)?;
    let (m, n) = (a.len() as f64, b.len() as f64);
    let total = m + n;
    let u = rank_sum_of_first(&all, a.len()) - m * (m + 1.0) / 2.0;
    let ties: f64 = tie_groups(&all)
        .into_iter()
        .map(|t| {
            let t = t as f64;
            t * t * t - t
        })
        .sum();
    let variance = if total > 1.0 {
        m * n / 12.0 * ((total + 1.0) - ties / (total * (total - 1.0)))
    } else {
        0.0
    };
    if variance <= 0.0 {
        return Ok(1.0);
    }
    let z = ((u - m * n / 2.0).abs() - 0.5).max(0.0) / variance.sqrt();
    Ok(erfc(z / std::f64::consts::SQRT_2).clamp(0.0, 1.0))
}

/// Two-sided Wilcoxon rank-sum test. Small tie-free samples use the exact
/// null distribution; everything else the normal approximation.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<ComparisonResult> {
    let all = pooled(a, b)?;
    let tie_free = tie_groups(&all).iter().all(|&t| t == 1);
    if tie_free && a.len() <= EXACT_LIMIT && b.len() <= EXACT_LIMIT {
        Ok(ComparisonResult::new(rank_sum_exact(a, b)?, TestMethod::Exact))
    } else {
        Ok(ComparisonResult::new(rank_sum_normal(a, b)?, TestMethod::Normal))
    }
}

/// Mean Friedman rank of each algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankTable {
    pub algorithms: Vec<String>,
    pub mean_ranks: Vec<f64>,
}

/// `results[i][j]` is algorithm `i` on problem `j`, lower is better.
/// Returns each algorithm's rank averaged over problems.
pub fn friedman_mean_ranks(results: &[Vec<f64>]) -> Result<Vec<f64>> {
    let k = results.len();
    if k < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 algorithms, got {k}")));
    }
    let m = results[0].len();
    if m == 0 {
        return Err(Error::EmptyInput);
    }
    if let Some(row) = results.iter().find(|r| r.len() != m) {
        return Err(Error::DimensionMismatch { expected: m, found: row.len() });
    }
    let mut sums = vec![0.0; k];
    for j in 0..m {
        let column: Vec<f64> = results.iter().map(|r| r[j]).collect();
        for (s, r) in sums.iter_mut().zip(average_ranks(&column)) {
            *s += r;
        }
    }
    Ok(sums.into_iter().map(|s| s / m as f64).collect())
}

impl RankTable {
    pub fn compute(algorithms: Vec<String>, results: &[Vec<f64>]) -> Result<Self> {
        if algorithms.len() != results.len() {
            return Err(Error::DimensionMismatch { expected: algorithms.len(), found: results.len() });
        }
        let mean_ranks = friedman_mean_ranks(results)?;
        Ok(Self { algorithms, mean_ranks })
    }
}
