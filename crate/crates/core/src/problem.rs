//! Problem model: search space, objective, constraints and discrete dimensions.

use std::fmt;
use std::sync::Arc;

use crate::error::{check_len, Error, Result};
use crate::rng::RngStream;

/// Weight of the quadratic constraint penalty.
pub const PENALTY_WEIGHT: f64 = 1e10;

/// A real-valued map over decision vectors.
pub type ScalarFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Axis-aligned box `lower[j] <= x[j] <= upper[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be at least 1".into()));
        }
        check_len(lower.len(), upper.len())?;
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidSpace(format!(
                    "dimension {j}: lower {lo} must be finite and below upper {hi}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same `[lower, upper]` interval on every one of `dim` axes.
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
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }
}

/// A dimension evaluated on a grid of `step` multiples (`step == 1.0` for integers).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteDim {
    pub index: usize,
    pub step: f64,
}

/// An objective over a search space, with optional inequality constraints
/// `g_i(x) <= 0` and discrete dimensions.
#[derive(Clone)]
pub struct Problem {
    name: String,
    space: SearchSpace,
    objective: ScalarFn,
    constraints: Vec<ScalarFn>,
    discrete: Vec<DiscreteDim>,
    known_best: Option<f64>,
    additive_noise: bool,
    notes: Vec<&'static str>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("space", &self.space)
            .field("constraints", &self.constraints.len())
            .field("discrete", &self.discrete)
            .field("known_best", &self.known_best)
            .field("additive_noise", &self.additive_noise)
            .finish()
    }
}

impl Problem {
    pub fn new<F>(name: impl Into<String>, space: SearchSpace, objective: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            space,
            objective: Arc::new(objective),
            constraints: Vec::new(),
            discrete: Vec::new(),
            known_best: None,
            additive_noise: false,
            notes: Vec::new(),
        }
    }

    pub fn with_constraint<G>(mut self, g: G) -> Self
    where
        G: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        self.constraints.push(Arc::new(g));
        self
    }

    pub fn with_integer_dims(self, dims: &[usize]) -> Result<Self> {
        dims.iter().try_fold(self, |p, &index| p.with_grid_dim(index, 1.0))
    }

    /// Evaluate dimension `index` at the nearest multiple of `step`.
    pub fn with_grid_dim(mut self, index: usize, step: f64) -> Result<Self> {
        if index >= self.space.dim() {
            return Err(Error::InvalidSpace(format!(
                "discrete dimension {index} out of range for dim {}",
                self.space.dim()
            )));
        }
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::InvalidSpace(format!("grid step {step} must be positive")));
        }
        self.discrete.retain(|d| d.index != index);
        self.discrete.push(DiscreteDim { index, step });
        self.discrete.sort_by_key(|d| d.index);
        Ok(self)
    }

    pub fn with_known_best(mut self, value: f64) -> Self {
        self.known_best = Some(value);
        self
    }

    /// Adds a uniform `[0, 1)` draw to every objective evaluation.
    pub fn with_additive_noise(mut self) -> Self {
        self.additive_noise = true;
        self
    }

    /// Attach an audit note, e.g. a correction to a published formulation.
    pub fn with_note(mut self, note: &'static str) -> Self {
        self.notes.push(note);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn known_best(&self) -> Option<f64> {
        self.known_best
    }

    pub fn is_noisy(&self) -> bool {
        self.additive_noise
    }

    pub fn notes(&self) -> &[&'static str] {
        &self.notes
    }

    pub fn discrete_dims(&self) -> &[DiscreteDim] {
        &self.discrete
    }

    /// Indices evaluated at integer values.
    pub fn integer_dims(&self) -> Vec<usize> {
        self.discrete.iter().filter(|d| d.step == 1.0).map(|d| d.index).collect()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// Objective without the noise term.
    pub fn deterministic_objective(&self, x: &[f64]) -> Result<f64> {
        check_len(self.dim(), x.len())?;
        Ok((self.objective)(x))
    }

    /// Objective including the noise term, if the problem has one.
    pub fn objective(&self, x: &[f64], noise: &mut RngStream) -> Result<f64> {
        let value = self.deterministic_objective(x)?;
        Ok(if self.additive_noise { value + noise.unit() } else { value })
    }

    pub fn constraint_values(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_len(self.dim(), x.len())?;
        Ok(self.constraints.iter().map(|g| g(x)).collect())
    }
}

/// Positive part of a constraint value; NaN counts as an infinite violation.
fn violation(g: f64) -> f64 {
    if g.is_nan() {
        f64::INFINITY
    } else {
        g.max(0.0)
    }
}

/// Componentwise projection onto the box.
pub fn clamp_to_bounds(x: &[f64], space: &SearchSpace) -> Result<Vec<f64>> {
    check_len(space.dim(), x.len())?;
    Ok(x.iter()
        .zip(space.lower().iter().zip(space.upper()))
        .map(|(&v, (&lo, &hi))| hi.min(lo.max(v)))
        .collect())
}

/// Snap discrete dimensions to their grid (ties to even), then re-clamp.
pub fn round_integer_dims(x: &[f64], problem: &Problem) -> Result<Vec<f64>> {
    check_len(problem.dim(), x.len())?;
    let mut out = x.to_vec();
    for d in &problem.discrete {
        out[d.index] = (out[d.index] / d.step).round_ties_even() * d.step;
    }
    clamp_to_bounds(&out, problem.space())
}

/// `objective(x) + PENALTY_WEIGHT * sum(max(0, g_i(x))^2)`.
pub fn penalized_fitness(problem: &Problem, x: &[f64], noise: &mut RngStream) -> Result<f64> {
    let value = problem.objective(x, noise)?;
    let penalty: f64 = problem
        .constraints
        .iter()
        .map(|g| violation(g(x)).powi(2))
        .sum();
    Ok(if penalty > 0.0 { value + PENALTY_WEIGHT * penalty } else { value })
}

/// Total constraint violation `sum(max(0, g_i(x)))`; zero iff feasible.
pub fn constraint_violation(problem: &Problem, x: &[f64]) -> Result<f64> {
    check_len(problem.dim(), x.len())?;
    Ok(problem.constraints.iter().map(|g| violation(g(x))).sum())
}

/// Strict "a is better than b" for minimization. Non-finite values lose to
/// every finite value; NaN never wins.
pub fn is_better(a: f64, b: f64) -> bool {
    match (a.is_nan(), b.is_nan()) {
        (true, _) => false,
        (false, true) => true,
        _ => a < b,
    }
}

/// Initial population: each component drawn uniformly from its bound interval.
pub fn init_population(rng: &mut RngStream, space: &SearchSpace, n: usize) -> Result<Vec<Vec<f64>>> {
    if n == 0 {
        return Err(Error::InvalidConfig("population must be at least 1".into()));
    }
    (0..n)
        .map(|_| {
            space
                .lower()
                .iter()
                .zip(space.upper())
                .map(|(&lo, &hi)| rng.uniform(lo, hi))
                .collect()
        })
        .collect()
}
