//! The Rat Swarm Optimizer (RSO) and its modified variant (MRSO).
//!
//! Both algorithms share the same loop. Per iteration one set of
//! coefficients is drawn, then every rat in index order moves relative to the
//! current best position, is clamped back into the box and is evaluated. A
//! strictly better rat replaces the global best immediately, so later rats in
//! the same iteration move relative to the updated best.
//!
//! The variants differ only in the `A` coefficient:
//!
//! * RSO: `A = R - t * R / T`
//! * MRSO: `A = F1 * F2 * F3` with `F1 = R - (t - 1) * R / T`,
//!   `F2 = 1 - t / T` and `F3 = 2 * u1 - u2`.
//!
//! Two position updates are available, see [`UpdateRule`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::problem::{clamp_to_bounds, init_population, is_better, penalized_fitness, round_integer_dims, Problem};
use crate::rng::RngStream;

/// Label of the per-run stream that feeds noisy objectives.
const NOISE_STREAM: u64 = 0x006e_6f69_7365;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Rso,
    Mrso,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Mrso, Algorithm::Rso];

    /// Lowercase identifier used on the command line and in result files.
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Rso => "rso",
            Algorithm::Mrso => "mrso",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Rso => "RSO",
            Algorithm::Mrso => "MRSO",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rso" => Ok(Algorithm::Rso),
            "mrso" => Ok(Algorithm::Mrso),
            _ => Err(Error::InvalidConfig(format!("unknown algorithm `{s}`"))),
        }
    }
}

/// How a rat's next position is formed from its position `x`, the best
/// position `g` and the iteration coefficients.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UpdateRule {
    /// `|g - (A*x + C*(g - x))|` componentwise, one `C` per iteration.
    /// Positions never go negative before clamping.
    Pseudocode,
    /// `g - (A*x + |C_j*(g_j - x_j)|)` with a fresh `C_j` in `[0, 2)` per rat
    /// and component. This is the update of the reference RSO code.
    #[default]
    Reference,
}

impl UpdateRule {
    pub const ALL: [UpdateRule; 2] = [UpdateRule::Reference, UpdateRule::Pseudocode];

    pub fn id(self) -> &'static str {
        match self {
            UpdateRule::Pseudocode => "pseudocode",
            UpdateRule::Reference => "reference",
        }
    }
}

impl fmt::Display for UpdateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for UpdateRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pseudocode" => Ok(UpdateRule::Pseudocode),
            "reference" => Ok(UpdateRule::Reference),
            _ => Err(Error::InvalidConfig(format!("unknown update rule `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub population: usize,
    pub max_iterations: usize,
    pub seed: u64,
    /// Stream id of the run's generator; runs differing only here are independent.
    pub stream: u64,
    pub algorithm: Algorithm,
    #[serde(default)]
    pub update: UpdateRule,
}

impl RunConfig {
    pub const DEFAULT_POPULATION: usize = 30;
    pub const DEFAULT_ITERATIONS: usize = 500;

    pub fn new(algorithm: Algorithm, seed: u64) -> Self {
        Self {
            population: Self::DEFAULT_POPULATION,
            max_iterations: Self::DEFAULT_ITERATIONS,
            seed,
            stream: 0,
            algorithm,
            update: UpdateRule::default(),
        }
    }

    pub fn with_population(mut self, n: usize) -> Self {
        self.population = n;
        self
    }

    pub fn with_iterations(mut self, t: usize) -> Self {
        self.max_iterations = t;
        self
    }

    pub fn with_stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    pub fn with_update(mut self, update: UpdateRule) -> Self {
        self.update = update;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::InvalidConfig(format!(
                "population must be at least 2, got {}",
                self.population
            )));
        }
        if self.max_iterations < 1 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

/// Per-iteration scalars of the chase update.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub r: f64,
    pub c: f64,
    pub a: f64,
    /// `(F1, F2, F3)` for MRSO, `None` for RSO.
    pub factors: Option<[f64; 3]>,
}

impl Coefficients {
    /// RSO schedule from already drawn `r` and `c`.
    pub fn rso(r: f64, c: f64, t: usize, max_iterations: usize) -> Self {
        let remaining = (max_iterations - t.min(max_iterations)) as f64;
        let a = r * (remaining / max_iterations as f64);
        Self { r, c, a, factors: None }
    }

    /// MRSO schedule from already drawn `r`, `u1`, `u2` and `c`.
    pub fn mrso(r: f64, u1: f64, u2: f64, c: f64, t: usize, max_iterations: usize) -> Self {
        let t_max = max_iterations as f64;
        let remaining = (max_iterations - t.min(max_iterations)) as f64;
        let f1 = r * ((remaining + 1.0) / t_max);
        let f2 = remaining / t_max;
        let f3 = 2.0 * u1 - u2;
        Self { r, c, a: f1 * f2 * f3, factors: Some([f1, f2, f3]) }
    }
}

/// Draws `R` then `C` and applies the RSO schedule. `t` runs from 1 to `max_iterations`.
pub fn draw_coefficients_rso(rng: &mut RngStream, t: usize, max_iterations: usize) -> Coefficients {
    let r = 1.0 + 4.0 * rng.unit();
    let c = 2.0 * rng.unit();
    Coefficients::rso(r, c, t, max_iterations)
}

/// Draws `R`, `u1`, `u2`, `C` in that order and applies the MRSO schedule.
pub fn draw_coefficients_mrso(rng: &mut RngStream, t: usize, max_iterations: usize) -> Coefficients {
    let r = 1.0 + 4.0 * rng.unit();
    let u1 = rng.unit();
    let u2 = rng.unit();
    let c = 2.0 * rng.unit();
    Coefficients::mrso(r, u1, u2, c, t, max_iterations)
}

pub fn draw_coefficients(
    algorithm: Algorithm,
    rng: &mut RngStream,
    t: usize,
    max_iterations: usize,
) -> Coefficients {
    match algorithm {
        Algorithm::Rso => draw_coefficients_rso(rng, t, max_iterations),
        Algorithm::Mrso => draw_coefficients_mrso(rng, t, max_iterations),
    }
}

/// `A * position + C * (gbest - position)`.
pub fn chase(position: &[f64], gbest: &[f64], coeff: &Coefficients) -> Result<Vec<f64>> {
    check_len(position.len(), gbest.len())?;
    Ok(position
        .iter()
        .zip(gbest)
        .map(|(&x, &g)| coeff.a * x + coeff.c * (g - x))
        .collect())
}

/// Componentwise `|gbest - p|`.
pub fn fight(gbest: &[f64], p: &[f64]) -> Result<Vec<f64>> {
    check_len(gbest.len(), p.len())?;
    Ok(gbest.iter().zip(p).map(|(g, v)| (g - v).abs()).collect())
}

/// Reference-code move: `g - (A*x + |C_j*(g_j - x_j)|)`, one `C_j` per component.
pub fn reference_move(position: &[f64], gbest: &[f64], a: f64, c: &[f64]) -> Result<Vec<f64>> {
    check_len(position.len(), gbest.len())?;
    check_len(position.len(), c.len())?;
    Ok(position
        .iter()
        .zip(gbest)
        .zip(c)
        .map(|((&x, &g), &cj)| g - (a * x + (cj * (g - x)).abs()))
        .collect())
}

/// Mutable state of one swarm.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub positions: Vec<Vec<f64>>,
    pub fitness: Vec<f64>,
    /// Best position in search coordinates; this is what the rats chase.
    pub gbest: Vec<f64>,
    /// `gbest` after discrete dimensions are snapped, i.e. the point actually evaluated.
    pub gbest_evaluated: Vec<f64>,
    pub gbest_fitness: f64,
    pub t: usize,
    pub evaluations: u64,
}

impl SwarmState {
    /// Samples `n` rats, evaluates them and picks the first best as gbest.
    pub fn initialize(problem: &Problem, n: usize, rng: &mut RngStream, noise: &mut RngStream) -> Result<Self> {
        let positions = init_population(rng, problem.space(), n)?;
        let mut fitness = Vec::with_capacity(n);
        let mut best = 0;
        let mut best_point = Vec::new();
        for (i, x) in positions.iter().enumerate() {
            let point = round_integer_dims(x, problem)?;
            let f = penalized_fitness(problem, &point, noise)?;
            if i == 0 || is_better(f, fitness[best]) {
                best = i;
                best_point = point;
            }
            fitness.push(f);
        }
        Ok(Self {
            gbest: positions[best].clone(),
            gbest_evaluated: best_point,
            gbest_fitness: fitness[best],
            positions,
            fitness,
            t: 0,
            evaluations: n as u64,
        })
    }
}

/// Moves every rat once with the given coefficients.
///
/// `rng` supplies the per-component `C` draws of [`UpdateRule::Reference`]
/// (rat by rat, component by component) and is untouched otherwise.
pub fn step(
    state: &mut SwarmState,
    problem: &Problem,
    coeff: &Coefficients,
    rule: UpdateRule,
    rng: &mut RngStream,
    noise: &mut RngStream,
) -> Result<()> {
    let dim = problem.dim();
    let mut c = vec![0.0; dim];
    for i in 0..state.positions.len() {
        let moved = match rule {
            UpdateRule::Pseudocode => fight(&state.gbest, &chase(&state.positions[i], &state.gbest, coeff)?)?,
            UpdateRule::Reference => {
                c.iter_mut().for_each(|cj| *cj = 2.0 * rng.unit());
                reference_move(&state.positions[i], &state.gbest, coeff.a, &c)?
            }
        };
        let next = clamp_to_bounds(&moved, problem.space())?;
        let point = round_integer_dims(&next, problem)?;
        let f = penalized_fitness(problem, &point, noise)?;
        state.evaluations += 1;
        state.fitness[i] = f;
        if is_better(f, state.gbest_fitness) {
            state.gbest.clone_from(&next);
            state.gbest_evaluated = point;
            state.gbest_fitness = f;
        }
        state.positions[i] = next;
    }
    state.t += 1;
    Ok(())
}

/// Outcome of one seeded run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: RunConfig,
    /// Best fitness after each iteration.
    #[serde(with = "crate::serde_real::reals")]
    pub history: Vec<f64>,
    #[serde(with = "crate::serde_real::reals")]
    pub final_position: Vec<f64>,
    #[serde(with = "crate::serde_real::real")]
    pub final_fitness: f64,
    pub evaluations: u64,
}

pub fn run(problem: &Problem, config: &RunConfig) -> Result<RunRecord> {
    run_with_observer(problem, config, |_| {})
}

/// Like [`run`], calling `observer` after initialization and after every iteration.
pub fn run_with_observer<F>(problem: &Problem, config: &RunConfig, mut observer: F) -> Result<RunRecord>
where
    F: FnMut(&SwarmState),
{
    config.validate()?;
    let mut rng = RngStream::with_stream(config.seed, config.stream);
    let mut noise = rng.fork(NOISE_STREAM);
    let mut state = SwarmState::initialize(problem, config.population, &mut rng, &mut noise)?;
    observer(&state);

    let t_max = config.max_iterations;
    let mut history = Vec::with_capacity(t_max);
    for t in 1..=t_max {
        let coeff = draw_coefficients(config.algorithm, &mut rng, t, t_max);
        step(&mut state, problem, &coeff, config.update, &mut rng, &mut noise)?;
        history.push(state.gbest_fitness);
        observer(&state);
    }

    Ok(RunRecord {
        config: config.clone(),
        final_fitness: state.gbest_fitness,
        final_position: state.gbest_evaluated,
        evaluations: state.evaluations,
        history,
    })
}
