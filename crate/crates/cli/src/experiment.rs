use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use ratswarm::serde_real;
use ratswarm::stats::{fitness_cmp, summarize, SummaryStats};
use ratswarm::{registry, run, Algorithm, Problem, RunConfig, UpdateRule};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Everything that determines a result file. The output directory is deliberately absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub problems: Vec<String>,
    pub algorithms: Vec<Algorithm>,
    pub population: usize,
    pub iterations: usize,
    pub runs: usize,
    pub base_seed: u64,
    #[serde(default)]
    pub update: UpdateRule,
}

impl Manifest {
    pub fn new(problems: Vec<String>, algorithms: Vec<Algorithm>) -> Self {
        Self {
            problems,
            algorithms,
            population: 30,
            iterations: 500,
            runs: 30,
            base_seed: 0,
            update: UpdateRule::default(),
        }
    }

    /// Checks sizes and canonicalizes problem ids.
    pub fn validate(mut self) -> Result<Self, CliError> {
        if self.runs == 0 {
            return Err(CliError::Usage("--runs must be at least 1".into()));
        }
        if self.problems.is_empty() || self.algorithms.is_empty() {
            return Err(CliError::Usage("need at least one problem and one algorithm".into()));
        }
        self.problems = self
            .problems
            .iter()
            .map(|p| registry::canonical_id(p))
            .collect::<ratswarm::Result<_>>()?;
        self.run_config(Algorithm::Mrso, 0).validate()?;
        Ok(self)
    }

    fn run_config(&self, algorithm: Algorithm, run_index: usize) -> RunConfig {
        RunConfig::new(algorithm, self.base_seed.wrapping_add(run_index as u64))
            .with_population(self.population)
            .with_iterations(self.iterations)
            .with_update(self.update)
    }
}

/// Results of one algorithm on one problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub algorithm: Algorithm,
    pub problem: String,
    pub summary: SummaryStats,
    #[serde(with = "serde_real::reals")]
    pub final_fitnesses: Vec<f64>,
    /// Index of the run whose final position is reported.
    pub best_run: usize,
    #[serde(with = "serde_real::reals")]
    pub best_position: Vec<f64>,
    /// Objective evaluations summed over all runs.
    pub evaluations: u64,
    /// Convergence curve of every run; written to CSV, not to JSON.
    #[serde(skip)]
    pub histories: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub schema_version: u32,
    pub manifest: Manifest,
    pub results: Vec<Entry>,
}

impl ResultFile {
    pub fn entry(&self, algorithm: Algorithm, problem: &str) -> Option<&Entry> {
        self.results.iter().find(|e| e.algorithm == algorithm && e.problem == problem)
    }
}

/// FNV-1a of `"algorithm/problem"`, so each pair has its own random stream.
pub fn stream_id(algorithm: Algorithm, problem: &str) -> u64 {
    format!("{}/{}", algorithm.id(), problem)
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Runs every (algorithm, problem, run) triple on `jobs` threads (0 picks a default).
/// The output does not depend on `jobs`.
pub fn run_experiment(manifest: Manifest, jobs: usize) -> Result<ResultFile, CliError> {
    let manifest = manifest.validate()?;
    let problems: Vec<Problem> = manifest
        .problems
        .iter()
        .map(|id| registry::lookup(id))
        .collect::<ratswarm::Result<_>>()?;

    let tasks: Vec<(usize, usize, usize)> = (0..manifest.algorithms.len())
        .flat_map(|a| (0..problems.len()).map(move |p| (a, p)))
        .flat_map(|(a, p)| (0..manifest.runs).map(move |r| (a, p, r)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
    let records = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(a, p, r)| {
                let algorithm = manifest.algorithms[a];
                let problem = &problems[p];
                let config = manifest.run_config(algorithm, r).with_stream(stream_id(algorithm, problem.name()));
                run(problem, &config)
            })
            .collect::<ratswarm::Result<Vec<_>>>()
    })?;

    let mut results = Vec::with_capacity(tasks.len() / manifest.runs);
    for (chunk, &(a, p, _)) in records.chunks(manifest.runs).zip(tasks.iter().step_by(manifest.runs)) {
        let final_fitnesses: Vec<f64> = chunk.iter().map(|r| r.final_fitness).collect();
        let best_run = (0..chunk.len())
            .min_by(|&i, &j| fitness_cmp(&final_fitnesses[i], &final_fitnesses[j]).then(i.cmp(&j)))
            .expect("runs >= 1");
        results.push(Entry {
            algorithm: manifest.algorithms[a],
            problem: problems[p].name().to_string(),
            summary: summarize(&final_fitnesses)?,
            best_run,
            best_position: chunk[best_run].final_position.clone(),
            evaluations: chunk.iter().map(|r| r.evaluations).sum(),
            histories: chunk.iter().map(|r| r.history.clone()).collect(),
            final_fitnesses,
        });
    }
    Ok(ResultFile { schema_version: SCHEMA_VERSION, manifest, results })
}
