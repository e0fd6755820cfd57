use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use ratswarm::{registry, Algorithm, UpdateRule};

use crate::error::CliError;
use crate::experiment::{run_experiment, Manifest};
use crate::output::{read_results, write_file, write_results};
use crate::report::{compare, comparison_text, list_text, suite_table, Format};

#[derive(Debug, Parser)]
#[command(name = "ratswarm", version, about = "Seeded experiments with the rat swarm optimizers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every registered problem.
    List,
    /// Run selected algorithms on selected problems.
    Run {
        #[arg(long, value_delimiter = ',', required = true)]
        algo: Vec<Algorithm>,
        #[arg(long, value_delimiter = ',', required = true)]
        problem: Vec<String>,
        #[command(flatten)]
        batch: BatchArgs,
    },
    /// Run both algorithms on every problem and print the summary table.
    Suite {
        /// Restrict the battery to these problems.
        #[arg(long, value_delimiter = ',')]
        problem: Vec<String>,
        #[command(flatten)]
        batch: BatchArgs,
    },
    /// Compare two result files problem by problem.
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Only use this algorithm's entries from the first file.
        #[arg(long)]
        algo_a: Option<Algorithm>,
        /// Only use this algorithm's entries from the second file.
        #[arg(long)]
        algo_b: Option<Algorithm>,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    #[arg(long, default_value_t = 30)]
    pub pop: usize,
    #[arg(long, default_value_t = 500)]
    pub iters: usize,
    #[arg(long, default_value_t = 30)]
    pub runs: usize,
    /// Run `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "results")]
    pub out: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Format of the summary printed to stdout.
    #[arg(long, value_enum, default_value = "md")]
    pub format: Format,
    #[arg(long, default_value = "reference")]
    pub update: UpdateRule,
}

impl BatchArgs {
    fn manifest(&self, problems: Vec<String>, algorithms: Vec<Algorithm>) -> Manifest {
        Manifest {
            population: self.pop,
            iterations: self.iters,
            runs: self.runs,
            base_seed: self.seed,
            update: self.update,
            ..Manifest::new(problems, algorithms)
        }
    }
}

fn batch(out: &mut dyn Write, args: &BatchArgs, manifest: Manifest) -> Result<(), CliError> {
    let file = run_experiment(manifest, args.jobs)?;
    write_results(&args.out, &file)?;
    let table = suite_table(&file, args.format)?;
    if args.format != Format::Json {
        let ext = if args.format == Format::Md { "md" } else { "csv" };
        write_file(&args.out.join(format!("summary.{ext}")), &table)?;
    }
    emit(out, &table)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::List => emit(out, &list_text()),
        Command::Run { algo, problem, batch: args } => {
            let manifest = args.manifest(problem, algo);
            batch(out, &args, manifest)
        }
        Command::Suite { problem, batch: args } => {
            let problems = if problem.is_empty() { registry::problem_ids() } else { problem };
            let manifest = args.manifest(problems, vec![Algorithm::Mrso, Algorithm::Rso]);
            batch(out, &args, manifest)
        }
        Command::Compare { file_a, file_b, algo_a, algo_b, format } => {
            let a = read_results(&file_a)?;
            let b = read_results(&file_b)?;
            let comparison = compare(&a, &b, algo_a, algo_b)?;
            emit(out, &comparison_text(&comparison, format)?)
        }
    }
}
