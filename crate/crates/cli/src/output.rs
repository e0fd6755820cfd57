use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CliError;
use crate::experiment::{Entry, ResultFile};
use crate::report::json_string;

pub const RESULT_FILE: &str = "results.json";
pub const CSV_HEADER: &str = "run,iter,best_fitness";

pub fn csv_name(entry: &Entry) -> String {
    format!("{}_{}.csv", entry.algorithm.id(), entry.problem)
}

/// Convergence curves, one row per run and iteration.
pub fn curves_csv(entry: &Entry) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (run, history) in entry.histories.iter().enumerate() {
        for (i, f) in history.iter().enumerate() {
            writeln!(out, "{run},{},{f}", i + 1).unwrap();
        }
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Writes `results.json` and one curve CSV per entry into `dir`, returning the JSON path.
pub fn write_results(dir: &Path, file: &ResultFile) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let json_path = dir.join(RESULT_FILE);
    write_file(&json_path, &json_string(file)?)?;
    for entry in &file.results {
        write_file(&dir.join(csv_name(entry)), &curves_csv(entry))?;
    }
    Ok(json_path)
}

pub fn read_results(path: &Path) -> Result<ResultFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let malformed = |reason: String| CliError::Malformed { path: path.to_path_buf(), reason };
    let file: ResultFile = serde_json::from_str(&text).map_err(|e| malformed(e.to_string()))?;
    if file.results.iter().any(|e| e.final_fitnesses.is_empty()) {
        return Err(malformed("entry without final fitnesses".into()));
    }
    Ok(file)
}
