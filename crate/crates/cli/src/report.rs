use std::fmt::Write;

use serde::Serialize;

use ratswarm::benchmarks::ClassicalId;
use ratswarm::serde_real;
use ratswarm::stats::{wilcoxon_rank_sum, RankTable, TestMethod};
use ratswarm::{registry, Algorithm, Problem};

use crate::error::CliError;
use crate::experiment::{Entry, ResultFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Scientific notation with three decimals and a signed two-digit exponent: `8.160E-01`.
pub fn fmt_sci(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:.3E}");
    let (mantissa, exp) = s.split_once('E').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

fn fmt_bounds(values: &[f64]) -> String {
    if values.iter().all(|v| *v == values[0]) {
        values[0].to_string()
    } else {
        let parts: Vec<String> = values.iter().map(f64::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

fn list_line(problem: &Problem) -> String {
    let space = problem.space();
    let mut line = format!(
        "{} dim={} lower={} upper={}",
        problem.name(),
        problem.dim(),
        fmt_bounds(space.lower()),
        fmt_bounds(space.upper())
    );
    if let Some(best) = problem.known_best() {
        let key = if problem.name().parse::<ClassicalId>().is_ok() { "f_min" } else { "known_best" };
        write!(line, " {key}={best}").unwrap();
    }
    if problem.constraint_count() > 0 {
        write!(line, " constraints={}", problem.constraint_count()).unwrap();
    }
    line
}

/// One line per registered problem, in registry order.
pub fn list_text() -> String {
    registry::all_problems().iter().map(|p| list_line(p) + "\n").collect()
}

/// `"="` when both samples hold one repeated value, otherwise the rank-sum p-value.
pub fn p_value_cell(a: &[f64], b: &[f64]) -> Result<String, CliError> {
    let first = a.first().or(b.first()).copied();
    if a.iter().chain(b).all(|v| Some(*v) == first || (v.is_nan() && first.is_some_and(f64::is_nan))) {
        return Ok("=".to_string());
    }
    Ok(fmt_sci(wilcoxon_rank_sum(a, b)?.p_value))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteRow {
    pub problem: String,
    pub mrso: Option<(f64, f64)>,
    pub rso: Option<(f64, f64)>,
    pub p_value: Option<String>,
}

/// Summary rows in manifest problem order, computed only from the result file.
pub fn suite_rows(file: &ResultFile) -> Result<Vec<SuiteRow>, CliError> {
    let stats = |e: Option<&Entry>| e.map(|e| (e.summary.mean, e.summary.std));
    file.manifest
        .problems
        .iter()
        .map(|problem| {
            let mrso = file.entry(Algorithm::Mrso, problem);
            let rso = file.entry(Algorithm::Rso, problem);
            let p_value = match (mrso, rso) {
                (Some(m), Some(r)) => Some(p_value_cell(&m.final_fitnesses, &r.final_fitnesses)?),
                _ => None,
            };
            Ok(SuiteRow { problem: problem.clone(), mrso: stats(mrso), rso: stats(rso), p_value })
        })
        .collect()
}

const SUITE_HEADER: [&str; 6] = ["Fun", "MRSO avg", "MRSO std", "RSO avg", "RSO std", "p-value"];

fn suite_cells(row: &SuiteRow) -> Vec<String> {
    let pair = |s: Option<(f64, f64)>| match s {
        Some((mean, std)) => [fmt_sci(mean), fmt_sci(std)],
        None => ["-".to_string(), "-".to_string()],
    };
    let mut cells = vec![row.problem.clone()];
    cells.extend(pair(row.mrso));
    cells.extend(pair(row.rso));
    cells.push(row.p_value.clone().unwrap_or_else(|| "-".to_string()));
    cells
}

fn markdown(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out += &format!("|{}\n", "---|".repeat(header.len()));
    for row in rows {
        out += &format!("| {} |\n", row.join(" | "));
    }
    out
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",") + "\n";
    for row in rows {
        out += &(row.join(",") + "\n");
    }
    out
}

pub fn suite_table(file: &ResultFile, format: Format) -> Result<String, CliError> {
    let rows: Vec<Vec<String>> = suite_rows(file)?.iter().map(suite_cells).collect();
    Ok(match format {
        Format::Md => markdown(&SUITE_HEADER, &rows),
        Format::Csv => csv(&SUITE_HEADER, &rows),
        Format::Json => json_string(file)?,
    })
}

pub fn json_string<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub key: String,
    #[serde(with = "serde_real::real")]
    pub mean_a: f64,
    #[serde(with = "serde_real::real")]
    pub mean_b: f64,
    #[serde(with = "serde_real::real")]
    pub p_value: f64,
    pub method: TestMethod,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
    pub ranks: RankTable,
}

/// Keys entries by problem when the file holds one algorithm, else by `algorithm/problem`.
fn keyed(file: &ResultFile, only: Option<Algorithm>) -> Vec<(String, &Entry)> {
    let entries: Vec<&Entry> = file.results.iter().filter(|e| only.is_none_or(|a| e.algorithm == a)).collect();
    let single = entries.iter().all(|e| e.algorithm == entries[0].algorithm);
    entries
        .into_iter()
        .map(|e| {
            let key = if single { e.problem.clone() } else { format!("{}/{}", e.algorithm.id(), e.problem) };
            (key, e)
        })
        .collect()
}

/// Rank-sum test per shared key and Friedman mean ranks of the two files.
pub fn compare(
    a: &ResultFile,
    b: &ResultFile,
    algo_a: Option<Algorithm>,
    algo_b: Option<Algorithm>,
) -> Result<Comparison, CliError> {
    let right = keyed(b, algo_b);
    let mut rows = Vec::new();
    for (key, ea) in keyed(a, algo_a) {
        let Some((_, eb)) = right.iter().find(|(k, _)| *k == key) else { continue };
        let test = wilcoxon_rank_sum(&ea.final_fitnesses, &eb.final_fitnesses)?;
        rows.push(ComparisonRow {
            key,
            mean_a: ea.summary.mean,
            mean_b: eb.summary.mean,
            p_value: test.p_value,
            method: test.method,
        });
    }
    if rows.is_empty() {
        return Err(CliError::Usage("the two result files share no problems".into()));
    }
    let means = vec![rows.iter().map(|r| r.mean_a).collect(), rows.iter().map(|r| r.mean_b).collect()];
    let ranks = RankTable::compute(vec!["A".into(), "B".into()], &means)?;
    Ok(Comparison { rows, ranks })
}

pub fn comparison_text(c: &Comparison, format: Format) -> Result<String, CliError> {
    let header = ["Fun", "A avg", "B avg", "p-value", "method"];
    let rows: Vec<Vec<String>> = c
        .rows
        .iter()
        .map(|r| {
            let method = match r.method {
                TestMethod::Exact => "exact",
                TestMethod::Normal => "normal",
            };
            vec![r.key.clone(), fmt_sci(r.mean_a), fmt_sci(r.mean_b), fmt_sci(r.p_value), method.into()]
        })
        .collect();
    let ranks = format!(
        "Friedman mean rank over {} problems: A {:.3}, B {:.3}\n",
        c.rows.len(),
        c.ranks.mean_ranks[0],
        c.ranks.mean_ranks[1]
    );
    Ok(match format {
        Format::Md => markdown(&header, &rows) + "\n" + &ranks,
        Format::Csv => csv(&header, &rows),
        Format::Json => json_string(c)?,
    })
}
