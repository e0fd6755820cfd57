use std::path::Path;
use std::process::{Command, Output};

use ratswarm_cli::report::{suite_table, Format};
use ratswarm_cli::ResultFile;

fn ratswarm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratswarm")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = ratswarm(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn load(dir: &Path) -> ResultFile {
    serde_json::from_slice(&std::fs::read(dir.join("results.json")).unwrap()).unwrap()
}

fn small_run(dir: &Path, algo: &str, problems: &str, jobs: &str) {
    ok(&[
        "run", "--algo", algo, "--problem", problems, "--pop", "10", "--iters", "40", "--runs", "6",
        "--seed", "7", "--jobs", jobs, "--out", dir.to_str().unwrap(),
    ]);
}

#[test]
fn list_is_stable_and_complete() {
    let first = ok(&["list"]);
    assert_eq!(first, ok(&["list"]));
    assert_eq!(first.lines().count(), 29);
    assert!(first.contains("F13 dim=30"));
    assert!(first.lines().last().unwrap().starts_with("welded_beam dim=4"));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let tmp = tempfile::tempdir().unwrap();
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    small_run(&a, "mrso,rso", "f7,gear_train,F19", "1");
    small_run(&b, "mrso,rso", "f7,gear_train,F19", "3");
    for name in ["results.json", "mrso_F7.csv", "rso_gear_train.csv", "summary.md"] {
        assert_eq!(std::fs::read(a.join(name)).unwrap(), std::fs::read(b.join(name)).unwrap(), "{name}");
    }
    let json = std::fs::read_to_string(a.join("results.json")).unwrap();
    assert!(!json.contains(a.to_str().unwrap()));
}

#[test]
fn result_file_shape() {
    let tmp = tempfile::tempdir().unwrap();
    small_run(tmp.path(), "rso", "spring_design", "0");
    let file = load(tmp.path());
    assert_eq!(file.schema_version, 1);
    let entry = &file.results[0];
    assert_eq!(entry.final_fitnesses.len(), 6);
    assert_eq!(entry.evaluations, 6 * 10 * 41);
    assert_eq!(entry.best_position.len(), 3);
    assert_eq!(entry.summary.best, entry.final_fitnesses[entry.best_run]);

    let csv = std::fs::read_to_string(tmp.path().join("rso_spring_design.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("run,iter,best_fitness"));
    let rows: Vec<(usize, usize, f64)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 6 * 40);
    for w in rows.windows(2) {
        if w[0].0 == w[1].0 {
            assert_eq!(w[1].1, w[0].1 + 1);
            assert!(w[1].2 <= w[0].2);
        }
    }
    for (run, fitness) in entry.final_fitnesses.iter().enumerate() {
        assert_eq!(rows[run * 40 + 39].2, *fitness);
    }
}

#[test]
fn table_is_a_view_of_the_json() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ok(&["suite", "--problem", "f9,f5", "--iters", "500", "--runs", "5", "--out", tmp.path().to_str().unwrap()]);
    let file = load(tmp.path());
    assert_eq!(out, suite_table(&file, Format::Md).unwrap());
    assert!(out.starts_with("| Fun | MRSO avg | MRSO std | RSO avg | RSO std | p-value |"));
    let f9 = out.lines().find(|l| l.starts_with("| F9 ")).unwrap();
    assert_eq!(f9, "| F9 | 0.000E+00 | 0.000E+00 | 0.000E+00 | 0.000E+00 | = |");

    let csv = ok(&["suite", "--problem", "f9", "--iters", "500", "--runs", "5", "--format", "csv", "--out", tmp.path().to_str().unwrap()]);
    assert_eq!(csv, "Fun,MRSO avg,MRSO std,RSO avg,RSO std,p-value\nF9,0.000E+00,0.000E+00,0.000E+00,0.000E+00,=\n");
}

#[test]
fn compare_reports() {
    let tmp = tempfile::tempdir().unwrap();
    let (m, r) = (tmp.path().join("m"), tmp.path().join("r"));
    small_run(&m, "mrso", "f1,f12,pressure_vessel", "0");
    small_run(&r, "rso", "f1,f12,pressure_vessel", "0");
    let (mj, rj) = (m.join("results.json"), r.join("results.json"));

    let same = ok(&["compare", mj.to_str().unwrap(), mj.to_str().unwrap()]);
    let rows: Vec<&str> = same.lines().filter(|l| (l.starts_with("| F") || l.starts_with("| p")) && !l.starts_with("| Fun")).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|l| l.contains("| 1.000E+00 |")), "{same}");
    assert!(same.contains("Friedman mean rank over 3 problems: A 1.500, B 1.500"));

    let cross = ok(&["compare", mj.to_str().unwrap(), rj.to_str().unwrap(), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&cross).unwrap();
    assert_eq!(value["rows"].as_array().unwrap().len(), 3);
    assert_eq!(value["rows"][0]["key"], "F1");
}

#[test]
fn compare_picks_algorithms_from_a_suite_file() {
    let tmp = tempfile::tempdir().unwrap();
    small_run(tmp.path(), "mrso,rso", "f2", "0");
    let path = tmp.path().join("results.json");
    let p = path.to_str().unwrap();
    let text = ok(&["compare", p, p, "--algo-a", "mrso", "--algo-b", "rso", "--format", "csv"]);
    assert!(text.starts_with("Fun,A avg,B avg,p-value,method\nF2,"));
    assert_eq!(ok(&["compare", p, p]).lines().filter(|l| l.contains("/F2 |")).count(), 2);
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().to_str().unwrap();
    assert_eq!(ratswarm(&["run", "--algo", "mrso", "--problem", "nosuch", "--out", out]).status.code(), Some(2));
    assert_eq!(ratswarm(&["run", "--algo", "pso", "--problem", "f1", "--out", out]).status.code(), Some(2));
    assert_eq!(ratswarm(&["run", "--algo", "mrso", "--problem", "f1", "--pop", "1", "--out", out]).status.code(), Some(2));
    assert_eq!(ratswarm(&["suite", "--runs", "0", "--out", out]).status.code(), Some(2));
    assert_eq!(ratswarm(&["frobnicate"]).status.code(), Some(2));

    let blocker = tmp.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let nested = blocker.join("out");
    let args = ["run", "--algo", "mrso", "--problem", "f1", "--iters", "2", "--runs", "1", "--out", nested.to_str().unwrap()];
    assert_eq!(ratswarm(&args).status.code(), Some(3));

    let missing = tmp.path().join("missing.json");
    assert_eq!(ratswarm(&["compare", missing.to_str().unwrap(), missing.to_str().unwrap()]).status.code(), Some(3));
    let bad = tmp.path().join("bad.json");
    std::fs::write(&bad, "{\"schema_version\": 1, \"results\": [").unwrap();
    assert_eq!(ratswarm(&["compare", bad.to_str().unwrap(), bad.to_str().unwrap()]).status.code(), Some(4));

    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    small_run(&a, "mrso", "f1", "0");
    small_run(&b, "mrso", "f2", "0");
    let (ja, jb) = (a.join("results.json"), b.join("results.json"));
    assert_eq!(ratswarm(&["compare", ja.to_str().unwrap(), jb.to_str().unwrap()]).status.code(), Some(2));
}
