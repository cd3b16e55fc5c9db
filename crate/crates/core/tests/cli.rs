use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zeros_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros_10k.txt")
}

fn run(args: &[&str]) -> Output {
    run_env(args, None)
}

fn run_env(args: &[&str], cache_dir: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zeta-explicit"));
    cmd.arg("--zeros").arg(zeros_path()).args(args);
    match cache_dir {
        Some(d) => cmd.env("ZETA_EXPLICIT_CACHE_DIR", d),
        None => cmd.env_remove("ZETA_EXPLICIT_CACHE_DIR"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn full_verify_passes() {
    let o = run(&["verify"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.len() >= 12);
    for v in &lines {
        for key in [
            "name",
            "lhs",
            "rhs",
            "residual",
            "tolerance",
            "pass",
            "params",
            "notes",
        ] {
            assert!(v.get(key).is_some(), "missing {key} in {v}");
        }
        assert_eq!(v["pass"], Value::Bool(true), "{v}");
        assert!(v["residual"].as_f64().unwrap() < v["tolerance"].as_f64().unwrap());
    }
}

#[test]
fn single_suite() {
    let o = run(&["verify", "--suite", "tau_square_sum"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("0.02310499"), "{out}");
}

#[test]
fn unknown_suite_is_usage_error() {
    let o = run(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failing_identity_exits_one() {
    // 20 zeros cannot make e^{-gamma_K/50} small enough
    let o = run(&[
        "--max-zeros",
        "20",
        "verify",
        "--suite",
        "cramer_expansion_order0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["pass"], Value::Bool(false));
    assert!(v["error"].as_str().unwrap().contains("zero"));
}

#[test]
fn missing_zeros_file() {
    let o = Command::new(env!("CARGO_BIN_EXE_zeta-explicit"))
        .args(["--zeros", "/nonexistent/zeros.txt", "verify"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/zeros.txt"));
}

#[test]
fn mangoldt_grid_rows() {
    let o = run(&["reconstruct", "mangoldt", "2", "26", "0.05"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("t,reconstructed,reference"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 481);
    let first: Vec<f64> = rows[0].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(first[0], 2.0);
    assert!((first[1] - 2f64.ln()).abs() < 0.05);
    assert!(!out.contains('\r'));
}

#[test]
fn bad_steps_and_ranges() {
    assert_eq!(
        run(&["reconstruct", "mangoldt", "2", "26", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "--arith-bound",
            "1000",
            "reconstruct",
            "mangoldt",
            "2",
            "2000",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    let o = run(&[
        "--arith-bound",
        "1000",
        "reconstruct",
        "mangoldt",
        "2",
        "900",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        run(&["reconstruct", "zeta", "2", "3", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let a = run(&["reconstruct", "staircase", "25", "30", "0.25"]);
    let b = run(&["reconstruct", "staircase", "25", "30", "0.25"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["verify"]);
    let b = run(&["verify"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_grid_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("grid.json");
    let o = run(&[
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
        "reconstruct",
        "mangoldt",
        "2",
        "3",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["t_values"].as_array().unwrap().len(), 3);
    assert_eq!(v["reference"][0].as_f64(), Some(2f64.ln()));
}

#[test]
fn config_file_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "suite = [\"constant_a\", \"logderiv_half\"]\nx = 3.1\n",
    )
    .unwrap();
    let c = cfg.to_str().unwrap();

    let o = run(&["--config", c, "verify"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("\"x\":3.1"));

    let o = run(&[
        "--config",
        c,
        "--suite",
        "constant_a",
        "--x",
        "3.0",
        "verify",
    ]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("\"x\":3.0"));

    std::fs::write(&cfg, "colour = 1\n").unwrap();
    assert_eq!(run(&["--config", c, "verify"]).status.code(), Some(2));
}

#[test]
fn constants_rows() {
    let o = run(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let get = |name: &str| {
        rows.iter()
            .find(|r| r["name"] == name)
            .unwrap_or_else(|| panic!("{name}"))["value"]
            .as_f64()
            .unwrap()
    };
    assert!((get("constant_a") + 0.759578).abs() < 1e-5);
    assert!((get("logderiv_half_closed") - get("logderiv_half_numeric")).abs() < 1e-8);
    assert!((get("inverse_square_sum") - 0.02310499).abs() < 5e-5);
    assert!(rows
        .iter()
        .all(|r| r["method"].is_string() && r["truncation"].is_string()));

    let o = run(&["--format", "csv", "constants"]);
    assert!(stdout(&o).starts_with("name,value,method,truncation\n"));
}

#[test]
fn cache_dir_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_env(
        &["--max-zeros", "40", "reconstruct", "moebius", "2", "6", "1"],
        Some(dir.path()),
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert_eq!(names.len(), 2, "{names:?}");
    assert!(names.iter().any(|n| n.ends_with(".inv_zeta_prime.txt")));
    assert!(names.iter().any(|n| n.ends_with(".phi_ratio.txt")));

    // a second run reads the sidecars and reproduces the output
    let again = run_env(
        &["--max-zeros", "40", "reconstruct", "moebius", "2", "6", "1"],
        Some(dir.path()),
    );
    assert_eq!(o.stdout, again.stdout);
}
