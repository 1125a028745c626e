use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sungeo"));
    cmd.env_remove("SUNGEO_TOL");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.trim_end().lines().count(), 1);
    serde_json::from_str(&text).unwrap()
}

fn diag_file(dir: &TempDir, name: &str, phases: &[f64]) -> PathBuf {
    let n = phases.len();
    let rows: Vec<Vec<[f64; 2]>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        [phases[i].cos(), phases[i].sin()]
                    } else {
                        [0.0, 0.0]
                    }
                })
                .collect()
        })
        .collect();
    let path = dir.path().join(name);
    fs::write(
        &path,
        serde_json::json!({ "n": n, "matrix": rows }).to_string(),
    )
    .unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn matrix(v: &Value) -> Vec<Vec<(f64, f64)>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|z| (z[0].as_f64().unwrap(), z[1].as_f64().unwrap()))
                .collect()
        })
        .collect()
}

#[test]
fn dist_identity_to_minus_identity() {
    let dir = TempDir::new().unwrap();
    let i2 = diag_file(&dir, "i2.json", &[0.0, 0.0]);
    let m2 = diag_file(&dir, "m2.json", &[PI, PI]);
    let r = report(&run(&["dist", s(&i2), s(&m2)]));
    assert_eq!(r["command"], "dist");
    assert!((r["outputs"]["distance"].as_f64().unwrap() - PI * 2f64.sqrt()).abs() < 1e-9);
    assert_eq!(r["outputs"]["relative"]["zeta"], 1);
    assert_eq!(r["outputs"]["relative"]["s"], 2);

    let r = report(&run(&["dist", s(&m2), s(&m2)]));
    assert!(r["outputs"]["distance"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn non_unitary_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let i2 = diag_file(&dir, "i2.json", &[0.0, 0.0]);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"n":2,"matrix":[[[1,0],[0.5,0]],[[0,0],[1,0]]]}"#).unwrap();
    let out = run(&["dist", s(&i2), s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("residual"));

    fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["plog", s(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["plog", "/nonexistent/q.json"]).status.code(), Some(2));
}

#[test]
fn log_of_antipodal_pair() {
    let dir = TempDir::new().unwrap();
    let i2 = diag_file(&dir, "i2.json", &[0.0, 0.0]);
    let m2 = diag_file(&dir, "m2.json", &[PI, PI]);
    let r = report(&run(&["log", s(&i2), s(&m2)]));
    assert!((r["outputs"]["norm"].as_f64().unwrap() - PI * 2f64.sqrt()).abs() < 1e-12);
    let x = matrix(&r["outputs"]["matrix"]);
    let mut diag = [x[0][0].1, x[1][1].1];
    diag.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert!((diag[0] + PI).abs() < 1e-12 && (diag[1] - PI).abs() < 1e-12);
    assert!(r["residuals"]["round_trip"].as_f64().unwrap() < 1e-8);

    let r = report(&run(&["log", s(&m2), s(&m2)]));
    assert!(r["outputs"]["norm"].as_f64().unwrap() < 1e-12);
}

#[test]
fn log_random_pair_reports_small_residual() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("p.json");
    let q = dir.path().join("q.json");
    report(&run(&["random", "5", "--seed", "1", "--out", s(&p)]));
    report(&run(&["random", "5", "--seed", "2", "--out", s(&q)]));
    let r = report(&run(&["log", s(&p), s(&q)]));
    assert!(r["residuals"]["round_trip"].as_f64().unwrap() < 1e-8);
    assert!(r["residuals"]["norm_vs_distance"].as_f64().unwrap() < 1e-9);
}

#[test]
fn geo_endpoints_and_midpoint() {
    let dir = TempDir::new().unwrap();
    let i2 = diag_file(&dir, "i2.json", &[0.0, 0.0]);
    let m2 = diag_file(&dir, "m2.json", &[PI, PI]);
    let r = report(&run(&["geo", s(&i2), s(&m2), "--t", "0,0.5,1"]));
    assert_eq!(r["outputs"]["unique"], false);
    assert_eq!(r["outputs"]["grassmannian"], "Gr(1;C^2)");
    let pts = r["outputs"]["points"].as_array().unwrap();
    let expect = [
        [(1.0, 0.0), (1.0, 0.0)],
        [(0.0, 1.0), (0.0, -1.0)],
        [(-1.0, 0.0), (-1.0, 0.0)],
    ];
    for (pt, e) in pts.iter().zip(expect) {
        let m = matrix(&pt["matrix"]);
        for k in 0..2 {
            assert!((m[k][k].0 - e[k].0).abs() < 1e-12 && (m[k][k].1 - e[k].1).abs() < 1e-12);
        }
        assert!(m[0][1].0.abs() < 1e-12 && m[1][0].1.abs() < 1e-12);
    }

    let q = diag_file(&dir, "q.json", &[PI / 2.0, -PI / 2.0]);
    let r = report(&run(&["geo", s(&i2), s(&q), "--t", "1"]));
    assert_eq!(r["outputs"]["unique"], true);
    assert!(r["outputs"]["grassmannian"].is_null());
}

#[test]
fn plog_examples() {
    let dir = TempDir::new().unwrap();
    let m2 = diag_file(&dir, "m2.json", &[PI, PI]);
    let r = report(&run(&["plog", s(&m2)]));
    assert_eq!(r["outputs"]["nonempty"], true);
    assert_eq!(r["outputs"]["grassmannian"], "Gr(1;C^2)");

    let w = diag_file(&dir, "w.json", &[2.0 * PI / 3.0; 3]);
    let r = report(&run(&["plog", s(&w)]));
    assert_eq!(r["outputs"]["nonempty"], false);
    assert_eq!(r["outputs"]["grassmannian"], "empty");

    let i4 = diag_file(&dir, "i4.json", &[0.0; 4]);
    let r = report(&run(&["plog", s(&i4)]));
    assert_eq!(r["outputs"]["nonempty"], true);
    assert_eq!(r["outputs"]["singleton"], true);
}

#[test]
fn diam_examples() {
    let r = report(&run(&["diam", "4"]));
    assert!((r["outputs"]["diameter"].as_f64().unwrap() - 2.0 * PI).abs() < 1e-15);

    let dir = TempDir::new().unwrap();
    let i3 = diag_file(&dir, "i3.json", &[0.0; 3]);
    let r = report(&run(&["diam", "3", "--point", s(&i3)]));
    let pts = r["outputs"]["points"].as_array().unwrap();
    assert_eq!(pts.len(), 2);
    for (pt, sign) in pts.iter().zip([1.0, -1.0]) {
        let m = matrix(pt);
        let a = sign * 2.0 * PI / 3.0;
        for (k, row) in m.iter().enumerate() {
            assert!((row[k].0 - a.cos()).abs() < 1e-14 && (row[k].1 - a.sin()).abs() < 1e-14);
        }
    }

    assert_eq!(run(&["diam", "1"]).status.code(), Some(2));
}

#[test]
fn random_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    let r = report(&run(&["random", "3", "--seed", "7", "--out", s(&a)]));
    report(&run(&["random", "3", "--seed", "7", "--out", s(&b)]));
    report(&run(&["random", "3", "--seed", "8", "--out", s(&c)]));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
    assert!(r["residuals"]["q_unitarity"].as_f64().unwrap() < 1e-12);
    assert!(r["residuals"]["q_det"].as_f64().unwrap() < 1e-12);
    // the written file re-validates at a tight tolerance
    report(&run(&["plog", s(&a), "--tol", "1e-12"]));
}

#[test]
fn theta_samples_minus_identity() {
    let dir = TempDir::new().unwrap();
    let m2 = diag_file(&dir, "m2.json", &[PI, PI]);
    let r = report(&run(&["theta", s(&m2), "--samples", "5", "--seed", "4"]));
    assert_eq!(r["outputs"]["grassmannian"], "Gr(1;C^2)");
    assert_eq!(r["outputs"]["nu1"], 1);
    assert_eq!(r["outputs"]["samples"].as_array().unwrap().len(), 5);
    assert!(r["residuals"]["samples_exp"].as_f64().unwrap() < 1e-9);

    let q = diag_file(&dir, "q.json", &[0.1, 0.2, -0.3]);
    let r = report(&run(&["theta", s(&q)]));
    assert_eq!(r["outputs"]["singleton"], true);
    assert_eq!(
        run(&["theta", s(&q), "--samples", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn oracle_agrees() {
    let dir = TempDir::new().unwrap();
    let q = dir.path().join("q.json");
    report(&run(&["random", "4", "--seed", "11", "--out", s(&q)]));
    let r = report(&run(&["oracle", s(&q)]));
    assert_eq!(r["outputs"]["agree"], true);
    assert_eq!(r["inputs"]["box"], 3);

    let w = diag_file(&dir, "w.json", &[2.0 * PI / 3.0; 3]);
    let r = report(&run(&["oracle", s(&w), "--box", "2"]));
    assert_eq!(r["outputs"]["minimizers"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["oracle", s(&w), "--box", "0"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_4() {
    assert_eq!(run(&[]).status.code(), Some(4));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(run(&["diam"]).status.code(), Some(4));
    assert_eq!(
        run(&["diam", "3", "--tol", "-1", "--point", "x"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn tolerance_precedence() {
    let dir = TempDir::new().unwrap();
    let i2 = diag_file(&dir, "i2.json", &[0.0, 0.0]);
    let r = report(&run(&["plog", s(&i2)]));
    assert_eq!(r["inputs"]["tol"].as_f64().unwrap(), 2e-8);

    let out = bin()
        .env("SUNGEO_TOL", "1e-6")
        .args(["plog", s(&i2)])
        .output()
        .unwrap();
    assert_eq!(report(&out)["inputs"]["tol"].as_f64().unwrap(), 1e-6);

    let out = bin()
        .env("SUNGEO_TOL", "1e-6")
        .args(["plog", s(&i2), "--tol", "1e-10"])
        .output()
        .unwrap();
    assert_eq!(report(&out)["inputs"]["tol"].as_f64().unwrap(), 1e-10);

    let out = bin()
        .env("SUNGEO_TOL", "abc")
        .args(["plog", s(&i2)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // a slightly perturbed identity passes only with a loose tolerance
    let near = dir.path().join("near.json");
    fs::write(
        &near,
        r#"{"n":2,"matrix":[[[1.0000001,0],[0,0]],[[0,0],[0.9999999,0]]]}"#,
    )
    .unwrap();
    assert_eq!(run(&["plog", s(&near)]).status.code(), Some(2));
    report(&run(&["plog", s(&near), "--tol", "1e-5"]));
}
