//! End-to-end tests of the command-line interface.

use std::path::Path;
use std::process::{Command, Output};

fn spindepth() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spindepth"));
    cmd.env_remove("SPINDEPTH_CACHE");
    cmd
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn write_dicke_record(path: &Path, n: u64, two_j: u32) {
    let nj = n as f64 * two_j as f64 / 2.0;
    let rec = format!(
        r#"{{"N":{n},"two_j":{two_j},"var_Jx":0.0,"mean_Jy":0.0,"mean_Jz":0.0,"second_moment_perp":{}}}"#,
        nj * (nj + 1.0)
    );
    std::fs::write(path, rec).unwrap();
}

#[test]
fn curve_outputs_are_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");

    let run1 = run(spindepth()
        .args(["curve", "--two-j", "2,6", "--format", "json"])
        .arg("--curve-cache")
        .arg(&cache)
        .arg("--out")
        .arg(&out1));
    assert!(run1.status.success());
    let stderr1 = String::from_utf8_lossy(&run1.stderr);
    assert!(stderr1.contains("4 computed"), "cold run: {stderr1}");

    let run2 = run(spindepth()
        .args(["curve", "--two-j", "2,6", "--format", "json"])
        .arg("--curve-cache")
        .arg(&cache)
        .arg("--out")
        .arg(&out2));
    assert!(run2.status.success());
    let stderr2 = String::from_utf8_lossy(&run2.stderr);
    assert!(stderr2.contains("0 computed"), "warm run must not recompute: {stderr2}");

    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "warm rerun must be byte-identical");
}

#[test]
fn env_var_overrides_cache_flag() {
    let dir = tempfile::tempdir().unwrap();
    let env_cache = dir.path().join("from-env");
    let flag_cache = dir.path().join("from-flag");
    let out = run(spindepth()
        .args(["curve", "--two-j", "2"])
        .arg("--curve-cache")
        .arg(&flag_cache)
        .env("SPINDEPTH_CACHE", &env_cache)
        .arg("--out")
        .arg(dir.path().join("c.json")));
    assert!(out.status.success());
    assert!(env_cache.read_dir().unwrap().next().is_some());
    assert!(!flag_cache.exists());
}

#[test]
fn depth_certifies_dicke_state() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("dicke.jsonl");
    write_dicke_record(&input, 30, 1);
    let out = run(spindepth()
        .args(["depth", "--criterion", "nonlinear"])
        .arg("--input")
        .arg(&input));
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(row["certified_depth"], 30);
    assert_eq!(row["max_k_violated"], 29);
}

#[test]
fn evaluate_emits_one_row_per_criterion_and_k() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("dicke.jsonl");
    write_dicke_record(&input, 12, 2);
    let out = run(spindepth()
        .args(["evaluate", "--criterion", "xi2", "--k-range", "2:6"])
        .arg("--input")
        .arg(&input));
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["violated"] == true));
}

#[test]
fn exit_codes_follow_the_contract() {
    // usage error: 2 (unknown flag, via clap)
    let out = run(spindepth().args(["curve", "--definitely-not-a-flag"]));
    assert_eq!(out.status.code(), Some(2));

    // usage error: 2 (missing input file)
    let out = run(spindepth().args(["depth", "--input", "/nonexistent.jsonl"]));
    assert_eq!(out.status.code(), Some(2));

    // inapplicable for every requested k: 4 (ξ²_SM on an unpolarized record)
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("dicke.jsonl");
    write_dicke_record(&input, 12, 1);
    let out = run(spindepth()
        .args(["evaluate", "--criterion", "xi2-sm", "--k-range", "2:6"])
        .arg("--input")
        .arg(&input));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn boundary_tangent_touches_the_curve_at_its_foot() {
    let out = run(spindepth().args([
        "boundary", "--N", "200", "--two-j", "1", "--k", "20", "--format", "csv",
    ]));
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut solid: Vec<(f64, f64)> = Vec::new();
    let mut tangent: Vec<(f64, f64)> = Vec::new();
    let mut duan = 0;
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let smp: f64 = cols[2].parse().unwrap();
        let var: f64 = cols[3].parse().unwrap();
        match cols[1] {
            "nonlinear" => solid.push((smp, var)),
            "xi2_tangent" => tangent.push((smp, var)),
            "duan" => duan += 1,
            other => panic!("unexpected curve tag {other}"),
        }
    }
    assert!(duan > 0, "qubit ensembles get the Duan line");
    // both start at (Nj(kj+1), 0) = (1100, 0)
    assert!((solid[0].0 - 1100.0).abs() < 1e-9 && solid[0].1.abs() < 1e-9);
    assert!((tangent[0].0 - 1100.0).abs() < 1e-9 && tangent[0].1.abs() < 1e-9);
    // tangency: the boundary approaches the line quadratically, so at the
    // first few samples the relative residual is tiny
    let slope = (tangent[1].1 - tangent[0].1) / (tangent[1].0 - tangent[0].0);
    for &(smp, var) in solid.iter().take(5).skip(1) {
        let line = slope * (smp - 1100.0);
        assert!(
            (var - line).abs() <= 0.02 * var.max(1e-12),
            "tangent misses the curve near its foot: {var} vs {line}"
        );
        assert!(var + 1e-12 >= line, "boundary must lie above its tangent");
    }
    // endpoint arithmetic: solid curve tops out at 10100
    let last = solid.last().unwrap();
    assert!((last.0 - 10100.0).abs() < 1e-6);
}

#[test]
fn fluctuating_delta_ensemble_matches_fixed_n_run() {
    let dir = tempfile::tempdir().unwrap();
    let record = dir.path().join("rec.jsonl");
    std::fs::write(
        &record,
        r#"{"N":24,"two_j":1,"var_Jx":0.4,"mean_Jx":0.1,"mean_Jy":1.0,"mean_Jz":6.0,"second_moment_perp":120.0}"#,
    )
    .unwrap();
    let bins = dir.path().join("bins.json");
    std::fs::write(
        &bins,
        r#"{"two_j":1,"bins":[{"N":24,"Q":1.0,"var_jx":0.4,"mean_jz":6.0,"second_moment_perp":120.0,"mean_jx":0.1,"mean_jy":1.0}]}"#,
    )
    .unwrap();

    let fixed = run(spindepth()
        .args(["evaluate", "--criterion", "xi2", "--k", "4"])
        .arg("--input")
        .arg(&record));
    assert!(fixed.status.success());
    let fluct = run(spindepth()
        .args(["fluctuating", "--two-j", "1", "--criterion", "xi2", "--k", "4"])
        .arg("--input")
        .arg(&bins));
    assert!(fluct.status.success());

    let fixed_row: serde_json::Value =
        serde_json::from_str(String::from_utf8(fixed.stdout).unwrap().lines().next().unwrap())
            .unwrap();
    let fluct_row: serde_json::Value =
        serde_json::from_str(String::from_utf8(fluct.stdout).unwrap().lines().next().unwrap())
            .unwrap();
    assert_eq!(fixed_row["lhs"], fluct_row["lhs"]);
    assert_eq!(fixed_row["violated"], fluct_row["violated"]);
}

#[test]
fn simulate_is_deterministic() {
    let args = [
        "simulate", "--N", "20", "--mu-min", "0.1", "--mu-max", "100", "--points", "7",
        "--noise", "decohere:2", "--format", "csv",
    ];
    let a = run(spindepth().args(args));
    let b = run(spindepth().args(args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 8); // header + 7 rows
    assert!(text.starts_with("mu,mean_Jz,var_Jx,var_ratio,depth_nonlinear,depth_sm"));
}
