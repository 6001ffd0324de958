//! End-to-end runs of the `shiftcolor` binary: instance generation,
//! verification, oracles, workloads and engine runs, including the exit-code
//! and output-file contracts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shiftcolor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("shiftcolor-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn lower_bound_instance_round_trips_through_verify_and_oracle() {
    let inst = tmp("lb.txt");
    let out = run(&[
        "gen-instance",
        "lower-bound",
        "--n",
        "60",
        "--delta",
        "4",
        "--c",
        "1",
        "--alpha",
        "1",
        "--out",
        inst.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&inst).unwrap();
    assert!(text.contains("# L=3"));
    assert!(text.contains("# floor=1"));

    let verify = run(&["verify", "--instance", inst.to_str().unwrap()]);
    assert!(verify.status.success());
    assert_eq!(String::from_utf8_lossy(&verify.stdout).trim(), "ok");

    let oracle = run(&[
        "oracle",
        "min",
        "--instance",
        inst.to_str().unwrap(),
        "--budget",
        "4",
    ]);
    assert!(oracle.status.success());
    let line = String::from_utf8_lossy(&oracle.stdout);
    let k: usize = line
        .trim()
        .strip_prefix("exact ")
        .expect("exact answer")
        .parse()
        .unwrap();
    assert!(k >= 1);
    std::fs::remove_file(inst).ok();
}

#[test]
fn separation_oracles_expose_the_gap() {
    let inst = tmp("sep.txt");
    assert!(run(&[
        "gen-instance",
        "separation",
        "--n",
        "24",
        "--delta",
        "3",
        "--c",
        "0",
        "--q",
        "1",
        "--out",
        inst.to_str().unwrap(),
    ])
    .status
    .success());
    let min = run(&[
        "oracle",
        "min",
        "--instance",
        inst.to_str().unwrap(),
        "--budget",
        "6",
    ]);
    assert_eq!(String::from_utf8_lossy(&min.stdout).trim(), "exact 2");
    let shift = run(&[
        "oracle",
        "min-shift",
        "--instance",
        inst.to_str().unwrap(),
        "--budget",
        "40",
    ]);
    let line = String::from_utf8_lossy(&shift.stdout);
    let k: usize = line
        .trim()
        .strip_prefix("exact ")
        .expect("exact answer")
        .parse()
        .unwrap();
    assert!(k > 2);
    std::fs::remove_file(inst).ok();
}

#[test]
fn run_emits_csv_with_aggregates_and_honors_seeds() {
    let args = [
        "run",
        "--n",
        "60",
        "--delta",
        "7",
        "--c",
        "5",
        "--ops",
        "400",
        "--engine",
        "large-palette",
        "--b",
        "auto",
        "--model",
        "random-cap",
        "--seed",
        "5",
        "--verify-every",
        "50",
    ];
    let a = run(&args);
    assert!(a.status.success());
    let text = String::from_utf8_lossy(&a.stdout).to_string();
    assert!(text.starts_with("index,kind,u,v,recolored,path_len,tree_depth,nanos\n"));
    assert!(text.contains("# aggregates {"));
    assert!(text.contains("\"violations\":0"));

    let b = run(&args);
    // Timing columns differ between runs; the op streams must not.
    let strip = |s: &str| {
        s.lines()
            .map(|l| l.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default())
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&text), strip(&String::from_utf8_lossy(&b.stdout)));
}

#[test]
fn workload_file_feeds_replay_runs() {
    let wl = tmp("ops.txt");
    assert!(run(&[
        "gen-workload",
        "--n",
        "50",
        "--delta",
        "5",
        "--ops",
        "200",
        "--model",
        "forest",
        "--delete-ratio",
        "0.2",
        "--seed",
        "3",
        "--out",
        wl.to_str().unwrap(),
    ])
    .status
    .success());
    let text = std::fs::read_to_string(&wl).unwrap();
    assert!(text.lines().count() == 200);
    assert!(text.lines().all(|l| l.starts_with("insert") || l.starts_with("delete")));

    let run_out = run(&[
        "run",
        "--n",
        "50",
        "--delta",
        "5",
        "--c",
        "2",
        "--engine",
        "adaptive-no-handler",
        "--workload-file",
        wl.to_str().unwrap(),
        "--format",
        "json",
        "--verify-every",
        "20",
    ]);
    assert!(run_out.status.success());
    let json: serde_json::Value =
        serde_json::from_slice(&run_out.stdout).expect("valid json metrics");
    assert_eq!(json["aggregates"]["ops"], 200);
    assert_eq!(json["aggregates"]["violations"], 0);
    std::fs::remove_file(wl).ok();
}

#[test]
fn failures_exit_nonzero_with_an_error_line() {
    let out = run(&[
        "run",
        "--n",
        "30",
        "--delta",
        "6",
        "--c",
        "4",
        "--ops",
        "10",
        "--engine",
        "large-palette",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error: "), "stderr was: {err}");

    let missing = run(&["verify", "--instance", "/nonexistent/instance.txt"]);
    assert!(!missing.status.success());
}

#[test]
fn out_dir_env_var_supplies_default_directory() {
    let dir = tmp("outdir");
    std::fs::create_dir_all(&dir).unwrap();
    let out = bin()
        .env("SHIFTCOLOR_OUT_DIR", &dir)
        .args([
            "gen-instance",
            "lower-bound",
            "--n",
            "60",
            "--delta",
            "4",
            "--c",
            "1",
            "--alpha",
            "1",
            "--out",
            "inst.txt",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("inst.txt").exists());
    std::fs::remove_dir_all(dir).ok();
}
