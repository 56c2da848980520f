use std::path::Path;
use std::process::{Command, Output};

fn pursuit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .current_dir(dir)
        .env_remove("PURSUIT_BUDGET_STATES")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn toroidal_grid_needs_three_cops() {
    let dir = tempfile::tempdir().unwrap();
    let o = pursuit(
        dir.path(),
        &[
            "generate",
            "--family",
            "toroidal-grid",
            "--rows",
            "3",
            "--cols",
            "5",
            "-o",
            "g.json",
        ],
    );
    assert!(o.status.success());
    let o = pursuit(dir.path(), &["copnumber", "g.json", "--max-k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3");
}

#[test]
fn one_cop_loses_on_c4() {
    let dir = tempfile::tempdir().unwrap();
    pursuit(
        dir.path(),
        &["generate", "--family", "cycle", "--n", "4", "-o", "c4.json"],
    );
    let o = pursuit(dir.path(), &["copnumber", "c4.json", "--max-k", "1"]);
    assert_eq!(stdout(&o), "exceeds 1");
    let o = pursuit(dir.path(), &["--json", "copnumber", "c4.json", "--max-k", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cop_number"], 2);
    assert_eq!(v["schema"], "pursuit.copnumber/1");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(pursuit(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        pursuit(dir.path(), &["copnumber", "missing.json", "--max-k", "1"])
            .status
            .code(),
        Some(2)
    );
    pursuit(dir.path(), &["generate", "--family", "petersen", "-o", "p.json"]);
    let o = pursuit(
        dir.path(),
        &["--max-states", "10", "copnumber", "p.json", "--max-k", "3"],
    );
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .current_dir(dir.path())
        .env("PURSUIT_BUDGET_STATES", "10")
        .args(["copnumber", "p.json", "--max-k", "3"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    // Petersen is not dismantlable: contract error.
    assert_eq!(
        pursuit(dir.path(), &["verify", "capture", "p.json", "--cops", "copwin"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn config_file_sets_budget_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    pursuit(dir.path(), &["generate", "--family", "petersen", "-o", "p.json"]);
    std::fs::write(dir.path().join("b.conf"), "# tight\nmax_states = 10\n").unwrap();
    let o = pursuit(
        dir.path(),
        &["--config", "b.conf", "copnumber", "p.json", "--max-k", "3"],
    );
    assert_eq!(o.status.code(), Some(3));
    let o = pursuit(
        dir.path(),
        &[
            "--config",
            "b.conf",
            "--max-states",
            "100000000",
            "copnumber",
            "p.json",
            "--max-k",
            "3",
        ],
    );
    assert_eq!(stdout(&o), "3");
}

#[test]
fn simulate_writes_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    pursuit(
        dir.path(),
        &[
            "generate", "--family", "grid", "--rows", "3", "--cols", "3", "-o", "g.json",
        ],
    );
    let o = pursuit(
        dir.path(),
        &[
            "simulate", "g.json", "--cops", "optimal", "--robber", "optimal", "--trace", "t.json",
        ],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = pursuit(dir.path(), &["verify", "trace", "t.json"]);
    assert_eq!(o.status.code(), Some(0));
    let mut t: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("t.json")).unwrap()).unwrap();
    t["robber_placement"] = serde_json::json!(99);
    std::fs::write(dir.path().join("bad.json"), t.to_string()).unwrap();
    assert_eq!(
        pursuit(dir.path(), &["verify", "trace", "bad.json"]).status.code(),
        Some(1)
    );
}

#[test]
fn guard_npath_on_petersen() {
    let dir = tempfile::tempdir().unwrap();
    pursuit(dir.path(), &["generate", "--family", "petersen", "-o", "p.json"]);
    let o = pursuit(dir.path(), &["verify", "guard-npath", "p.json", "--path", "0,1,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("valid"));
}

#[test]
fn checks_and_refutation() {
    let dir = tempfile::tempdir().unwrap();
    pursuit(
        dir.path(),
        &["generate", "--family", "cycle", "--n", "5", "-o", "c5.json"],
    );
    let o = pursuit(dir.path(), &["--json", "check", "subdivision", "c5.json", "-d", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (v["lhs"].as_u64(), v["mid"].as_u64(), v["holds"].as_bool()),
        (Some(2), Some(2), Some(true))
    );
    assert_eq!(
        pursuit(dir.path(), &["check", "linegraph", "c5.json"]).status.code(),
        Some(0)
    );
    assert_eq!(
        pursuit(dir.path(), &["check", "refute-string", "c5.json"])
            .status
            .code(),
        Some(0)
    );
    pursuit(
        dir.path(),
        &[
            "generate",
            "--family",
            "projective-incidence",
            "--q",
            "17",
            "-o",
            "pi.json",
        ],
    );
    let o = pursuit(dir.path(), &["check", "refute-string", "pi.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not a string graph"));
}

#[test]
fn filament_representation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = pursuit(
        dir.path(),
        &["rep", "random", "--n", "6", "--seed", "4", "-o", "r.json"],
    );
    assert!(o.status.success());
    assert_eq!(pursuit(dir.path(), &["rep", "check", "r.json"]).status.code(), Some(0));
    let o = pursuit(dir.path(), &["rep", "graph", "r.json"]);
    let g: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(g["n"], 6);
    assert!(pursuit(dir.path(), &["rep", "envelope", "r.json"]).status.success());
    let o = pursuit(
        dir.path(),
        &["verify", "capture", "--cops", "filament", "--rep", "r.json"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // Two filaments touching at a single point.
    let bad = r#"{"filaments": [
        {"vertex": 0, "points": [["0","0"],["2","2"],["4","0"]]},
        {"vertex": 1, "points": [["1","0"],["2","2"],["3","0"]]}]}"#;
    std::fs::write(dir.path().join("bad.json"), bad).unwrap();
    assert_eq!(
        pursuit(dir.path(), &["rep", "check", "bad.json"]).status.code(),
        Some(1)
    );
}

#[test]
fn reproduce_claims() {
    let dir = tempfile::tempdir().unwrap();
    let o = pursuit(dir.path(), &["reproduce", "filament-two-cops"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS filament-two-cops"));
    assert_eq!(
        pursuit(dir.path(), &["reproduce", "no-such-claim"]).status.code(),
        Some(2)
    );
    let o = pursuit(dir.path(), &["--json", "reproduce", "--list"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["claims"].as_array().unwrap().len(), 10);
}
