use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn higgs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_higgs"))
        .args(args)
        .env_remove("HIGGS_SEED")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("higgs-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn criterion_on_the_quintic() {
    let doc = json_of(&higgs(&["criterion", "--surface", "hypersurface:5", "-r", "2", "--c1", "1", "--c2", "3"]));
    assert_eq!(doc["command"], "criterion");
    assert_eq!(doc["exact"], true);
    let p = &doc["payload"];
    assert_eq!(p["regime"], "Generic");
    assert_eq!(p["c2_gbun"], "0");
    assert_eq!(p["n_points"], 3);
    // 2δ − c1 = L, so δ = H on the quintic
    assert_eq!(p["delta"], serde_json::json!([1]));
    assert_eq!(p["discriminant"], 4 * 3 - 5);
}

#[test]
fn empty_fiber_is_a_successful_answer() {
    let out = higgs(&["criterion", "--surface", "hypersurface:5", "-r", "2", "--c1", "1", "--c2", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["regime"], "Empty");
    assert!(doc["payload"]["delta"].is_null());
}

#[test]
fn no_delta_solution_is_reported() {
    // r = 2, c1 = 0 on P^2: 2δ = L has no integral solution
    let doc = json_of(&higgs(&["criterion", "--surface", "p2", "-r", "2", "--c1", "0", "--c2", "4"]));
    assert_eq!(doc["payload"]["regime"], "NoDeltaSolution");
}

#[test]
fn boundary_regime_lists_graded_pieces() {
    // c2 = c2_gbun = 0 for r = 2, c1 = H on the quintic
    let doc = json_of(&higgs(&["criterion", "--surface", "hypersurface:5", "-r", "2", "--c1", "1", "--c2", "0"]));
    assert_eq!(doc["payload"]["regime"], "Boundary");
    assert!(doc["payload"]["boundary_graded_c1"].is_array());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = higgs(&["criterion", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn validation_errors_exit_two() {
    let out = higgs(&["criterion", "--surface", "p1xp1", "-r", "2", "--c1", "1", "--c2", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = higgs(&["surface", "--surface", "hypersurface:0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ragged_surface_file_is_rejected() {
    let path = temp_file(
        "ragged.json",
        r#"{"name":"x","ns_rank":1,"gram":[[5],[1]],"canonical":[1],"polarization":[1],"c2_top":55}"#,
    );
    let out = higgs(&["surface", "--surface", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).to_lowercase().contains("parse"));
}

#[test]
fn surface_file_round_trips_through_the_surface_command() {
    let path = temp_file(
        "quintic.json",
        r#"{"name":"quintic","ns_rank":1,"gram":[[5]],"canonical":[1],"polarization":[1],"c2_top":55}"#,
    );
    let from_file = json_of(&higgs(&["surface", "--surface", path.to_str().unwrap()]));
    let preset = json_of(&higgs(&["surface", "--surface", "hypersurface:5"]));
    assert_eq!(from_file["payload"]["chi_o"], 5);
    for key in ["gram", "canonical", "polarization", "c2_top", "k_squared", "todd"] {
        assert_eq!(from_file["payload"][key], preset["payload"][key], "{key}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["branches", "--surface", "hypersurface:5", "-r", "3", "--c1", "0", "--c2", "8"];
    let a = higgs(&args);
    let b = higgs(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn envelope_round_trips() {
    for args in [
        vec!["surface", "--surface", "p1xp1"],
        vec!["ybundle", "--surface", "hypersurface:6", "-r", "3"],
        vec!["spectral", "--surface", "hypersurface:5", "-r", "2"],
        vec!["grr", "--surface", "p2", "-r", "3", "--delta", "-1", "--points", "4"],
    ] {
        let out = higgs(&args);
        let doc = json_of(&out);
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(again.as_bytes(), out.stdout.as_slice(), "{args:?}");
        assert_eq!(doc["exact"], true);
    }
}

#[test]
fn spectral_quintic_double_cover() {
    let p = json_of(&higgs(&["spectral", "--surface", "hypersurface:5", "-r", "2"]))["payload"].clone();
    assert_eq!(p["chi_structure_sheaf"], "15");
    assert_eq!(p["chi_noether"], "15");
    assert_eq!(p["canonical_squared"], "40");
    assert_eq!(p["euler_number"], "140");
}

#[test]
fn ybundle_adjunction_holds() {
    for r in ["1", "2", "5"] {
        let p = json_of(&higgs(&["ybundle", "--surface", "p2", "-r", r]))["payload"].clone();
        assert_eq!(p["adjunction_holds"], true);
        assert_eq!(p["eta_cubed_degree"], "1");
    }
}

#[test]
fn grr_euler_characteristics_agree() {
    let p = json_of(&higgs(&["grr", "--surface", "hypersurface:5", "-r", "3", "--delta", "2", "--points", "7"]))
        ["payload"]
        .clone();
    assert_eq!(p["chi_agree"], true);
    assert_eq!(p["rank"], "3");
}

#[test]
fn rank_two_fixed_components() {
    let p = json_of(&higgs(&["branches", "--surface", "hypersurface:5", "--rank2", "--c2", "3"]))["payload"].clone();
    assert_eq!(p["components"], serde_json::json!([[3, 0], [2, 1]]));
    let out = higgs(&["branches", "--surface", "hypersurface:5", "--rank2", "--c2", "-2"]);
    assert_eq!(json_of(&out)["payload"]["regime"], "Empty");
}

#[test]
fn branches_needs_rank_without_rank2() {
    let out = higgs(&["branches", "--surface", "p2", "--c2", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_every_suite_with_seed() {
    let out = Command::new(env!("CARGO_BIN_EXE_higgs"))
        .args(["verify", "--suite", "all"])
        .env("HIGGS_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["payload"]["seed"], 17);
    let suites = doc["payload"]["suites"].as_array().unwrap();
    assert!(suites.len() >= 7);
    for s in suites {
        assert_eq!(s["passed"], true, "{s}");
        assert!(s["checks"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_rejects_unknown_suite() {
    assert_eq!(higgs(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn table_format_is_flat() {
    let out = higgs(&["--format", "table", "criterion", "--surface", "hypersurface:5", "-r", "2", "--c1", "1", "--c2", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("payload.regime") && l.ends_with("Generic")));
}
