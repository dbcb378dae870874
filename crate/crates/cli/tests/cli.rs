use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sodlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sodlab")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn every_subcommand_succeeds_on_a_preset() {
    for sub in ["analyze", "partition", "sod", "nccr", "hilbert"] {
        let out = sodlab(&[sub, "--preset", "pfaffian:n=1,h=3"]);
        assert_eq!(out.status.code(), Some(0), "{sub}: {}", String::from_utf8_lossy(&out.stderr));
        let doc = json(&out);
        assert_eq!(doc["subcommand"], sub);
        assert_eq!(doc["tool"]["name"], "sodlab");
        assert_eq!(doc["input"]["representation"]["dim"], 6);
    }
}

#[test]
fn pfaffian_verdicts() {
    let doc = json(&sodlab(&["nccr", "--preset", "pfaffian:n=1,h=3"]));
    let d0 = doc["certificates"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(d0["verdict"], "twisted_nccr");
    assert_eq!(d0["prazno_empty"], true);
    let doc = json(&sodlab(&["nccr", "--preset", "pfaffian:n=1,h=4"]));
    let d0 = doc["certificates"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(d0["prazno_empty"], false);
    assert_eq!(d0["prazno_points"], serde_json::json!([[1]]));
}

#[test]
fn config_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "job.json",
        r#"{
            "group": "SL(2)",
            "representation": {"sum": [{"sym_power": {"of": "standard", "d": 3}}, "trivial"]},
            "r_max": "3/2",
            "box": 6
        }"#,
    );
    let target = dir.path().join("report.json");
    let out = sodlab(&["sod", "--config", &cfg, "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let stdout = sodlab(&["sod", "--config", &cfg]).stdout;
    assert_eq!(written.as_bytes(), stdout.as_slice());
    let doc: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(doc["frontier"]["r_max"], "3/2");
    assert_eq!(doc["components"].as_array().unwrap().last().unwrap()["is_d0"], true);
}

#[test]
fn malformed_configuration_exits_two_without_report() {
    let dir = tempfile::tempdir().unwrap();
    for text in [
        "{ not json",
        r#"{"group": "E8", "representation": "standard"}"#,
        r#"{"group": "SL(2)", "representation": "standard", "shift": ["1"]}"#,
        r#"{"group": "Sp(2)", "representation": "standard", "r_max": "x"}"#,
        r#"{"preset": "pfaffian:n=2,h=4"}"#,
    ] {
        let cfg = write(dir.path(), "bad.json", text);
        let out = sodlab(&["sod", "--config", &cfg]);
        assert_eq!(out.status.code(), Some(2), "{text}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(sodlab(&["sod", "--config", "/nonexistent/job.json"]).status.code(), Some(2));
    assert_eq!(sodlab(&["sod", "--preset", "e8"]).status.code(), Some(2));
    assert_eq!(sodlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn missing_stable_point_exits_three_with_destabilizer() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "unstable.json",
        r#"{"group": "Torus(2)", "representation": {"weights": [{"weight": ["1", "0"]}, {"weight": ["-1", "0"]}, {"weight": ["0", "1"]}]}}"#,
    );
    let out = sodlab(&["sod", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(3));
    let doc = json(&out);
    assert_eq!(doc["analysis"]["t_stable_point"], false);
    assert_eq!(doc["analysis"]["destabilizer"]["sigma"], serde_json::json!([0, -1]));
    assert_eq!(doc["error"]["kind"], "no_t_stable_point");
    assert!(doc.get("components").is_none());
    let out = sodlab(&["analyze", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    for preset in ["toric", "determinantal:1,2", "sl2:1,2"] {
        let a = sodlab(&["sod", "--preset", preset]).stdout;
        let b = sodlab(&["sod", "--preset", preset]).stdout;
        assert_eq!(a, b, "{preset}");
        let doc: Value = serde_json::from_slice(&a).unwrap();
        assert_eq!(sodlab::render_json(&doc).as_bytes(), a.as_slice());
    }
}

#[test]
fn text_rendering_tabulates_components() {
    let out = sodlab(&["sod", "--preset", "toric", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("components (7)"));
    assert!(text.lines().any(|l| l.starts_with("index") && l.contains("|L|") && l.contains("algebra")));
    assert!(text.contains("(End(V(-1)⊕V(0)⊕V(1)) ⊗ Sym k^4)^{T1}"));
}

#[test]
fn quasi_symmetric_mode_reports_refinement() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "qs.json", r#"{"preset": "pfaffian:n=1,h=3", "mode": "quasi_symmetric"}"#);
    let doc = json(&sodlab(&["sod", "--config", &cfg]));
    let d0 = doc["components"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(d0["window"], serde_json::json!([[0]]));
    assert_eq!(d0["algebra"]["text"], "(Sym k^6)^{A1}");
    assert!(!doc["refinement"].as_array().unwrap().is_empty());
    let conflict = sodlab(&["sod", "--config", &cfg, "--preset", "toric"]);
    assert_eq!(conflict.status.code(), Some(2));
}
