use std::path::PathBuf;
use std::process::{Command, Output};

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

fn ein3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ein3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_config(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("config.json");
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn classify_tori_reports_kind_and_eta() {
    let tori = config("tori.json");
    let path = tori.to_str().unwrap();
    let o = ein3(&["classify-tori", path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "eta=0 kind=timelike carrier=(1,2,0)\n");

    let o = ein3(&["classify-tori", path, "--torus", "t1", "--torus", "t3"]);
    assert!(stdout(&o).contains("kind=spacelike carrier=(2,1,0)"));

    let o = ein3(&["classify-tori", path, "--torus", "t1", "--torus", "t4"]);
    assert!(stdout(&o).starts_with("eta=1 kind=photon-pair carrier=(1,1,1)"));

    let o = ein3(&["classify-tori", path, "--torus", "t2", "--torus", "t2"]);
    assert_eq!(stdout(&o), "eta=1 kind=equal\n");
}

#[test]
fn classify_tori_reports_both_paths_for_a_graph() {
    let o = ein3(&["classify-tori", config("graph.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("eta=0.5 kind=timelike"), "{out}");
    assert!(out.contains("eta_mu=0.5 eta_det=0.5 agree=true"), "{out}");
}

#[test]
fn check_crooked_exit_codes() {
    let ads = config("ads.json");
    let o = ein3(&["check-crooked", ads.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains(" margin=")).count(), 16);
    assert!(out.ends_with("disjoint=true\n"));

    let o = ein3(&["check-crooked", ads.to_str().unwrap(), "--quad", "c1", "--quad", "c1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("disjoint=false\n"));
    assert!(stderr(&o).contains("ambiguous within tolerance"));
}

#[test]
fn near_touching_surfaces_warn() {
    let dir = tempfile::tempdir().unwrap();
    // the canonical surface against a copy sheared by 1e-12
    let path = write_config(
        &dir,
        r#"{"objects": [
            {"name": "a", "kind": "quad", "canonical": true},
            {"name": "b", "kind": "quad", "canonical": true,
             "transform": [[1, 0, 1e-12, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}
        ]}"#,
    );
    let o = ein3(&["check-crooked", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ambiguous within tolerance"));
}

#[test]
fn check_ads_agreement() {
    let o = ein3(&["check-ads", config("ads.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("ads_disjoint=true") && out.contains("dgk_disjoint=true"));
    assert!(out.contains("crooked_disjoint=true") && out.ends_with("agree=true\n"));

    let dir = tempfile::tempdir().unwrap();
    let path = write_config(
        &dir,
        r#"{"objects": [
            {"name": "p", "kind": "ads_plane", "base": [[1, 0], [0, 1]], "a": [1, 0], "b": [0, 1]},
            {"name": "q", "kind": "ads_plane", "base": [[3, 0], [0, 0.3333333333333333]], "a": [1, 1], "b": [1, -1]},
            {"name": "r", "kind": "ads_plane", "base": [[1, 0], [0, 1]], "a": [1, 1], "b": [1, -1]}
        ]}"#,
    );
    for planes in [["p", "q"], ["p", "r"]] {
        let o = ein3(&["check-ads", &path, "--plane", planes[0], "--plane", planes[1]]);
        assert_eq!(o.status.code(), Some(1), "{planes:?}");
        assert!(stdout(&o).ends_with("agree=true\n"));
    }
}

#[test]
fn check_photon_examples() {
    let photon = config("photon.json");
    let path = photon.to_str().unwrap();
    let o = ein3(&["check-photon", path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disjoint=true"));
    let o = ein3(&["check-photon", path, "--photon", "hit"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness region="));
}

#[test]
fn sample_writes_csv_and_ply() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("cloud.csv");
    let tori = config("tori.json");
    let o = ein3(&["sample", tori.to_str().unwrap(), "--count", "50", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,z,label"));
    let rows: Vec<&str> = lines.collect();
    // points on the light cone of the improper point are dropped and counted
    let dropped: usize = stderr(&o)
        .split_whitespace()
        .nth(1)
        .map_or(0, |n| n.parse().unwrap());
    assert_eq!(rows.len() + dropped, 100);
    assert!(rows.iter().all(|r| r.ends_with(":torus") && r.split(',').count() == 4));

    let ply = dir.path().join("cloud.ply");
    let ads = config("ads.json");
    let args = ["sample", ads.to_str().unwrap(), "--count", "40", "--format", "ply", "--out", ply.to_str().unwrap()];
    assert_eq!(ein3(&args).status.code(), Some(0));
    let text = std::fs::read_to_string(&ply).unwrap();
    assert!(text.starts_with("ply\nformat ascii 1.0\n"));
    let header_end = text.find("end_header\n").unwrap();
    assert!(text[..header_end].contains("comment label 0 c1:wing+"));
    let body = text[header_end..].lines().skip(1).count();
    assert!(text.contains(&format!("element vertex {body}\n")));
}

#[test]
fn sample_is_seeded() {
    let ads = config("ads.json");
    let run = |seed: &str| stdout(&ein3(&["sample", ads.to_str().unwrap(), "--count", "20", "--seed", seed]));
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(&dir, r#"{"objects": [{"name": "t", "kind": "torus", "normal": [0, 0, 1, 0, 0]}]}"#);
    let o = ein3(&["classify-tori", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    assert!(o.stdout.is_empty());

    let o = ein3(&["classify-tori", "/nonexistent/config.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ein3(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ein3(&["classify-tori"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_suite_prints_one_json_line() {
    let o = ein3(&["verify", "--suite", "maslov-causal", "--trials", "50", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let report: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report["suite"], "maslov-causal");
    assert_eq!(report["trial_count"], 50);
    assert_eq!(report["seed"], 3);
    assert!(report["failures"].as_array().unwrap().is_empty());
    assert_eq!(report["passed"], true);
}
