use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_schlicht-scope"));
    c.env_remove("SCHLICHT_SCOPE_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn schlicht-scope")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn divergence_csv_rows() {
    let o = run(&["divergence", "--fn", "z-over-1-minus-z", "--depth", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k,t,value\n1,0.5,3\n2,0.75,7\n3,0.875,15\n");
}

#[test]
fn refute_json_report() {
    let o = run(&["refute", "--p", "0.5", "--target", "100", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lower_bound"], 100.0);
    assert_eq!(v["kind"], "bloch");
    assert_eq!(v["witness"]["radius"], 100.0);
    assert_eq!(v["witness"]["schlicht"], true);
    assert!(v["witness"]["center"].as_array().unwrap().len() == 2);
}

#[test]
fn constants_match_library() {
    let o = run(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lib = serde_json::to_value(schlicht_core::radius::classical_constants()).unwrap();
    assert_eq!(v, lib);
}

#[test]
fn exit_code_contract() {
    assert_eq!(run(&["refute", "--p", "1.5"]).status.code(), Some(2));
    assert_eq!(run(&["two-pole", "--p", "0.5", "--mu-re", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["divergence", "--fn", "identity"]).status.code(), Some(2));
    assert_eq!(run(&["refute", "--p", "abc"]).status.code(), Some(64));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(run(&["seminorm", "--grid-radial"]).status.code(), Some(64));
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn tolerance_override_and_numerical_failure() {
    let ok = run(&["map-verify"]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    let strict = bin().args(["map-verify"]).env("SCHLICHT_SCOPE_TOL", "1e-30").output().unwrap();
    assert_eq!(strict.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&strict.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let bad = bin().args(["map-verify"]).env("SCHLICHT_SCOPE_TOL", "tight").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let cert = bin().args(["refute", "--p", "0.5"]).env("SCHLICHT_SCOPE_TOL", "1e-3").output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&cert.stdout).unwrap();
    assert_eq!(v["certificate"]["tolerance"], 1e-3);
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = run(&["two-pole", "--p", "0.3", "--mu-re", "0.6", "--target", "100", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn radius_of_domain_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("omega.json");
    std::fs::write(&path, r#"{"kind":"slit_disk","radial_slits":[{"angle":0.0,"inner":0.5}],"curve_slits":[]}"#).unwrap();
    let o = run(&["radius", "--domain-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = v["largest"]["disk"]["radius"].as_f64().unwrap();
    assert!((r - 0.75).abs() < 1e-3, "{r}");

    std::fs::write(&path, r#"{"kind":"half_plane","alpha":3.0}"#).unwrap();
    assert_eq!(run(&["radius", "--domain-file", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(run(&["radius", "--domain-file", path.to_str().unwrap()]).status.code(), Some(2));

    let o = run(&["radius", "--domain", "moebius-image", "--p", "0.5", "--target", "1000"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["largest"], "unbounded");
    assert_eq!(v["witness"]["radius"], 1000.0);
}

#[test]
fn function_bound_and_seminorm() {
    let o = run(&["radius", "--fn", "z-over-1-minus-z", "--grid-outer", "0.999"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["lower_bound"].as_f64().unwrap() >= 433.0);
    let o = run(&["seminorm", "--fn", "identity", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("value,1\n"));
}

#[test]
fn map_eval_values() {
    let o = run(&["map-eval", "--map", "koebe", "--z-re", "0.5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 0.5 / 2.25).abs() < 1e-15);
    let o = run(&["map-eval", "--map", "psi", "--p", "0.3", "--q", "0.6", "--z-re", "-0.2054794520547945"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 0.6).abs() < 1e-12);
    assert_eq!(run(&["map-eval", "--map", "eta", "--p", "0.5", "--z-re", "1.0"]).status.code(), Some(2));
    assert_eq!(run(&["map-eval", "--map", "two-slit", "--p", "0.5"]).status.code(), Some(2));
}
