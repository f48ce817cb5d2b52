use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn singlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = singlab(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn corpus_file(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn brieskorn_355() {
    let v = json(&["brieskorn", "3", "5", "5"]);
    assert_eq!(v["pg"], 3);
    assert_eq!(v["br"], 3);
    assert_eq!(v["a_invariant"], 20);
    let text = String::from_utf8(singlab(&["brieskorn", "3", "5", "5"]).stdout).unwrap();
    assert!(text.contains("p_g = 3") && text.contains("br(m) = 3"), "{text}");
}

#[test]
fn brieskorn_rejects_unsorted_exponents() {
    assert_eq!(singlab(&["brieskorn", "5", "3", "5"]).status.code(), Some(1));
}

#[test]
fn graph_analyze_reports_invariants() {
    let v = json(&["graph", "analyze", &corpus_file("fig244_1.json")]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["chi_fundamental"], 0);
    assert_eq!(v["numerically_gorenstein"], true);
    assert_eq!(v["fundamental_cycle"]["E1"], 1);
    assert_eq!(v["canonical_cycle"]["E1"]["num"], -2);
    assert_eq!(v["canonical_cycle"]["E1"]["den"], 1);
    assert_eq!(v["matrix"][1][1], -2);
}

#[test]
fn classify_fig2312_1() {
    let v = json(&["classify", &corpus_file("fig2312_1.json"), "--pg", "2"]);
    assert_eq!(v["zeta"], 1);
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["af"], serde_json::json!([1, 2]));
    assert_eq!(v["ideals"][0]["t"], 1);
    assert_eq!(v["ideals"][0]["colength"], 1);
    assert_eq!(v["ideals"][0]["kind"], "strongly-elliptic");
}

#[test]
fn classify_takes_pg_from_equation() {
    let v = json(&[
        "classify",
        &corpus_file("fig2312_1.json"),
        "--weights",
        "9,6,1",
        "--poly",
        "x^2+y^3+z^18",
    ]);
    assert_eq!(v["pg"], 3);
    assert_eq!(v["maximal"], true);
    assert_eq!(v["zeta"], 0);
}

#[test]
fn no_char0_refuses_non_maximal_case() {
    let out = singlab(&["classify", &corpus_file("fig2312_1.json"), "--pg", "2", "--no-char0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic zero"));
    // the maximal case is accepted in any characteristic
    let out = singlab(&["classify", &corpus_file("fig244_1.json"), "--pg", "2", "--no-char0"]);
    assert!(out.status.success());
}

#[test]
fn elliptic_sequence_json_shape() {
    let v = json(&["elliptic", "sequence", &corpus_file("fig2312_2.json")]);
    assert_eq!(v["m"], 4);
    for key in ["Z", "B", "C", "Cprime"] {
        assert_eq!(v[key].as_array().unwrap().len(), 5, "{key}");
    }
    assert_eq!(v["Emin"]["E4"], 1);
    assert_eq!(v["checks"]["-K = C_m"], true);
}

#[test]
fn wh_and_artinian() {
    assert_eq!(json(&["wh", "--weights", "7,3,2", "--poly", "x^2+z(z^6+y^4)"])["pg"], 2);
    let v = json(&["artinian", "colength", "--poly", "x^2+z(z^10+y^4)", "--ideal", "x,y,z^2"]);
    assert_eq!(v["colength"], 2);
    let v = json(&["artinian", "colength", "--poly", "x^2+y^4+z^8", "--ideal", "y,z^2", "--saturate"]);
    assert_eq!(v["colength"], 4);
}

#[test]
fn syntax_errors_exit_one() {
    let out = singlab(&["wh", "--weights", "7,3,2", "--poly", "x^2+"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 4"));
    assert_eq!(singlab(&["wh", "--weights", "7,3", "--poly", "x"]).status.code(), Some(1));
    assert_eq!(singlab(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn invalid_graphs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let positive = write_temp(&dir, "pos.json", r#"{"vertices":[{"id":"A","self":1}]}"#);
    let out = singlab(&["graph", "analyze", positive.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("negative definite"));

    let broken = write_temp(&dir, "broken.json", "{\"vertices\": [");
    let out = singlab(&["graph", "analyze", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("broken.json"));

    let missing = dir.path().join("missing.json");
    assert_eq!(singlab(&["graph", "analyze", missing.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn non_elliptic_graph_has_no_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write_temp(
        &dir,
        "a2.json",
        r#"{"vertices":[{"id":"A","self":-2},{"id":"B","self":-2}],"edges":[{"ends":["A","B"]}]}"#,
    );
    let v = json(&["graph", "analyze", a2.to_str().unwrap()]);
    assert_eq!(v["elliptic"], false);
    assert_eq!(v["chi_fundamental"], 1);
    assert_eq!(singlab(&["elliptic", "sequence", a2.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn corpus_emit_round_trips_through_analyze() {
    let out = singlab(&["corpus", "emit", "fig244", "0"]);
    assert!(out.status.success());
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "fig244_0.json", &String::from_utf8(out.stdout).unwrap());
    let v = json(&["elliptic", "sequence", path.to_str().unwrap()]);
    assert_eq!(v["m"], 0);
    let v = json(&["classify", path.to_str().unwrap(), "--pg", "1"]);
    assert_eq!(v["zeta"], 1);
    assert_eq!(singlab(&["corpus", "emit", "fig2312", "0"]).status.code(), Some(1));
    assert_eq!(singlab(&["corpus", "emit", "nope", "1"]).status.code(), Some(1));
}

#[test]
fn corrupted_corpus_file_is_named() {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    write_temp(&dir, "brell3_1.json", r#"{"vertices":[{"id":"E0","self":-2,"colour":1}]}"#);
    let out = singlab(&["verify-paper", "--corpus-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("brell3_1.json"));
}

#[test]
fn verify_paper_passes() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let out = singlab(&["--format", "json", "verify-paper", "--corpus-dir", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 8);
}
