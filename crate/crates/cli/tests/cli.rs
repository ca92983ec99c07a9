use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(rel)
}

fn modext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modext")).args(args).env_remove("MODEXT_CAP_ORDER").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn p(x: &Path) -> &str {
    x.to_str().unwrap()
}

#[test]
fn cohomology_of_z2() {
    let v = json_of(&modext(&["cohomology", p(&data("groups/z2.json")), "--degree", "3"]));
    assert_eq!(v["invariants"], serde_json::json!([2]));
    assert_eq!(v["representatives"].as_array().unwrap().len(), 1);
}

#[test]
fn double_semion_squares_to_toric_code() {
    let dir = tempfile::tempdir().unwrap();
    let ds = dir.path().join("ds.json");
    let st = dir.path().join("st.json");
    let out = modext(&["double", p(&data("groups/z2.json")), "--omega", "1", "--output", p(&ds)]);
    assert!(out.status.success());
    let out = modext(&["stack", p(&ds), p(&ds), "--output", p(&st)]);
    assert!(out.status.success());
    let parse = |f: &Path| modext::json::extension_from_json(&modext::json::parse(&std::fs::read_to_string(f).unwrap()).unwrap()).unwrap();
    let toric = parse(&data("extensions/toric_code.json"));
    assert!(modext::modular::extension_equivalent(&parse(&st), &toric).unwrap().is_some());
    let semion = parse(&data("extensions/double_semion.json"));
    assert!(modext::modular::extension_equivalent(&parse(&ds), &semion).unwrap().is_some());
}

#[test]
fn emitted_files_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    assert!(modext(&["sixteenfold", "--nu", "17", "--output", p(&a)]).status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(data("sixteenfold/nu_01.json")).unwrap());
    let ext = modext::json::extension_from_json(&modext::json::parse(&text).unwrap()).unwrap();
    assert_eq!(modext::json::to_canonical_string(&modext::json::extension_to_json(&ext)), text);
}

#[test]
fn verify_exit_codes() {
    let v = json_of(&modext(&["verify", p(&data("extensions/toric_code.json"))]));
    assert_eq!(v["passed"], Value::Bool(true));

    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(data("extensions/toric_code.json")).unwrap()).unwrap();
    doc["S"][1][1] = serde_json::json!({"level": 1, "coeffs": [["-1", "1"]]});
    let tampered = dir.path().join("tampered.json");
    std::fs::write(&tampered, doc.to_string()).unwrap();
    let out = modext(&["verify", p(&tampered)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["passed"], Value::Bool(false));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"labels\": [").unwrap();
    assert_eq!(modext(&["verify", p(&bad)]).status.code(), Some(1));
    assert_eq!(modext(&["verify", p(&dir.path().join("missing.json"))]).status.code(), Some(1));
}

#[test]
fn cap_override() {
    let s3 = data("groups/s3.json");
    let out = Command::new(env!("CARGO_BIN_EXE_modext"))
        .args(["double", p(&s3)])
        .env("MODEXT_CAP_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(modext(&["double", p(&s3)]).status.success());
}

#[test]
fn classification_branches() {
    let v = json_of(&modext(&["classify", p(&data("groups/z2.json")), "--dim", "2"]));
    assert_eq!(v["order"], 2);
    assert_eq!(v["realizations"].as_array().unwrap().len(), 2);
    let v = json_of(&modext(&["classify", p(&data("groups/z2f.json")), "--dim", "2", "--fermionic"]));
    assert_eq!(v["invariants"], serde_json::json!([16]));
    let v = json_of(&modext(&["classify", p(&data("groups/z4f.json")), "--dim", "1", "--fermionic"]));
    assert_eq!(v["branch"], "dim1-fermionic-nonsplit");
    assert_eq!(v["order"], 1);
    let v = json_of(&modext(&["classify", p(&data("groups/q8f.json")), "--dim", "2", "--fermionic"]));
    assert_eq!(v["supported"], Value::Bool(false));
    let v = json_of(&modext(&["classify", p(&data("groups/s3.json")), "--dim", "0"]));
    assert_eq!(v["order"], 2);
}

#[test]
fn condense_and_group_info() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.md");
    let v = json_of(&modext(&["group", "info", p(&data("groups/z2xz2f.json")), "--report", p(&report)]));
    assert_eq!(v["order"], 4);
    assert!(v["split"].is_array());
    assert!(std::fs::read_to_string(&report).unwrap().contains("splits"));

    let toric: Value = serde_json::from_str(&std::fs::read_to_string(data("extensions/toric_code.json")).unwrap()).unwrap();
    let e = toric["embedding"]["1"].as_str().unwrap().to_string();
    let unit = toric["labels"][0].as_str().unwrap().to_string();
    let v = json_of(&modext(&["condense", p(&data("extensions/toric_code.json")), "--bosons", &format!("{unit},{e}")]));
    let cands = v["candidates"].as_array().unwrap();
    assert_eq!(cands.len(), 1);
    assert_eq!(cands[0]["labels"].as_array().unwrap().len(), 1);
    let out = modext(&["condense", p(&data("extensions/toric_code.json")), "--bosons", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nonabelian_stack_is_unsupported() {
    let d = data("extensions/double_s3.json");
    let out = modext(&["stack", p(&d), p(&d)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported"));
}

#[test]
fn catalog_listing() {
    let v = json_of(&modext(&["catalog"]));
    assert!(v["files"].as_array().unwrap().len() >= 30);
}
