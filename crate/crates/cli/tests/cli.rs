use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn parcoal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parcoal")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &TempDir, file: &str, args: &[&str]) -> PathBuf {
    let out = path(dir, file);
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", s(&out)]);
    let r = parcoal(&full);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    out
}

#[test]
fn subgroup_bundle_passes_and_non_subgroup_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let good = generate(&dir, "good.json", &["subgroup-action", "--group", "S3", "--subgroup", "A3"]);
    assert_eq!(code(&parcoal(&["check", s(&good), "--suite", "pmc"])), 0);

    let bad = generate(&dir, "bad.json", &["subgroup-action", "--group", "S3", "--subgroup", "e,(12),(13)"]);
    let r = parcoal(&["check", s(&bad), "--suite", "pmc", "--json"]);
    assert_eq!(code(&r), 1);
    let report: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    let pmc3 = &report["pmc:act"][2];
    assert_eq!(pmc3["axiom"], "PMC-3");
    assert_eq!(pmc3["pass"], false);
    assert!(pmc3["witness"]["index"].is_array());
}

#[test]
fn malformed_matrix_shape_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let file = generate(&dir, "a.json", &["subgroup-action", "--group", "Z2", "--subgroup", "trivial"]);
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    v["objects"]["act"]["matrix"]["cols"] = serde_json::json!(3);
    fs::write(&file, v.to_string()).unwrap();
    assert_eq!(code(&parcoal(&["check", s(&file)])), 2);
    assert_eq!(code(&parcoal(&["check", s(&path(&dir, "missing.json"))])), 2);
}

#[test]
fn characteristic_guard_and_unknown_group_exit_two() {
    let r = parcoal(&["generate", "subgroup-coaction", "--group", "Z2", "--subgroup", "all", "--field", "F2"]);
    assert_eq!(code(&r), 2);
    assert!(String::from_utf8_lossy(&r.stderr).contains("characteristic 2 divides"));
    assert_eq!(code(&parcoal(&["generate", "group-algebra", "--group", "Z13"])), 2);
    assert_eq!(code(&parcoal(&["generate", "group-algebra", "--field", "F4"])), 2);
}

#[test]
fn generated_global_structures_pass_their_suites() {
    let dir = TempDir::new().unwrap();
    let h = generate(&dir, "h.json", &["group-algebra", "--group", "S3"]);
    assert_eq!(code(&parcoal(&["check", s(&h), "--suite", "hopf"])), 0);
    let t = generate(&dir, "t.json", &["trivial-coaction", "--group", "Z2"]);
    assert_eq!(code(&parcoal(&["check", s(&t), "--suite", "cc"])), 0);
    let a = generate(&dir, "ad.json", &["adjoint-coaction", "--group", "S3"]);
    assert_eq!(code(&parcoal(&["check", s(&a), "--suite", "cc"])), 0);
    let d = generate(&dir, "db.json", &["dual-basis-coaction", "--group", "Z3"]);
    assert_eq!(code(&parcoal(&["check", s(&d), "--suite", "cc"])), 0);
    let r = generate(&dir, "r.json", &["regular-action", "--group", "Klein", "--field", "F3"]);
    assert_eq!(code(&parcoal(&["check", s(&r), "--suite", "mc"])), 0);
}

#[test]
fn group_file_is_accepted() {
    let dir = TempDir::new().unwrap();
    let table = path(&dir, "z3.json");
    fs::write(&table, r#"{"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "labels": ["1","x","y"]}"#).unwrap();
    let out = generate(&dir, "a.json", &["subgroup-action", "--group-file", s(&table), "--subgroup", "1"]);
    assert_eq!(code(&parcoal(&["check", s(&out), "--suite", "pmc"])), 0);
    fs::write(&table, r#"{"order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
    assert_eq!(code(&parcoal(&["generate", "group-algebra", "--group-file", s(&table)])), 2);
}

#[test]
fn globalize_writes_verified_bundles() {
    let dir = TempDir::new().unwrap();
    let a = generate(&dir, "a.json", &["subgroup-action", "--group", "Z2", "--subgroup", "trivial"]);
    let g = path(&dir, "g.json");
    assert_eq!(code(&parcoal(&["globalize", s(&a), "--mode", "pmc", "--out", s(&g)])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(v["objects"]["act.D"]["dim"], 2);
    assert_eq!(code(&parcoal(&["check", s(&g), "--suite", "all"])), 0);

    let c = generate(&dir, "c.json", &["subgroup-coaction", "--group", "Z2", "--subgroup", "all"]);
    let cg = path(&dir, "cg.json");
    assert_eq!(code(&parcoal(&["globalize", s(&c), "--mode", "pcc", "--out", s(&cg)])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cg).unwrap()).unwrap();
    assert_eq!(v["objects"]["coact.D"]["dim"], 2);
    assert_eq!(code(&parcoal(&["check", s(&cg), "--suite", "all"])), 0);

    let global = generate(&dir, "all.json", &["subgroup-action", "--group", "Z3", "--subgroup", "all"]);
    let gg = path(&dir, "gg.json");
    assert_eq!(code(&parcoal(&["globalize", s(&global), "--mode", "pmc", "--out", s(&gg)])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&gg).unwrap()).unwrap();
    let gmc3 = v["reports"]["act.globalization"].as_array().unwrap().iter().find(|e| e["axiom"] == "GMC-3").unwrap().clone();
    assert_eq!(gmc3["pass"], true);
}

#[test]
fn globalize_rejects_non_partial_input() {
    let dir = TempDir::new().unwrap();
    let bad = generate(&dir, "bad.json", &["subgroup-action", "--group", "S3", "--subgroup", "e,(12),(13)"]);
    assert_eq!(code(&parcoal(&["globalize", s(&bad), "--mode", "pmc"])), 1);
    assert_eq!(code(&parcoal(&["globalize", s(&bad), "--mode", "pcc"])), 2);
}

#[test]
fn dualize_reports_cross_checks() {
    let dir = TempDir::new().unwrap();
    let a = generate(&dir, "a.json", &["subgroup-action", "--group", "S3", "--subgroup", "A3"]);
    let d = path(&dir, "d.json");
    assert_eq!(code(&parcoal(&["dualize", s(&a), "--what", "action", "--out", s(&d)])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&d).unwrap()).unwrap();
    assert_eq!(v["objects"]["act.dual"]["type"], "dual_action");
    assert_eq!(code(&parcoal(&["check", s(&d), "--suite", "pma"])), 0);

    let c = generate(&dir, "c.json", &["subgroup-coaction", "--group", "Z4", "--subgroup", "e,g^2"]);
    let cd = path(&dir, "cd.json");
    assert_eq!(code(&parcoal(&["dualize", s(&c), "--what", "coaction", "--out", s(&cd)])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cd).unwrap()).unwrap();
    let report = v["reports"]["coact.four-way"].as_array().unwrap();
    assert!(report.iter().any(|e| e["axiom"] == "compat-action-coaction"));
    assert_eq!(code(&parcoal(&["check", s(&cd), "--suite", "all"])), 0);

    let h = generate(&dir, "h.json", &["group-algebra", "--group", "Z3"]);
    assert_eq!(code(&parcoal(&["dualize", s(&h), "--what", "hopf"])), 0);
}

#[test]
fn roundtrip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let a = generate(&dir, "a.json", &["subgroup-action", "--group", "Klein", "--subgroup", "e,a", "--field", "F5"]);
    let r = parcoal(&["roundtrip", s(&a)]);
    assert_eq!(code(&r), 0);
    assert_eq!(r.stdout, fs::read(&a).unwrap());
}
