use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use thetapos::json::CoordsJson;
use thetapos_core::semigroup::f_gamma;
use thetapos_core::somodel::model;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_thetapos"));
    c.env_remove("THETA_POS_CATALOG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Compares stdout with the stored file; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stdout));
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&expected), "{name}");
}

const COORDS: &str = r#"{"s1":"1","v1":["1","0","1/2"],"s2":"2","v2":["2","1","1"]}"#;

#[test]
fn golden_outputs() {
    golden("classify_so35", &["classify", "--diagram", "so(3,5)", "--theta", "a1,a2"]);
    golden("classify_f4", &["classify", "--diagram", "split-F4"]);
    golden(
        "weyl_theta_length",
        &["weyl", "theta-length", "--diagram", "split-F4", "--theta", "a1,a2", "--word", "2,3,4,2,3,2"],
    );
    golden("weyl_type_f4", &["weyl", "type", "--diagram", "e6(2)", "--theta", "a1,a2"]);
    golden("weyl_sigma_so36", &["weyl", "sigma", "--diagram", "so(3,6)", "--theta", "a1,a2"]);
    golden("som_serre_q5", &["som", "serre", "--q", "5"]);
    golden("semigroup_braid_q4", &["semigroup", "braid", "--q", "4", "--coords", COORDS]);
    golden("semigroup_braid_sampled", &["semigroup", "braid", "--q", "6", "--seed", "11", "--samples", "10"]);
    golden("semigroup_stratify_q4", &["semigroup", "stratify", "--q", "4", "--coords", COORDS]);
    golden("semigroup_ur", &["semigroup", "ur", "--r", "5", "--seed", "2", "--samples", "40"]);
    golden("flags_circle_q4", &["flags", "circle", "--q", "4", "--t", "-1,0,5/2"]);
    golden("report_classification_table", &["report", "classification-table"]);
    golden("report_appendix_fixtures", &["report", "appendix-fixtures"]);
}

#[test]
fn spec_examples() {
    let v = json_of(&run(&["classify", "--diagram", "so(3,5)", "--theta", "a1,a2"]));
    assert_eq!(v["admits"], Value::Bool(true));
    assert_eq!(v["specialRoot"], Value::String("a2".into()));
    let v = json_of(&run(&[
        "weyl", "theta-length", "--diagram", "split-F4", "--theta", "a1,a2", "--word", "2,3,4,2,3,2",
    ]));
    assert_eq!(v["thetaLength"], Value::from(3));
}

#[test]
fn braid_output_satisfies_the_identity() {
    let v = json_of(&run(&["semigroup", "braid", "--q", "4", "--coords", COORDS]));
    let m = model(4).unwrap();
    let input: CoordsJson = serde_json::from_value(v["input"].clone()).unwrap();
    let output: CoordsJson = serde_json::from_value(v["output"].clone()).unwrap();
    assert_eq!(output.order, "2121");
    let a = f_gamma(&m, &input.to_coords(&m).unwrap());
    let b = f_gamma(&m, &output.to_coords(&m).unwrap());
    assert_eq!(a, b);
    assert_eq!(v["positive"], Value::Bool(true));
}

#[test]
fn eval_then_decode_round_trips() {
    let v = json_of(&run(&["semigroup", "eval", "--q", "4", "--coords", COORDS]));
    let matrix = serde_json::to_string(&v["matrix"]).unwrap();
    let d = json_of(&run(&["semigroup", "decode", "--q", "4", "--matrix", &matrix]));
    let back: CoordsJson = serde_json::from_value(d["coords"].clone()).unwrap();
    let orig: CoordsJson = serde_json::from_str(COORDS).unwrap();
    let m = model(4).unwrap();
    assert_eq!(back.to_coords(&m).unwrap(), orig.to_coords(&m).unwrap());
    let p = json_of(&run(&["semigroup", "member", "--q", "4", "--matrix", &matrix]));
    assert_eq!(p["positive"], Value::Bool(true));
}

#[test]
fn exit_codes() {
    let usage = run(&["classify"]);
    assert_eq!(usage.status.code(), Some(2));
    let unknown = run(&["classify", "--diagram", "no-such-diagram"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(json_of(&unknown)["error"].is_string());

    let small_q = run(&["som", "serre", "--q", "3"]);
    assert_eq!(small_q.status.code(), Some(1));
    assert!(json_of(&small_q)["error"].is_string());

    let boundary = r#"{"s1":"0","v1":["1","0","1/2"],"s2":"2","v2":["2","1","1"]}"#;
    let out = run(&["semigroup", "braid", "--q", "4", "--coords", boundary]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("boundary"));

    let not_positive = run(&["semigroup", "member", "--q", "4", "--coords", boundary]);
    assert_eq!(not_positive.status.code(), Some(1));
    assert_eq!(json_of(&not_positive)["positive"], Value::Bool(false));
    let positive = run(&["semigroup", "member", "--q", "4", "--coords", COORDS]);
    assert_eq!(positive.status.code(), Some(0));

    let empty = run(&["classify", "--diagram", "split-A2", "--theta", ""]);
    assert_eq!(empty.status.code(), Some(1));
}

#[test]
fn sampled_runs_need_a_seed_and_are_deterministic() {
    let no_seed = run(&["semigroup", "ur", "--r", "2", "--samples", "5"]);
    assert_eq!(no_seed.status.code(), Some(2));
    let args = ["flags", "circle", "--q", "5", "--seed", "9", "--samples", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["positive"], Value::from(3));
}

#[test]
fn payload_from_file_and_table_format() {
    let dir = std::env::temp_dir().join(format!("thetapos-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coords.json");
    std::fs::write(&path, COORDS).unwrap();
    let v = json_of(&run(&["semigroup", "member", "--q", "4", "--coords", path.to_str().unwrap()]));
    assert_eq!(v["positive"], Value::Bool(true));
    let t = run(&["weyl", "longest", "--diagram", "split-B3", "--format", "table"]);
    let text = String::from_utf8(t.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("length") && l.trim_end().ends_with('9')));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_override_and_diagram_files() {
    let dir = std::env::temp_dir().join(format!("thetapos-cat-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let diagram = r#"{"name":"my-b2","nodes":[{"label":"x","mult":1},{"label":"y","mult":1}],
        "edges":[{"from":"x","to":"y","bond":2,"arrowToward":"y"}]}"#;
    let cat = format!(r#"{{"version":"test","diagrams":[{diagram}]}}"#);
    let cat_path = dir.join("catalog.json");
    std::fs::write(&cat_path, cat).unwrap();
    let out = bin().env("THETA_POS_CATALOG", &cat_path).args(["classify", "--diagram", "my-b2"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(json_of(&out)["admissible"], serde_json::json!([["x", "y"], ["x"]]));
    let missing =
        bin().env("THETA_POS_CATALOG", &cat_path).args(["classify", "--diagram", "split-A2"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));

    let d_path = dir.join("diagram.json");
    std::fs::write(&d_path, diagram).unwrap();
    let v = json_of(&run(&["classify", "--diagram", d_path.to_str().unwrap(), "--theta", "x"]));
    assert_eq!(v["admits"], Value::Bool(true));
    assert_eq!(v["specialRoot"], Value::String("x".into()));
    std::fs::remove_dir_all(&dir).unwrap();
}
