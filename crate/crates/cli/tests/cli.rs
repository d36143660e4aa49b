use std::path::PathBuf;
use std::process::{Command, Output};

use affine_klr::cartan::root_to_weight;
use affine_klr::quiver::Arrow;
use affine_klr::{build_quiver, LevelKDominant, MaxWeightEntry, RootVector, WeightQuiver};
use serde_json::Value;

fn aklr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aklr")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = aklr(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect()
}

fn quiver_from_json(text: &str) -> WeightQuiver {
    let v: Value = serde_json::from_str(text).unwrap();
    let base = LevelKDominant::new(ints(&v["base"])).unwrap();
    assert_eq!(v["ell"].as_u64().unwrap() as usize, base.rank().ell());
    assert_eq!(v["k"].as_i64().unwrap(), base.k());
    let vertices = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|vx| {
            let beta = RootVector::new(ints(&vx["beta"])).unwrap();
            MaxWeightEntry {
                weight: LevelKDominant::new(ints(&vx["coeffs"])).unwrap(),
                x: ints(&vx["x"]),
                max_weight: base.to_weight().sub(&root_to_weight(&beta, base.rank())),
                beta,
            }
        })
        .collect();
    let arrows = v["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| {
            let label = ints(&a["label"]);
            Arrow {
                src: a["src"].as_u64().unwrap() as usize,
                dst: a["dst"].as_u64().unwrap() as usize,
                label: (label[0] as usize, label[1] as usize),
            }
        })
        .collect();
    WeightQuiver { base, vertices, arrows }
}

#[test]
fn maxweights_lists_every_member() {
    let out = stdout(&["maxweights", "--ell", "6", "--weight", "1,0,0,1,0,0,1"]);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#') && !l.starts_with("member")).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.contains(&"3Λ_3\t(3,2,1,0,1,2,3)\t3α_0+2α_1+α_2+α_4+2α_5+3α_6\t3Λ_3-3δ"));
    let json: Value = serde_json::from_str(&stdout(&["maxweights", "--ell", "6", "--weight", "1,0,0,1,0,0,1", "--format", "json"])).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 12);
}

#[test]
fn classify_reports_the_type() {
    assert_eq!(stdout(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "1,1,1", "--char", "0", "--t", "other"]), "Tame\n");
    assert_eq!(stdout(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "0,1,0"]), "Zero\n");
    assert_eq!(stdout(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "0,0,0", "--mdelta", "2"]), "Wild\n");
    let json: Value =
        serde_json::from_str(&stdout(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "1,1,1", "--format", "json"])).unwrap();
    assert_eq!(json["type"], "Tame");
    assert_eq!(json["m"], 1);
    assert_eq!(ints(&json["beta0"]), vec![0, 0, 0]);
}

#[test]
fn dot_chain_for_level_two() {
    let out = stdout(&["quiver", "--ell", "1", "--weight", "2,0", "--format", "dot"]);
    assert_eq!(
        out,
        "digraph quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n  v0 [label=\"2Λ_0\"];\n  v1 [label=\"2Λ_1\"];\n  v0 -> v1 [label=\"(0,0)\"];\n}\n"
    );
    let out = stdout(&["quiver", "--ell", "4", "--weight", "2,0,0,0,0", "--format", "dot"]);
    assert!(out.contains("v0 -> v1 [label=\"(0,0)\"]"));
    assert!(out.contains("v1 -> v2 [label=\"(4,1)\"]"));
    assert!(out.contains("[label=\"Λ_2+Λ_3\"]"));
}

#[test]
fn json_round_trip_rebuilds_the_quiver() {
    for (ell, w) in [("1", "2,0"), ("2", "1,1,1"), ("6", "1,0,0,1,0,0,1"), ("3", "2,0,1,0"), ("4", "3,0,0,1,0")] {
        let text = stdout(&["quiver", "--ell", ell, "--weight", w, "--format", "json"]);
        let rebuilt = quiver_from_json(&text);
        assert_eq!(rebuilt, build_quiver(&rebuilt.base).unwrap(), "weight {w}");
    }
}

#[test]
fn tquiver_marks_strata() {
    let json: Value = serde_json::from_str(&stdout(&["tquiver", "--ell", "6", "--weight", "4,0,0,2,0,0,1", "--format", "json"])).unwrap();
    let tagged = json["vertices"].as_array().unwrap().iter().filter(|v| !v["tags"].as_array().unwrap().is_empty()).count();
    assert_eq!(tagged, 13);
}

#[test]
fn gdim_matrix_and_totals() {
    let out = stdout(&["gdim", "--ell", "2", "--weight", "3,0,0", "--beta", "2,1,0", "--nu", "0,1,0"]);
    assert_eq!(out, "1+2q^2+2q^4+q^6\n");
    let out = stdout(&["gdim", "--ell", "2", "--weight", "3,0,0", "--beta", "2,1,0", "--nu", "0,1,0", "--nu", "0,0,1", "--at-one"]);
    assert_eq!(out, "6\t12\n12\t24\n");
    let total = stdout(&["gdim", "--ell", "2", "--weight", "3,0,0", "--beta", "2,1,0", "--at-one"]);
    let seqs = stdout(&["gdim", "--ell", "2", "--weight", "3,0,0", "--beta", "2,1,0", "--sequences"]);
    let seqs: Vec<&str> = seqs.lines().collect();
    let mut args = vec!["gdim", "--ell", "2", "--weight", "3,0,0", "--beta", "2,1,0", "--at-one"];
    for s in &seqs {
        args.push("--nu");
        args.push(s);
    }
    let sum: i64 = stdout(&args).split_whitespace().map(|c| c.parse::<i64>().unwrap()).sum();
    assert_eq!(total.trim().parse::<i64>().unwrap(), sum);
}

#[test]
fn brauer_from_json_file() {
    let path = scratch(
        "star.json",
        r#"{"vertices":[{"id":0,"mult":2},{"id":1,"mult":1},{"id":2,"mult":1},{"id":3,"mult":1}],
            "edges":[[0,1],[0,2],[0,3]],"rotation":{"0":[0,2,1]}}"#,
    );
    let json: Value = serde_json::from_str(&stdout(&["brauer", "--graph", path.to_str().unwrap(), "--format", "json"])).unwrap();
    assert_eq!(json["arrows"].as_array().unwrap().len(), 6);
    assert_eq!(json["invariants"]["n_faces"], 1);
    assert_eq!(json["invariants"]["genus"], 0);
    assert_eq!(json["cartan"], serde_json::json!([[3, 2, 2], [2, 3, 2], [2, 2, 3]]));
    let kinds: Vec<&str> = json["relations"].as_array().unwrap().iter().map(|r| r["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds.iter().filter(|&&k| k == "cycle-difference").count(), 3);

    let line = scratch("line.json", r#"{"vertices":[{"id":0,"mult":1},{"id":1,"mult":2},{"id":2,"mult":1}],"edges":[[0,1],[1,2]]}"#);
    let out = stdout(&["brauer", "--gamma", "1,1,2", "--compare", line.to_str().unwrap()]);
    assert!(out.contains("derived equivalent: false"), "{out}");
    let out = stdout(&["brauer", "--line", "2,1,1", "--compare", line.to_str().unwrap()]);
    assert!(out.contains("derived equivalent: true"), "{out}");
}

#[test]
fn decomp_uniqueness() {
    let out = stdout(&["decomp", "--gamma", "1,1,2"]);
    assert!(out.ends_with("unique=true\n"), "{out}");
    let out = stdout(&["decomp", "--gamma", "1,1,3"]);
    assert!(out.ends_with("unique=false\n"), "{out}");
    let json: Value = serde_json::from_str(&stdout(&["decomp", "--matrix", "2,1;1,2", "--format", "json"])).unwrap();
    assert_eq!(json["solutions"], serde_json::json!([[[1, 1], [1, 0], [0, 1]]]));
}

#[test]
fn exit_codes() {
    let out = aklr(&["quiver", "--ell", "2", "--weight", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--weight"));

    let out = aklr(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--beta"));

    assert_eq!(aklr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(aklr(&["quiver", "--ell", "1", "--weight", "2,x"]).status.code(), Some(2));
    assert_eq!(aklr(&["maxweights", "--ell", "1", "--weight", "2,0", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(aklr(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "1,1,1", "--t", "two"]).status.code(), Some(2));
    assert_eq!(aklr(&["classify", "--ell", "2", "--weight", "3,0,0", "--beta", "1,1,1", "--char", "4"]).status.code(), Some(2));

    assert_eq!(aklr(&["quiver", "--ell", "2", "--weight", "1,0,0"]).status.code(), Some(1));
    assert_eq!(aklr(&["classify", "--ell", "2", "--weight", "2,0,0", "--beta", "1,0,0"]).status.code(), Some(1));
    assert_eq!(aklr(&["gdim", "--ell", "1", "--weight", "2,0", "--beta", "8,8"]).status.code(), Some(1));

    let bad = scratch("bad.json", "{\"vertices\": [");
    assert_eq!(aklr(&["brauer", "--graph", bad.to_str().unwrap()]).status.code(), Some(2));
    let split = scratch("split.json", r#"{"vertices":[{"id":0,"mult":1},{"id":1,"mult":1},{"id":2,"mult":1},{"id":3,"mult":1}],"edges":[[0,1],[2,3]]}"#);
    assert_eq!(aklr(&["brauer", "--graph", split.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(aklr(&["decomp", "--matrix", "2,1;0,2"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["tquiver", "--ell", "5", "--weight", "2,1,0,1,0,1", "--format", "json"];
    assert_eq!(aklr(&args).stdout, aklr(&args).stdout);
}
