use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn commclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = commclass(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn tsv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

fn validated(schema: &str, args: &[&str]) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(schema);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let value: Value = serde_json::from_str(&stdout(args)).expect("valid JSON");
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates {schema}: {errors:?}");
    value
}

#[test]
fn sym4_class_table() {
    let rows = tsv_rows(&stdout(&["classes", "sym:4", "--mod", "alt"]));
    assert_eq!(rows.len(), 5);
    let split: Vec<&str> = rows.iter().filter(|r| r[4] == "true").map(|r| r[1].as_str()).collect();
    assert_eq!(split, ["(1 2 3)"]);
    let sizes: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(sizes, ["1", "6", "8", "3", "6"]);
}

#[test]
fn abelian_and_linear_class_counts() {
    let rows = tsv_rows(&stdout(&["classes", "cyclic:6", "--mod", "sub:2"]));
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r[2] == "1"));
    assert_eq!(tsv_rows(&stdout(&["classes", "gl2:3", "--mod", "sl"])).len(), 8);
}

#[test]
fn matchings() {
    for (spec, sub, coset, pairs) in [
        ("sym:4", "alt", "0", 2),
        ("sym:3", "alt", "0", 1),
        ("gl2:5", "sl", "1", 5),
        ("sl2-in-gl2:7", "sl", "3", 7),
    ] {
        let v = validated("match.schema.json", &["match", spec, "--mod", sub, "--coset", coset]);
        assert_eq!(v["pairs"].as_array().unwrap().len(), pairs, "{spec}");
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn json_outputs_match_schemas() {
    let v = validated("classes.schema.json", &["classes", "dihedral:5", "--format", "json"]);
    assert_eq!(v["quotient_order"], 2);
    let v = validated("relation.schema.json", &["relation", "sym:3", "--mod", "alt", "--format", "json"]);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    let v = validated("partition.schema.json", &["partition", "alt:4", "--mod", "v4"]);
    assert_eq!(v["tuples"].as_array().unwrap().len(), 1);
    validated("coarsen.schema.json", &["coarsen", "2+1+1", "--format", "json"]);
    let v = validated("coarsen.schema.json", &["coarsen", "2+1+1", "3+1", "--format", "json"]);
    assert_eq!(v["common_coarsening"], Value::Null);
    let v = validated("sym-table.schema.json", &["sym-table", "6", "--format", "json"]);
    assert_eq!(v["counts"]["p_even"], 6);
    let v = validated("gl2-table.schema.json", &["gl2-table", "--q", "3,5", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 8);
    let v = validated("frobenius.schema.json", &["frobenius", "alt:4", "--mod", "v4"]);
    assert_eq!(v["report"]["is_frobenius"], true);
    let v = validated("explore.schema.json", &["explore", "affine:5", "--coset", "2", "--to", "3"]);
    assert_eq!(v["experimental"], true);
    let v = validated("verify.schema.json", &["verify", "--only", "sym", "--format", "json"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn relation_dot() {
    let dot = stdout(&["relation", "sym:3", "--mod", "alt"]);
    assert!(dot.starts_with("graph commuting_classes {\n"));
    assert!(dot.contains("  c2[coset=0,split=1,size=2];"));
    assert!(dot.contains("  c0 -- c1;"));
    assert!(!dot.contains("c1 -- c2"));
}

#[test]
fn coarsening_answers() {
    assert_eq!(stdout(&["coarsen", "2+2", "4"]), "4\n");
    assert_eq!(stdout(&["coarsen", "2+1+1", "4"]), "none\n");
    assert_eq!(stdout(&["coarsen", "1"]), "1\n");
}

#[test]
fn gl2_table_has_verified_column() {
    let text = stdout(&["gl2-table", "--q", "7"]);
    assert_eq!(text.lines().next().unwrap().split('\t').next_back(), Some("verified"));
    let rows = tsv_rows(&text);
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r[6] == "true"));
    let d: Vec<&str> = rows[3][2..4].iter().map(String::as_str).collect();
    assert_eq!(d, ["3", "4"]);
}

#[test]
fn verify_filters() {
    let sym = stdout(&["verify", "--only", "sym"]);
    assert!(tsv_rows(&sym).iter().all(|r| r[0] == "PASS" && r[1] == "sym"));
    let gl2 = stdout(&["verify", "--only", "gl2", "--q", "3,5,7"]);
    let rows = tsv_rows(&gl2);
    assert!(rows.iter().all(|r| r[0] == "PASS" && r[1] == "gl2"));
    for q in ["GL2(3)", "GL2(5)", "GL2(7)"] {
        assert!(rows.iter().any(|r| r[3] == q));
    }
    assert!(!rows.iter().any(|r| r[3] == "GL2(9)"));
}

#[test]
fn verify_all_passes() {
    let out = commclass(&["verify", "--all"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(tsv_rows(&text).iter().all(|r| r[0] == "PASS"));
    for suite in ["matching", "sym", "gl2", "gl4", "frobenius"] {
        assert!(tsv_rows(&text).iter().any(|r| r[1] == suite), "{suite}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["relation", "sym:5", "--mod", "alt"][..],
        &["match", "gl2:7", "--mod", "sl", "--coset", "2"],
        &["partition", "cyclic:9", "--mod", "sub:3", "--format", "tsv"],
        &["verify", "--only", "matching", "--seed", "7"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn errors_are_reported() {
    for args in [
        &["classes", "nope:3"][..],
        &["classes", "sym:5", "--cap", "10"],
        &["classes", "q8", "--mod", "centre"],
        &["partition", "cyclic:6", "--mod", "trivial"],
        &["match", "sym:4", "--mod", "alt", "--coset", "5"],
        &["classes", "sym:4", "--mod", "alt", "--format", "dot"],
        &["gl2-table", "--q", "4"],
    ] {
        let out = commclass(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty());
    }
}
