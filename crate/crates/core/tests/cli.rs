use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn smashkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_smashkit"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn catalog(dir: &Path, name: &str, extra: &[&str]) -> PathBuf {
    let path = dir.join(format!("{}.json", name.replace(':', "_")));
    let mut args = vec!["catalog", name, "--json", "-o", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let (code, out, err) = smashkit(&args);
    assert_eq!(code, 0, "catalog {name}: {out}{err}");
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_passes_then_fails_after_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let h4 = catalog(dir.path(), "sweedler", &[]);
    let (code, out, _) = smashkit(&["check", s(&h4)]);
    assert_eq!(code, 0, "{out}");

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&h4).unwrap()).unwrap();
    let mult = doc["mult"].as_array_mut().unwrap();
    let last = mult.last_mut().unwrap();
    last["c"] = Value::String("5".into());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let (code, out, _) = smashkit(&["check", s(&bad), "--as", "algebra"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("m.json");
    std::fs::write(
        &f,
        r#"{"format":1,"kind":"matrix","field":"Q","rows":2,"cols":2,"entries":[{"r":2,"c":0,"v":"1"}]}"#,
    )
    .unwrap();
    let (code, _, err) = smashkit(&["check", s(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("$.entries[0].r"), "{err}");

    std::fs::write(&f, "{ not json").unwrap();
    assert_eq!(smashkit(&["check", s(&f)]).0, 2);
    assert_eq!(smashkit(&["catalog", "no-such-thing"]).0, 2);
}

#[test]
fn classify_finds_eight_over_gf3() {
    let dir = tempfile::tempdir().unwrap();
    let kc2 = catalog(dir.path(), "group:cyclic:2", &["--field", "prime:3"]);
    let sols = dir.path().join("sols");
    let (code, out, err) = smashkit(&["classify", "--A", s(&kc2), "--B", s(&kc2), "--emit-solutions", s(&sols)]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("8 solution"), "{out}");
    let files: Vec<_> = std::fs::read_dir(&sols).unwrap().collect();
    assert_eq!(files.len(), 8);
    for f in files {
        let (code, out, _) = smashkit(&["smash", s(&f.unwrap().path())]);
        assert_eq!(code, 0, "{out}");
    }
}

#[test]
fn witness_factorizes_and_rebuilds() {
    let dir = tempfile::tempdir().unwrap();
    let w = catalog(dir.path(), "taft:3:7", &["--witness"]);
    let bip = dir.path().join("bip.json");
    let (code, out, err) = smashkit(&["factorize", s(&w), "-o", s(&bip)]);
    assert_eq!(code, 0, "{out}{err}");
    let k = dir.path().join("k.json");
    let (code, out, err) = smashkit(&["biproduct", s(&bip), "-o", s(&k)]);
    assert_eq!(code, 0, "{out}{err}");
    let (code, out, _) = smashkit(&["check", s(&k), "--as", "hopf"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn double_and_hopf_modules() {
    let dir = tempfile::tempdir().unwrap();
    let h4 = catalog(dir.path(), "sweedler", &[]);
    let (code, out, err) = smashkit(&["double", s(&h4)]);
    assert_eq!(code, 0, "{out}{err}");

    assert_eq!(smashkit(&["hopfmod", "--hopf", s(&h4)]).0, 0);
    let (code, _, _) = smashkit(&[
        "hopfmod",
        "--hopf",
        s(&h4),
        "--r",
        "switch",
        "--module",
        "regular-trivial",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn json_result_document() {
    let dir = tempfile::tempdir().unwrap();
    let q = catalog(dir.path(), "quaternion:-1,-1", &[]);
    let (code, out, err) = smashkit(&["smash", s(&q), "--json"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["format"], 1);
    assert_eq!(v["kind"], "result");
    assert_eq!(v["passed"], true);
}

#[test]
fn slow_suite_needs_flag() {
    assert_eq!(smashkit(&["classify", "--suite", "c2c2-gf2"]).0, 2);
    let (code, out, _) = smashkit(&["classify", "--suite", "families"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn catalog_examples_pass_one_verb() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str], &str)] = &[
        ("quaternion:-1,-1", &[], "smash"),
        ("quaternion:2,3", &[], "smash"),
        ("group:s3", &[], "check"),
        ("dualgroup:s3", &[], "check"),
        ("sweedler", &["--witness"], "factorize"),
        ("taft:3:7", &["--witness"], "factorize"),
        ("radford:2:2:4:1:prime:5", &["--witness"], "factorize"),
        ("en:2", &["--witness"], "factorize"),
        ("double:sweedler", &[], "biproduct"),
        ("sweedler", &[], "double"),
    ];
    for (name, extra, verb) in cases {
        let f = catalog(dir.path(), name, extra);
        let (code, out, err) = smashkit(&[verb, s(&f)]);
        assert_eq!(code, 0, "{verb} {name}: {out}{err}");
    }
}

#[test]
fn output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let h4 = catalog(dir.path(), "sweedler", &["--witness"]);
    let a = smashkit(&["factorize", s(&h4), "--json"]);
    let b = smashkit(&["factorize", s(&h4), "--json"]);
    assert_eq!(a, b);
}
