use std::process::{Command, Output};

use serde_json::Value;

fn sgl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgl")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn report_json() {
    let out = sgl(&["report", "ASL(8)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 168);
    assert_eq!(v["center_order"], 1);
    assert_eq!(v["is_complete"], true);
    assert_eq!(v["is_stable"], true);
    assert_eq!(v["abelian_invariants"], serde_json::json!([3]));
    assert_eq!(v["nilpotency"]["nilpotent"], false);
}

#[test]
fn report_text_and_unicode_product() {
    let out = sgl(&["report", "C6 × ASL(8)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("order:                1008"));
    assert!(text.contains("stable:               false"));
}

#[test]
fn verify_defaults() {
    let out = sgl(&["verify", "div", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["evidence"]["satisfying"], serde_json::json!([[], [2], [6]]));
    for claim in ["abthm", "nilthm", "extchar", "fiberprod", "split", "homocyclic", "decomp"] {
        assert_eq!(sgl(&["verify", claim]).status.code(), Some(0), "{claim}");
    }
    let out = sgl(&["verify", "noncyclic", "--bound", "32", "--format", "json"]);
    assert_eq!(json(&out)["evidence"]["bound"], 32);
}

#[test]
fn verify_error_paths() {
    assert_eq!(sgl(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(sgl(&["verify", "kq", "--q", "2"]).status.code(), Some(2));
    assert_eq!(sgl(&["verify", "extchar", "--group", "S3"]).status.code(), Some(2));
    assert_eq!(sgl(&["verify", "extchar", "--group", "C2 x C3"]).status.code(), Some(3));
    assert_eq!(sgl(&["verify", "abthm", "--group", "C3"]).status.code(), Some(2));
    assert_eq!(sgl(&["verify", "nonstab", "--q", "512"]).status.code(), Some(4));
    let out = sgl(&["report", "C2 x (Q8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("offset 8"));
}

#[test]
fn iso_and_aut() {
    assert_eq!(sgl(&["iso", "C6", "C2 x C3"]).status.code(), Some(0));
    assert_eq!(sgl(&["iso", "Dih(4)", "Q8"]).status.code(), Some(1));
    let out = sgl(&["aut", "Q8", "--format", "json"]);
    let v = json(&out);
    assert_eq!((v["aut_order"].as_u64(), v["inn_order"].as_u64()), (Some(24), Some(4)));
    assert_eq!(v["is_stable"], false);
}

#[test]
fn json_is_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed");
        v
    };
    let a = strip(json(&sgl(&["verify", "kq", "--q", "9", "--format", "json"])));
    let b = strip(json(&sgl(&["verify", "kq", "--q", "9", "--format", "json"])));
    assert_eq!(a, b);
}
