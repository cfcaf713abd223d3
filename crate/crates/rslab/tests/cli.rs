use std::io::Write;
use std::process::{Command, Output};

use rslab::envelope::Envelope;
use serde_json::Value;

fn rslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rslab")).args(args).env_remove("RSLAB_MANIFEST").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let out = rslab(&a);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn envelope_has_the_four_keys() {
    let v = json(&["ci", "-n", "4", "-d", "4"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["citations", "command", "inputs", "results"]);
    assert_eq!(v["command"], "ci -n 4 -d 4");
    assert_eq!(v["results"]["invariants"]["signature"], "100");
    assert!(!v["citations"].as_array().unwrap().is_empty());
}

#[test]
fn rationals_are_strings() {
    let v = json(&["sphere", "7"]);
    assert_eq!(v["results"]["spheres"][0]["casimir"], "49/4");
    assert_eq!(v["results"]["spheres"][0]["margin"], "23/2");
}

#[test]
fn json_round_trips() {
    let out = rslab(&["--json", "holonomy", "spin7", "--b2", "4", "--b3", "33", "--b4minus", "60"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let env: Envelope = serde_json::from_str(&text).unwrap();
    assert_eq!(format!("{}\n", env.to_json()), text);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["results"]["topological"]["kernel_dimension"], 97);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "verify-paper"][..],
        &["--json", "holonomy", "catalog"],
        &["product", "index", "--left", "2:4", "--right", "3:2,2"],
    ] {
        let a = rslab(args);
        let b = rslab(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(json(&["ci", "-n", "2", "-d", "4", "--kernel"])["results"]["kernel"]["dim_ker_q"], 38);
    let elliptic = json(&["ci", "-n", "1", "-d", "3"]);
    assert_eq!(elliptic["results"]["invariants"]["euler"], "0");
    let g2 = json(&["holonomy", "g2"]);
    assert_eq!(g2["results"]["sigma_three_half"]["total"]["description"], "7 + 14 + 27");
    assert_eq!(g2["results"]["parallel_rs"], 0);
    assert_eq!(json(&["holonomy", "sp", "3"])["results"]["parallel_rs"], 2);
    let both = json(&["ci", "-n", "4", "-d", "4", "--method", "both"]);
    assert_eq!(both["results"]["invariants"]["signature_series"], "100");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["ci", "-n", "2", "-d", "x"][..],
        &["ci", "-n", "0", "-d", "3"],
        &["holonomy", "e8"],
        &["rep", "dim", "G2", "1,0,0"],
        &["sphere", "2"],
        &["verify-paper", "--filter", "no-such-entry"],
        &["frobnicate"],
    ] {
        assert_eq!(rslab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_paper_passes() {
    let out = rslab(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    let v = json(&["verify-paper"]);
    let total = v["results"]["total"].as_u64().unwrap();
    assert!(total >= 20);
    assert_eq!(v["results"]["passed"].as_u64(), Some(total));
}

#[test]
fn filter_selects_signature_entries() {
    let v = json(&["verify-paper", "--filter", "signature"]);
    let entries = v["results"]["entries"].as_array().unwrap();
    assert!(entries.len() >= 5);
    assert!(entries.iter().all(|e| e["id"].as_str().unwrap().contains("signature")));
}

#[test]
fn manifest_override_and_mismatch_exit_1() {
    let mut f = tempfile();
    writeln!(
        f.1,
        "[[entry]]\nid = \"ok\"\ncommand = \"sphere 8\"\npath = \"/spheres/0/casimir\"\nexpected = \"15\"\ncitation = \"S^8\"\n\n\
         [[entry]]\nid = \"wrong\"\ncommand = \"ci -n 4 -d 4\"\npath = \"/invariants/signature\"\nexpected = \"101\"\ncitation = \"deliberately off by one\""
    )
    .unwrap();
    let out =
        Command::new(env!("CARGO_BIN_EXE_rslab")).arg("verify-paper").env("RSLAB_MANIFEST", &f.0).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  ok"));
    assert!(text.contains("FAIL  wrong"));
    assert!(text.contains("expected 101 got 100"));
    assert!(text.contains("deliberately off by one"));
    assert!(text.contains("1 of 2 entries passed"));
    std::fs::remove_file(&f.0).unwrap();
}

#[test]
fn unreadable_manifest_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_rslab"))
        .arg("verify-paper")
        .env("RSLAB_MANIFEST", "/nonexistent/manifest.toml")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("rslab-manifest-{}.toml", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
