use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primeflags")).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

const CASES: &[(&str, &[&str])] = &[
    ("seq_lcyr.csv", &["seq", "--kind", "lcyr", "--nmax", "18", "--format", "csv"]),
    ("seq_tlcyr.csv", &["seq", "--kind", "tlcyr", "--nmax", "18", "--format", "csv"]),
    ("seq_ell.csv", &["seq", "--kind", "ell", "--nmax", "18", "--format", "csv"]),
    ("spectrum_1_1_1.txt", &["spectrum", "--lambda", "1,1,1"]),
    ("witness_11_4.txt", &["witness", "--n", "11", "--N", "4"]),
    ("witness_7_5.txt", &["witness", "--n", "7", "--N", "5"]),
    ("companion_2_3_1.txt", &["companion", "--lambda", "2,3,1"]),
    ("genfun_gamma_4.txt", &["genfun", "--kind", "gamma", "--m", "4"]),
    ("diag_ell_3.txt", &["diag", "--kind", "ell", "--k", "3"]),
    ("goldbach_100.txt", &["goldbach", "--nmax", "100"]),
    ("fabry_29.csv", &["fabry", "--n", "29", "--divisions", "10"]),
    ("classify_2_2_1.json", &["classify", "--lambda", "2,2,1", "--format", "json"]),
];

#[test]
fn golden_files_regenerate() {
    for (file, args) in CASES {
        let out = run(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["spectrum", "--lambda", "2,1,1", "--format", "json"][..], &["goldbach", "--nmax", "60", "--format", "csv"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["frobnicate"]), Some(64));
    let out = run(&["frobnicate"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(code(&[]), Some(64));
    assert_eq!(code(&["spectrum", "--lambda", "1,0,2"]), Some(2));
    assert_eq!(code(&["seq", "--kind", "nope"]), Some(2));
    assert_eq!(code(&["spectrum", "--lambda", "1,1,1", "--q", "1/0,2"]), Some(2));
    assert_eq!(code(&["simplicity", "--lambda", "3,3,3"]), Some(3));
    assert_eq!(code(&["fabry", "--n", "104729"]), Some(3));
    assert_eq!(code(&["fabry", "--n", "40", "--precision-bits", "50"]), Some(2));
}

#[test]
fn rational_q_specialization() {
    let out = run(&["spectrum", "--lambda", "1,1,1", "--q", "1/2,1/2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "zeta^6 - 12*zeta^4 - 60*zeta^2 - 64");
    let out = run(&["spectrum", "--lambda", "1,1,1", "--q", "1/3,0"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(27*zeta^6 - 108*zeta^4 + 144*zeta^2 - 64)/27");
    let json = run(&["simplicity", "--lambda", "2,1,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["simple"], serde_json::Value::Bool(false));
}
