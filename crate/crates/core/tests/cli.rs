use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qstring(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstring"))
        .args(args)
        .current_dir(dir)
        .env_remove("QSTRING_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().expect("object").keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

#[test]
fn lcs_record_shape() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p.txt"), "abcabcd\nxxabcab\n").unwrap();
    let out = qstring(&["lcs", "--algo", "exact", "p.txt"], dir.path());
    assert!(out.status.success());
    let rec = stdout_json(&out);
    assert_eq!(
        keys(&rec),
        [
            "algorithm",
            "answer",
            "epsilon",
            "ledger",
            "n",
            "oracle_answer",
            "problem",
            "seed",
            "success",
            "ulam",
            "wall_ms",
            "witness"
        ]
    );
    assert_eq!(keys(&rec["ledger"]), ["breakdown", "charged_cost", "sim_reads"]);
    assert_eq!(keys(&rec["witness"]), ["kind", "length", "pos_a", "pos_b", "value"]);
    assert_eq!(rec["answer"], 5);
    assert_eq!(rec["oracle_answer"], 5);
    assert_eq!(rec["success"], true);
}

#[test]
fn separate_files_and_approx() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a.txt"), "banana\n").unwrap();
    std::fs::write(dir.path().join("b.txt"), "ananas\n").unwrap();
    let out = qstring(&["lcs", "--algo", "approx", "--epsilon", "0.25", "a.txt", "b.txt"], dir.path());
    assert!(out.status.success());
    let rec = stdout_json(&out);
    assert_eq!(rec["oracle_answer"], 5);
    assert!(rec["answer"].as_u64().unwrap() >= 4);
}

#[test]
fn lps_runs() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s.txt"), "xyabacabaq\n").unwrap();
    let out = qstring(&["lps", "s.txt"], dir.path());
    assert!(out.status.success());
    let rec = stdout_json(&out);
    assert_eq!(rec["answer"], 7);
    assert_eq!(rec["witness"]["kind"], "palindrome");
}

#[test]
fn gen_then_ulam() {
    let dir = tempfile::tempdir().unwrap();
    let out = qstring(
        &["gen", "--kind", "ulam-swap", "--params", "n=50,ell=7", "--seed", "3", "--out", "inst"],
        dir.path(),
    );
    assert!(out.status.success());
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("inst/ulam-swap-3.json")).unwrap()).unwrap();
    assert_eq!(keys(&sidecar), ["generator", "params", "planted_answer", "seed"]);
    let out = qstring(&["ulam", "--epsilon", "0.3", "inst/ulam-swap-3.txt"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rec = stdout_json(&out);
    let v = rec["answer"].as_f64().unwrap();
    assert!((1.4..=2.6).contains(&v), "answer {v}");
    assert_eq!(rec["oracle_answer"], 2);
    assert!(rec["ulam"]["path"].is_string());
}

#[test]
fn usage_and_input_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p.txt"), "ab\nba\n").unwrap();
    for args in [
        vec!["lcs", "--algo", "bogus", "p.txt"],
        vec!["lcs", "--algo", "approx", "p.txt"],
        vec!["lcs", "--algo", "exact", "missing.txt"],
        vec!["ulam", "p.txt"],
        vec!["frobnicate"],
        vec!["gen", "--kind", "ulam-swap", "--params", "n=5,ell=9", "--out", "x"],
    ] {
        let out = qstring(&args, dir.path());
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        let err = stderr_json(&out);
        assert_eq!(err["error"]["exit_code"], 3);
        assert!(err["error"]["message"].as_str().is_some_and(|m| !m.is_empty()));
    }
}

#[test]
fn bench_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_qstring"))
            .args(["bench", "--problem", "lps", "--algo", "decide", "--n-grid", "2^6..2^8", "--trials", "6", "--csv", name])
            .current_dir(dir.path())
            .env("QSTRING_SEED", "9")
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let fit: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(fit["kind"], "slope");
        std::fs::read_to_string(dir.path().join(name)).unwrap()
    };
    let (a, b) = (run("a.csv"), run("b.csv"));
    assert_eq!(a, b);
    assert_eq!(
        a.lines().next().unwrap(),
        "problem,algo,n,d,epsilon,trials,success_rate,mean_charged_cost,mean_sim_reads,slope_window"
    );
    assert_eq!(a.lines().count(), 4);
}
