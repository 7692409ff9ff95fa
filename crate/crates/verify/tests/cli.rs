use std::process::Command;

fn verify() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verify"))
}

#[test]
fn list_prints_every_suite() {
    let out = verify().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(names, racah_verify::SUITES.to_vec());
}

#[test]
fn unknown_suite_is_an_error() {
    let out = verify().args(["run", "no-such-suite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let st = verify()
            .args(["run", "duality-racah", "--tier", "smoke", "--seed", "7", "--out"])
            .arg(&path)
            .env("RACAH_VERIFY_WORKERS", if name == "a.json" { "1" } else { "3" })
            .status()
            .unwrap();
        assert!(st.success());
        std::fs::read(path).unwrap()
    };
    let a = run("a.json");
    let b = run("b.json");
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "duality-racah");
    assert_eq!(v["pass"], true);
    assert!(v["checks"][0]["inputs_digest"].as_str().unwrap().len() == 16);
}

#[test]
fn fault_makes_run_fail() {
    let out = verify()
        .args(["run", "appendix-golden", "--tier", "smoke", "--fault", "D10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["config"]["fault"], "D10");
}

#[test]
fn all_writes_index() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify().args(["all", "--tier", "smoke", "--out"]).arg(dir.path()).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let index: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("index.json")).unwrap()).unwrap();
    assert_eq!(index["suites"].as_array().unwrap().len(), 16);
    assert!(dir.path().join("whipple.json").exists());
}

#[test]
fn eval_prints_exact_fraction() {
    // p = 1, n = 1: -((a+b+2) x - (a+1) N) / (-N (b+1)) with a = b = 1, N = 4, x = 1
    let out = verify().args(["eval", "hahn", "--n", "1", "--x", "1", "--params", "1,1,4"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "-1/2");
}

#[test]
fn eval_rejects_unknown_family() {
    let out = verify().args(["eval", "legendre", "--n", "1", "--x", "0", "--params", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_operator_and_gram() {
    let out = verify().args(["export", "operator", "racah-x", "--p", "1", "--j", "1"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    let out = verify().args(["export", "gram", "--p", "2", "--n", "2", "--seed", "3"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 6);
    assert_eq!(m[0][1], "0");
}
