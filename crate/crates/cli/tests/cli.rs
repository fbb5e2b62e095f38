use std::process::{Command, Output};

use serde_json::Value;

fn gga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gga")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = gga(args);
    let code = out.status.code().unwrap();
    let json = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (code, json)
}

fn check_names(r: &Value) -> Vec<String> {
    r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect()
}

fn assert_consistent(code: i32, r: &Value) {
    let all_passed = r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true);
    assert_eq!(r["status"] == "pass", all_passed);
    assert_eq!(code == 0, all_passed);
}

#[test]
fn build_d4_full() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d4.json");
    let (code, r) = report(&["build", "--algebra", "d4", "--mask", "full", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["stats"]["nonzero_twist_keys"], 42);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file["d"], 4);
    assert_eq!(file["mask"].as_array().unwrap().len(), 8);
    assert_eq!(file["twist"].as_object().unwrap().len(), 42);
}

#[test]
fn build_g2_gx_to_stdout() {
    let out = gga(&["build", "--algebra", "g2", "--mask", "gx"]);
    assert!(out.status.success());
    let file: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(file["d"], 2);
    assert_eq!(file["mask"].as_array().unwrap().len(), 7);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gga(&["build", "--algebra", "e8"]).status.code(), Some(2));
    assert_eq!(gga(&["contract", "--algebra", "d4", "--map", "eta:0"]).status.code(), Some(2));
    assert_eq!(gga(&["contract", "--algebra", "d4", "--map", "T99"]).status.code(), Some(2));
    assert_eq!(gga(&["rep", "--which", "rho4"]).status.code(), Some(2));
    let out = gga(&["build", "--algebra", "d4", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_catalog_algebras() {
    let (code, r) = report(&["verify", "--algebra", "d4", "--mask", "full"]);
    assert_consistent(code, &r);
    assert_eq!(code, 0);
    let names = check_names(&r);
    for want in ["center dim 4", "Killing constant -12", "oracle match"] {
        assert!(names.iter().any(|n| n == want), "{want} in {names:?}");
    }
    let (code, r) = report(&["verify", "--algebra", "b3", "--mask", "full"]);
    assert_eq!(code, 0);
    let names = check_names(&r);
    assert!(names.contains(&"center dim 3".to_string()) && names.contains(&"Killing constant -10".to_string()));
    let (code, r) = report(&["verify", "--algebra", "g2", "--mask", "gx"]);
    assert_eq!(code, 0);
    let names = check_names(&r);
    for want in ["dim 14", "Killing constant -8", "Killing nondegenerate"] {
        assert!(names.iter().any(|n| n == want), "{want} in {names:?}");
    }
}

#[test]
fn build_load_verify_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    for (alg, mask) in [("d4", "full"), ("b3", "gx"), ("g2", "full")] {
        let path = dir.path().join(format!("{alg}-{mask}.json"));
        let p = path.to_str().unwrap();
        assert_eq!(gga(&["build", "--algebra", alg, "--mask", mask, "--out", p]).status.code(), Some(0));
        let (c1, from_file) = report(&["verify", "--input", p]);
        let (c2, in_memory) = report(&["verify", "--algebra", alg, "--mask", mask]);
        assert_eq!((c1, c2), (0, 0));
        let file_checks: Vec<&Value> = from_file["checks"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| c["name"] != "matches catalog construction")
            .collect();
        let memory_checks: Vec<&Value> = in_memory["checks"].as_array().unwrap().iter().collect();
        assert_eq!(file_checks, memory_checks);
        assert_eq!(from_file["stats"], in_memory["stats"]);
    }
}

#[test]
fn reports_are_deterministic() {
    let a = gga(&["killing", "--algebra", "g2", "--mask", "gx"]);
    let b = gga(&["killing", "--algebra", "g2", "--mask", "gx"]);
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["stats"]["diagonal_blocks"]["g1"], serde_json::json!([["-16", "0"], ["0", "-48"]]));
    assert!(r.get("timing_seconds").is_none());
    let (_, timed) = report(&["--timing", "killing", "--algebra", "g2", "--mask", "gx"]);
    assert!(timed["timing_seconds"].is_number());
}

#[test]
fn nice_sets_classify() {
    let (code, r) = report(&["nice-sets", "enumerate", "--classify"]);
    assert_consistent(code, &r);
    assert_eq!(code, 0);
    let orbits = r["stats"]["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 24);
    assert!(orbits.iter().all(|o| o["catalog"].as_array().unwrap().len() == 1));
    let singletons: Vec<&str> =
        orbits.iter().filter(|o| o["size"] == 1).map(|o| o["canonical"].as_str().unwrap()).collect();
    assert!(singletons.contains(&"{}"));
}

#[test]
fn contract_examples() {
    let (code, r) = report(&["contract", "--algebra", "g2", "--map", "T1", "--mask", "gx"]);
    assert_eq!(code, 0);
    assert_eq!(r["stats"]["fingerprint"]["dim"], 14);
    assert_eq!(r["stats"]["fingerprint"]["abelian"], true);
    let (code, r) = report(&["contract", "--algebra", "d4", "--map", "beta:2,3", "--mask", "full"]);
    assert_eq!(code, 0);
    assert_eq!(r["stats"]["fingerprint"]["dim"], 32);
    let (code, r) = report(&["contract", "--algebra", "b3", "--map", "mu:-1/2"]);
    assert_consistent(code, &r);
    assert_eq!(code, 0);
}

#[test]
fn survey_rows() {
    let (code, r) = report(&["survey", "--algebra", "d4", "--mask", "full"]);
    assert_eq!(code, 0);
    let rows = r["stats"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 27);
    assert!(rows.iter().all(|x| x["lie"] == true && x["fingerprint"]["dim"] == 32));
    let (code, r) = report(&["survey", "--algebra", "g2,b3", "--mask", "gx", "--map", "T8", "--map", "T10"]);
    assert_eq!(code, 0);
    let rows = r["stats"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["fingerprint"], rows[1]["fingerprint"]);
    assert_eq!(rows[2]["fingerprint"], rows[3]["fingerprint"]);
}

#[test]
fn rep_checks() {
    for which in ["rho1", "rho2", "rho3", "b3", "g2"] {
        let (code, r) = report(&["rep", "--which", which, "--check"]);
        assert_consistent(code, &r);
        assert_eq!(code, 0, "{which}: {r}");
    }
    let (_, r) = report(&["rep", "--which", "g2"]);
    assert_eq!(r["stats"]["module_dim"], 7);
    assert_eq!(r["stats"]["source_dim"], 14);
}
