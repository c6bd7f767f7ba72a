use assert_cmd::Command;
use predicates::str::contains;
use serde_json::Value;

fn rstirling() -> Command {
    Command::cargo_bin("rstirling").expect("binary builds")
}

fn json_of(args: &[&str]) -> Value {
    let out = rstirling().args(args).args(["--format", "json"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn enumerate_csv_matches_golden() {
    let golden = include_str!("golden/enumerate_4_3_2.csv");
    rstirling()
        .args(["enumerate", "--n", "4", "--k", "3", "--r", "2", "--format", "csv"])
        .assert()
        .success()
        .stdout(golden);
}

#[test]
fn enumerate_counts() {
    let doc = json_of(&["enumerate", "--n", "5", "--k", "3", "--r", "0"]);
    assert_eq!(doc["result"]["count"], 150);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["tool"], "rstirling");
    assert_eq!(doc["parameters"]["n"], 5);
    let text = rstirling()
        .args(["enumerate", "--n", "3", "--k", "3", "--r", "3"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(text.stdout).unwrap().lines().count(), 1 + 6);
}

#[test]
fn json_is_deterministic_without_timings() {
    let run = || {
        rstirling()
            .args(["verify", "--suite", "hilbert", "--max-n", "4", "--format", "json", "--no-timings"])
            .output()
            .unwrap()
            .stdout
    };
    let a = run();
    assert_eq!(a, run());
    let doc: Value = serde_json::from_slice(&a).unwrap();
    assert!(doc.get("wall_time_ms").is_none());
    // round trip through the schema fields
    let again: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
    let timed = json_of(&["poly", "schubert", "--perm", "321"]);
    assert!(timed["wall_time_ms"].is_number());
}

#[test]
fn invalid_parameters_are_usage_errors() {
    rstirling()
        .args(["enumerate", "--n", "3", "--k", "4", "--r", "0"])
        .assert()
        .code(2)
        .stderr(contains("invalid parameters"));
    rstirling().args(["enumerate", "--n", "3"]).assert().code(2);
    rstirling()
        .args(["poly", "schubert", "--perm", "1224"])
        .assert()
        .code(2);
}

#[test]
fn poly_outputs() {
    rstirling()
        .args(["poly", "schubert", "--perm", "321"])
        .assert()
        .success()
        .stdout("x1^2*x2\n");
    rstirling()
        .args(["poly", "demazure", "--gamma", "0,0,0,0"])
        .assert()
        .success()
        .stdout("1\n");
    let e5 = rstirling()
        .args(["poly", "elementary", "--d", "5", "--m", "7"])
        .output()
        .unwrap()
        .stdout;
    rstirling()
        .args(["poly", "word-schubert", "--word", "1245555", "--n", "7", "--k", "5"])
        .assert()
        .success()
        .stdout(String::from_utf8(e5).unwrap());
}

#[test]
fn pattern_matrix_text() {
    rstirling()
        .args(["pattern", "--word", "242141", "--k", "4"])
        .assert()
        .success()
        .stdout("0 0 0 1 0 1\n1 * 1 0 * *\n0 0 0 0 0 0\n0 1 0 0 1 *\n");
    let doc = json_of(&["pattern", "--word", "242141", "--k", "4"]);
    assert_eq!(doc["result"]["initial_indices"], serde_json::json!([1, 2, 4]));
}

#[test]
fn verify_hilbert_example() {
    rstirling()
        .args(["verify", "--suite", "hilbert", "--n", "4", "--k", "3", "--r", "2"])
        .assert()
        .success()
        .stdout(contains("1 + 4q + 8q^2 + 9q^3 + 6q^4 + 2q^5"))
        .stdout(contains("overall: PASS"));
}

#[test]
fn verify_all_smallest_case() {
    rstirling()
        .args(["verify", "--suite", "all", "--n", "2", "--k", "2", "--r", "2"])
        .assert()
        .success();
}

#[test]
fn verify_standard_basis_range() {
    rstirling()
        .args(["verify", "--suite", "standard-basis", "--max-n", "5", "--jobs", "2", "--seed", "7"])
        .assert()
        .success();
}

#[test]
fn budget_contract() {
    rstirling()
        .args(["verify", "--suite", "chevalley", "--n", "6", "--k", "2", "--r", "1"])
        .assert()
        .code(3)
        .stderr(contains("budget"));
    rstirling()
        .args(["verify", "--suite", "hilbert", "--n", "7", "--k", "2", "--r", "0"])
        .assert()
        .code(3);
    rstirling()
        .args(["verify", "--suite", "hilbert", "--n", "7", "--k", "2", "--r", "0", "--budget", "7"])
        .assert()
        .code(2);
    rstirling()
        .args([
            "verify", "--suite", "hilbert", "--n", "7", "--k", "2", "--r", "0", "--budget", "7", "--allow-large",
        ])
        .assert()
        .success()
        .stderr(contains("warning"));
    rstirling()
        .env("RSTIRLING_MAX_N", "7")
        .args(["verify", "--suite", "hilbert", "--n", "7", "--k", "2", "--r", "0", "--allow-large"])
        .assert()
        .success();
}

#[test]
fn words_and_codims() {
    let doc = json_of(&["words", "--n", "4", "--k", "3", "--r", "2"]);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    let mut dist = [0u64; 6];
    for r in rows {
        dist[r["codim"].as_u64().unwrap() as usize] += 1;
    }
    assert_eq!(dist, [1, 4, 8, 9, 6, 2]);
}

#[test]
fn verify_csv_has_one_row_per_check() {
    let out = rstirling()
        .args(["verify", "--suite", "demazure", "hilbert", "--max-n", "3", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // 16 triples with n <= 3, two suites
    assert_eq!(text.lines().count(), 1 + 32);
    assert!(text.starts_with("suite,n,k,r,verdict,summary\n"));
}
