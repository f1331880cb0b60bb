//! End-to-end runs of the `artin` binary.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let o = artin(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn dims(v: &Value) -> Vec<u64> {
    let map = v["dims"].as_object().expect("dims object");
    (0..map.len()).map(|j| map[&j.to_string()].as_u64().unwrap()).collect()
}

const HECKE: &str = r#"{"kind":"squared_braiding","field":"Q","dim_v":2,
  "sigma":[[0,0,"2"],[2,1,"1"],[1,2,"1"],[1,1,"3/2"],[3,3,"2"]]}"#;

fn fixture_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn trivial_b4_on_route_d() {
    let v = json(&["homology", "--family", "B", "--n", "4", "--onedim", "q=1,p=1,u=1", "--route", "D", "--format", "json"]);
    assert_eq!(dims(&v), vec![1, 2, 2, 2, 1]);
    assert_eq!(v["group"], "B");
    assert_eq!(v["route"], "D");
    assert_eq!(v["field"]["kind"], "rationals");
    assert_eq!(v["oracle_match"], true);
}

#[test]
fn sign_coefficients_on_route_f() {
    let v = json(&["homology", "--family", "B", "--n", "2", "--onedim", "q=1,p=-1,u=1", "--route", "F", "--format", "json"]);
    assert_eq!(dims(&v), vec![0, 1, 1]);
}

#[test]
fn braid_group_csv() {
    let o = artin(&["homology", "--family", "A", "--n", "3", "--onedim", "q=1", "--route", "C", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,j,dim\n3,0,1\n3,1,1\n3,2,0\n3,3,0\n");
}

#[test]
fn table_generic_power() {
    let v = json(&["table", "--onedim", "q=2,p=-1/2", "--n-range", "1..5", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let n = row["n"].as_u64().unwrap();
        let total: u64 = dims(row).iter().sum();
        assert_eq!(total > 0, n == 2, "n={n}");
        assert_eq!(row["oracle_match"], true);
    }
}

#[test]
fn cyclotomic_field_table() {
    let v = json(&["table", "--field", "cyclo:m=3", "--onedim", "q=-z,p=z^2", "--n-range", "3", "--format", "json"]);
    assert_eq!(v["case"], "unity_r(m=3,r=2)");
    assert_eq!(v["field"]["m"], 3);
    assert_eq!(dims(&v), vec![0, 1, 2, 1]);
}

#[test]
fn compare_all_routes_with_isomorphisms() {
    let v = json(&[
        "compare", "--family", "B", "--n", "4", "--onedim", "q=1,p=1,u=1", "--routes", "C,D,F", "--matrix-iso", "--format", "json",
    ]);
    assert_eq!(v["agree"], true);
    for r in ["C", "D", "F"] {
        assert_eq!(v["routes"][r]["2"], 2);
    }
    assert_eq!(v["isomorphisms"]["D~C"]["ok"], true);
    assert_eq!(v["isomorphisms"]["F~C"]["ok"], true);
}

#[test]
fn compare_fixture_routes() {
    let f = fixture_file(HECKE);
    let path = f.path().to_str().unwrap();
    let v = json(&["compare", "--family", "B", "--n", "3", "--fixture", path, "--routes", "C,D", "--matrix-iso", "--format", "json"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["routes"]["C"], v["routes"]["D"]);
    assert_eq!(v["oracle_match"], Value::Null);
}

#[test]
fn corrupted_fixture_is_located() {
    let f = fixture_file(&HECKE.replace("3/2", "5/2"));
    let path = f.path().to_str().unwrap();
    let o = artin(&["verify", "--suite", "combinatorics", "--max", "3", "--fixture", path]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL [fixture/validation]"), "{out}");
    assert!(out.contains("braid equation fails on basis vector"), "{out}");
}

#[test]
fn verify_suites_pass() {
    let o = artin(&["verify", "--suite", "all", "--max", "6", "--nmax", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], v["total"]);
    let suites: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["suite"].as_str().unwrap()).collect();
    for s in ["combinatorics", "algebra", "complexes", "routes"] {
        assert!(suites.contains(&s), "missing suite {s}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["homology", "--n", "9", "--onedim", "q=1,p=1"],
        vec!["homology", "--n", "2", "--onedim", "q=1,p=1", "--route", "X"],
        vec!["homology", "--n", "2", "--onedim", "q=0,p=1"],
        vec!["homology", "--n", "2", "--onedim", "q=z,p=1"],
        vec!["homology", "--n", "2"],
        vec!["homology", "--family", "A", "--n", "2", "--onedim", "q=1", "--route", "D"],
        vec!["table", "--n-range", "5..1", "--onedim", "q=1,p=1"],
        vec!["compare", "--n", "2", "--onedim", "q=1,p=1", "--routes", "D,D"],
        vec!["nonsense"],
    ] {
        assert_eq!(artin(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn route_f_needs_separated_coefficients() {
    let f = fixture_file(r#"{"dim_v":1,"dim_w":1,"sigma":[[0,0,"1"]],"tau":[[0,0,"1"]]}"#);
    let o = artin(&["homology", "--n", "2", "--fixture", f.path().to_str().unwrap(), "--route", "F"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("route C or D"));
}

#[test]
fn allow_large_lifts_the_cap() {
    let o = artin(&["homology", "--n", "9", "--onedim", "q=2,p=3", "--allow-large", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn output_is_deterministic() {
    let args = ["compare", "--n", "3", "--onedim", "q=-z,p=z", "--field", "cyclo:m=3", "--format", "json"];
    assert_eq!(artin(&args).stdout, artin(&args).stdout);
}

#[test]
fn table_sign_and_cube_root_patterns() {
    let v = json(&["table", "--onedim", "q=1,p=-1", "--n-range", "1..6", "--format", "json"]);
    for row in v.as_array().unwrap() {
        let n = row["n"].as_u64().unwrap() as usize;
        let want: Vec<u64> = (0..=n).map(|j| u64::from(n.is_multiple_of(2) && j + 1 >= n)).collect();
        assert_eq!(dims(row), want, "n={n}");
    }
    let v = json(&["table", "--field", "cyclo:m=3", "--onedim", "q=-z,p=z", "--n-range", "1..6", "--format", "json"]);
    for row in v.as_array().unwrap() {
        let n = row["n"].as_u64().unwrap() as usize;
        let want: Vec<u64> = (0..=n).map(|j| u64::from(n.is_multiple_of(3) && j + 1 >= n)).collect();
        assert_eq!(dims(row), want, "n={n}");
        assert_eq!(row["oracle_match"], true);
    }
}
