use std::process::{Command, Output};

use serde_json::Value;

fn fubini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fubini"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = fubini(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(value["schema_version"], "1");
    value
}

fn code(args: &[&str]) -> Option<i32> {
    fubini(args).status.code()
}

fn stdout(args: &[&str]) -> String {
    let out = fubini(args);
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compute_exact() {
    let v = json(&["compute", "--seq", "fubini", "--n", "5"]);
    assert_eq!(v["command"], "compute");
    assert_eq!(v["results"]["value"], "541");
    assert_eq!(v["inputs"]["n"], "5");

    let v = json(&["compute", "--seq", "horse", "--r", "2", "--n", "3"]);
    assert_eq!(v["results"]["value"], "5");
    let v = json(&["compute", "--seq", "fubini_r", "--r", "2", "--n", "3"]);
    assert_eq!(v["results"]["value"], "10");
    let v = json(&["compute", "--seq", "factorial", "--n", "20"]);
    assert_eq!(v["results"]["value"], "2432902008176640000");
}

#[test]
fn big_values_are_decimal_strings() {
    let v = json(&["compute", "--seq", "fubini", "--n", "30"]);
    assert_eq!(
        v["results"]["value"],
        "11403568794011880483742464196184901963"
    );
    let v = json(&[
        "compute", "--seq", "fubini", "--n", "30", "--mod", "1000003",
    ]);
    assert_eq!(v["results"]["value"], "478585");
    assert_eq!(v["inputs"]["modulus"], "1000003");
}

#[test]
fn compute_modular() {
    let v = json(&["compute", "--seq", "fubini", "--n", "4", "--mod", "3"]);
    assert_eq!(v["results"]["value"], "0");
    let v = json(&["compute", "--seq", "factorial", "--n", "5", "--mod", "7"]);
    assert_eq!(v["results"]["value"], "1");
    let v = json(&[
        "compute", "--seq", "horse", "--r", "2", "--n", "3", "--mod", "4",
    ]);
    assert_eq!(v["results"]["value"], "1");
    let v = json(&[
        "compute", "--seq", "fubini_r", "--r", "2", "--n", "3", "--mod", "7",
    ]);
    assert_eq!(v["results"]["value"], "3");
}

#[test]
fn period_reports() {
    let v = json(&["period", "--mod", "15"]);
    let r = &v["results"];
    assert_eq!(r["period"], "4");
    assert_eq!(r["onset"], "1");
    assert_eq!(r["carmichael"], "4");
    assert_eq!(r["onset_within_bound"], true);

    let v = json(&["period", "--mod", "2"]);
    assert_eq!(v["results"]["period"], "1");
    let v = json(&["period", "--mod", "3"]);
    assert_eq!(v["results"]["period"], "2");
    assert_eq!(v["results"]["onset"], "1");

    let v = json(&["period", "--mod", "12", "--r", "2"]);
    assert_eq!(v["results"]["sequence"], "fubini_r");
    assert_eq!(v["results"]["period_divides_carmichael"], true);
}

#[test]
fn render_outputs() {
    assert_eq!(
        stdout(&[
            "render",
            "--matrix",
            "first_signed",
            "--mod",
            "2",
            "--size",
            "4"
        ]),
        "1...\n.1..\n.11.\n..11\n"
    );
    assert_eq!(
        stdout(&["render", "--matrix", "second", "--mod", "2", "--size", "3", "--format", "pbm"]),
        "P1\n3 3\n100\n010\n011\n"
    );
}

#[test]
fn tables() {
    let v = json(&["table", "--seq", "fubini", "--n-max", "4"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    let values: Vec<&str> = rows.iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["1", "1", "3", "13", "75"]);

    assert_eq!(
        stdout(&["table", "--seq", "horse", "--r", "2", "--n-max", "3", "--format", "csv"]),
        "n,value\n2,1\n3,5\n"
    );
}

#[test]
fn verify_small_suites() {
    for (suite, limit) in [("matrix", "10"), ("oracle", "6"), ("lemma", "5")] {
        let v = json(&["verify", "--suite", suite, "--limit", limit]);
        assert_eq!(v["results"]["all_passed"], true, "{suite}");
        assert_eq!(v["results"]["failed"], "0");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["compute", "--seq", "fubini"]), Some(2));
    assert_eq!(code(&["compute", "--seq", "horse", "--n", "3"]), Some(2));
    assert_eq!(
        code(&["compute", "--seq", "fubini", "--n", "3", "--r", "1"]),
        Some(2)
    );
    assert_eq!(code(&["verify", "--suite", "bogus"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));

    assert_eq!(
        code(&["compute", "--seq", "horse", "--r", "4", "--n", "2"]),
        Some(3)
    );
    assert_eq!(
        code(&["compute", "--seq", "fubini", "--n", "2", "--mod", "0"]),
        Some(3)
    );
    assert_eq!(code(&["period", "--mod", "1"]), Some(3));
    assert_eq!(
        code(&["render", "--matrix", "second", "--mod", "1", "--size", "3"]),
        Some(3)
    );
    assert_eq!(
        code(&["render", "--matrix", "second", "--mod", "2", "--size", "1025"]),
        Some(3)
    );
    assert_eq!(
        code(&["table", "--seq", "fubini_r", "--r", "3", "--n-max", "1"]),
        Some(3)
    );
}

#[test]
fn errors_go_to_stderr() {
    let out = fubini(&["compute", "--seq", "horse", "--r", "4", "--n", "2"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("fubini: "));
}
