use std::process::{Command, Output};

use serde_json::Value;

fn cl23(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cl23"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn diag(entries: &[i64]) -> Value {
    let n = entries.len();
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { entries[i].to_string() } else { "0".into() })
                .collect()
        })
        .collect();
    serde_json::to_value(rows).unwrap()
}

#[test]
fn eval_examples() {
    for (args, expected) in [
        (&["eval", "e2*e1"][..], "-e1*e2"),
        (&["eval", "--algebra", "cl23", "i*i"], "-1"),
        (&["eval", "--algebra", "cl13c", "gamma0*gamma0"], "1"),
        (&["eval", "--algebra", "cl13c", "I*I"], "-1"),
        (&["eval", "-e1 + e1"], "0"),
        (&["eval", "--signature", "1,3", "e1*e1"], "-1"),
    ] {
        let out = cl23(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), expected, "{args:?}");
    }
}

#[test]
fn eval_json_form() {
    let out = cl23(&["eval", "--json", "1/2*e0 - 3*e1*e4"]);
    assert!(out.status.success());
    assert_eq!(
        json(&out),
        serde_json::json!([
            {"blade": [0], "num": "1", "den": "2"},
            {"blade": [1, 4], "num": "-3", "den": "1"},
        ])
    );
}

#[test]
fn parse_errors_exit_2_with_caret() {
    let out = cl23(&["eval", "e1 + (e2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains('^'), "{err}");
    let out = cl23(&["eval", "--algebra", "cl13c", "e1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn adjoint_of_the_five_dimensional_parity() {
    let out = cl23(&["adjoint", "--json", "e1*e2*e3*e4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["matrix"], diag(&[1, -1, -1, -1, -1]));
    let text = stdout(&cl23(&["adjoint", "e1*e2*e3*e4"]));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn adjoint_of_one_is_identity() {
    let out = cl23(&["adjoint", "--json", "1"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["matrix"], diag(&[1, 1, 1, 1, 1]));
    let out = cl23(&["adjoint", "--json", "--signature", "1,3", "1"]);
    assert_eq!(json(&out)["matrix"], diag(&[1, 1, 1, 1]));
}

#[test]
fn adjoint_of_a_null_vector_is_a_domain_error() {
    let out = cl23(&["adjoint", "e0+e1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn twisted_adjoint_of_a_vector_is_a_reflection() {
    let out = cl23(&["adjoint", "--twisted", "--json", "--signature", "1,3", "e0"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["matrix"], diag(&[-1, 1, 1, 1]));
    assert_eq!(v["determinant"], -1);
}

#[test]
fn diagram_check_runs_for_pin13_images() {
    for expr in ["e0", "e1*e2*e3", "3/5 + 4/5*e1*e2"] {
        let out = cl23(&["adjoint", "--check-diagram", "--json", expr]);
        assert!(out.status.success(), "{expr}");
        assert_eq!(json(&out)["diagram"], Value::Bool(true), "{expr}");
    }
    let out = cl23(&["adjoint", "--check-diagram", "--json", "e4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["diagram"], Value::Null);
}

#[test]
fn classify_flags() {
    let out = cl23(&["classify", "--json", "e0*e1"]);
    assert!(out.status.success());
    let flags = &json(&out)["flags"];
    assert_eq!(flags["in_spin"], Value::Bool(true));
    assert_eq!(flags["in_reduced_pin"], Value::Bool(false));
    let out = cl23(&["classify", "--json", "1 + e0*e1*e2"]);
    assert_eq!(json(&out)["flags"]["in_clifford_group"], Value::Bool(false));
}

#[test]
fn embed_and_extract_are_inverse() {
    for kind in ["trivial", "twisted"] {
        let expr = "(1/2 + I)*gamma0 - I*gamma1*gamma2";
        let embedded = stdout(&cl23(&["embed", "--kind", kind, expr]));
        let out = cl23(&["extract", "--kind", kind, &embedded]);
        assert!(out.status.success(), "{kind}");
        assert_eq!(stdout(&out), expr, "{kind}");
    }
    assert_eq!(stdout(&cl23(&["embed", "I"])), "e0*e1*e2*e3*e4");
}

#[test]
fn gamma_matrices_in_the_dirac_basis() {
    let out = cl23(&["gamma", "--basis", "dirac", "--json"]);
    assert!(out.status.success());
    let gammas = json(&out);
    let gammas = gammas.as_array().unwrap();
    assert_eq!(gammas.len(), 4);
    let g0: Vec<Vec<(String, String)>> = gammas[0]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|c| (c["re"].as_str().unwrap().into(), c["im"].as_str().unwrap().into()))
                .collect()
        })
        .collect();
    for (i, row) in g0.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            let re = match (i == j, i < 2) {
                (true, true) => "1",
                (true, false) => "-1",
                _ => "0",
            };
            assert_eq!(c, &(re.to_string(), "0".to_string()), "({i},{j})");
        }
    }
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let first = cl23(&["verify", "all", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    let report = json(&first);
    assert_eq!(report["exit_code"], 0);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 32);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let second = cl23(&["verify", "all", "--json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_suites_carry_anchors() {
    let out = cl23(&["verify", "spinors"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Dirac K-basis"));
    assert!(text.contains("s = e0e1"));
    let out = cl23(&["verify", "groups", "--seed", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Z4"));
}

#[test]
fn unknown_suite_is_rejected() {
    let out = cl23(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
