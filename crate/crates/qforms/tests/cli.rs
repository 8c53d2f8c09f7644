use std::process::Command;

use qforms::main_with_args;
use qforms_core::laplace::su2_eigenvalue;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = main_with_args(std::iter::once("qforms").chain(args.iter().copied()));
    assert!(code != 0 || err.is_empty(), "{err}");
    let v = if out.is_empty() { Value::Null } else { serde_json::from_str(&out).unwrap_or(Value::String(out)) };
    (code, v)
}

fn bin(args: &[&str], max_dim: Option<&str>) -> std::process::Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_qforms"));
    c.args(args);
    match max_dim {
        Some(m) => c.env("QFORMS_MAX_DIM", m),
        None => c.env_remove("QFORMS_MAX_DIM"),
    };
    c.output().unwrap()
}

#[test]
fn dims_for_n2() {
    let (code, v) = run(&["dims", "--n", "2", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::json!([1, 4, 6, 4, 1]));
}

#[test]
fn probabilistic_mode_needs_a_seed() {
    assert_eq!(run(&["dims", "--n", "2", "--max-degree", "2", "--mode", "probabilistic"]).0, 2);
    assert_eq!(run(&["dims", "--n", "2", "--max-degree", "2", "--mode", "auto"]).0, 2);
    let (code, v) = run(&["dims", "--n", "2", "--max-degree", "2", "--mode", "probabilistic", "--seed", "3"]);
    assert_eq!((code, v), (0, serde_json::json!([1, 4, 6])));
}

#[test]
fn dims_past_the_bound_are_truncated() {
    let out = bin(&["dims", "--n", "2", "--max-degree", "3"], Some("16"));
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!([1, 4, 6, null]));
}

#[test]
fn suites_beyond_the_bound_report_truncation() {
    let out = bin(&["verify-metric", "--n", "5"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource bound"));
    assert_eq!(bin(&["braid-check", "--n", "2"], Some("63")).status.code(), Some(3));
    assert_eq!(bin(&["braid-check", "--n", "2"], Some("x")).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["dims"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["spectrum", "--n", "2", "--max-boxes", "1", "--at", "1"]).0, 2);
    assert_eq!(run(&["spectrum", "--n", "2", "--max-boxes", "1", "--at", "-1"]).0, 2);
    assert_eq!(run(&["spectrum", "--n", "2", "--max-boxes", "1", "--at", "0"]).0, 2);
    assert_eq!(run(&["spectrum", "--n", "2", "--max-boxes", "1", "--at", "z"]).0, 2);
    assert_eq!(run(&["laplace-oracle", "--n", "2", "--m", "3"]).0, 2);
    assert_eq!(run(&["verify-metric", "--n", "0"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn spectrum_single_box() {
    let (code, v) = run(&["spectrum", "--n", "2", "--max-boxes", "1"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["diagram"], serde_json::json!([1, 0]));
    assert_eq!(rows[0]["E"], su2_eigenvalue(1).unwrap().to_text());
    assert_eq!(rows[0]["value"], Value::Null);
}

#[test]
fn spectrum_values_and_classical_column() {
    let (code, v) = run(&["spectrum", "--n", "2", "--max-boxes", "2", "--at", "3/2", "--classical"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    let diagrams: Vec<&Value> = rows.iter().map(|r| &r["diagram"]).collect();
    assert_eq!(diagrams, [&serde_json::json!([1, 0]), &serde_json::json!([2, 0]), &serde_json::json!([1, 1])]);
    assert_eq!(rows[0]["value"], "(3325)/(648)");
    assert_eq!(rows[0]["classical"], "(3)/(2)");
    assert_eq!(rows[2]["value"], "(0)");
    assert_eq!(rows[2]["classical"], "(0)");
}

#[test]
fn csv_quotes_rational_functions() {
    let (code, out, _) = main_with_args(["qforms", "--format", "csv", "spectrum", "--n", "2", "--max-boxes", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "\"diagram\",\"E\",\"value\",\"classical\"");
    assert!(lines[1].starts_with("\"[1,0]\",\"(2*z^8"), "{}", lines[1]);
    let (_, out, _) = main_with_args(["qforms", "dims", "--n", "2", "--max-degree", "1", "--format", "csv"]);
    assert_eq!(out, "\"degree\",\"dim\"\n0,1\n1,4\n");
}

#[test]
fn text_format_is_aligned() {
    let (code, out, _) = main_with_args(["qforms", "--format", "text", "dims", "--n", "2", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "degree  dim\n0       1\n1       4\n2       6\n");
}

#[test]
fn suites_carry_anchors_and_pass() {
    for cmd in ["verify-metric", "braid-check"] {
        let (code, v) = run(&[cmd, "--n", "2"]);
        assert_eq!(code, 0, "{cmd}");
        assert_eq!(v["passed"], true);
        assert_eq!(v["suite"], cmd);
        for c in v["checks"].as_array().unwrap() {
            assert!(!c["anchor"].as_str().unwrap().is_empty());
            assert_eq!(c["passed"], true, "{}", c["name"]);
        }
    }
}

#[test]
fn rform_dump_is_one_based() {
    let (code, v) = run(&["rform", "--n", "2"]);
    assert_eq!(code, 0);
    let first = &v["tables"][0];
    assert_eq!(first["name"], "r(u^i_j, u^k_l)");
    assert_eq!(first["entries"][0]["index"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(first["entries"][0]["value"], "(z)");
    assert_eq!(v["tables"].as_array().unwrap().len(), 3);
    assert_eq!(v["f"]["rows"], 2);
    assert_eq!(v["antipode_duality"], true);
}

#[test]
fn hodge_matrix_dump() {
    let (code, v) = run(&["hodge", "--n", "2", "--k", "1", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["n0"], 4);
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["matrix"]["rows"], 4);
    assert_eq!(v["matrix"]["cols"], 4);
    for e in v["matrix"]["entries"].as_array().unwrap() {
        let r = e[0].as_u64().unwrap();
        let c = e[1].as_u64().unwrap();
        assert!((1..=4).contains(&r) && (1..=4).contains(&c));
        assert!(e[2].is_string());
    }
    let (code, v) = run(&["hodge", "--n", "2", "--k", "4", "--side", "right", "--tau", "minus", "--sign", "minus"]);
    assert_eq!(code, 0);
    assert_eq!(v["matrix"]["rows"], 1);
    assert_eq!(run(&["hodge", "--n", "2", "--k", "5"]).0, 2);
}

#[test]
fn laplace_oracles_agree() {
    for (n, m) in [("2", "1"), ("2", "2"), ("3", "1")] {
        let (code, v) = run(&["laplace-oracle", "--n", n, "--m", m]);
        assert_eq!(code, 0, "N={n} m={m}");
        assert_eq!(v["passed"], true);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["expected"].is_string()));
    }
}
