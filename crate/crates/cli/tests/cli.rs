use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;
use trig_nderiv::{table, tan_table_closed, DerivSpec, Function};
use trig_nderiv_cli::wire::{parse_csv, parse_json, write_csv, write_json};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trig-nderiv"));
    cmd.env_remove("TRIG_NDERIV_MAX_ORDER");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn trig-nderiv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_tan_json() {
    let o = run(&["table", "tan", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(text.ends_with('\n'));
    let rec: Value = serde_json::from_str(lines[3]).unwrap();
    assert_eq!(rec["function"], "tan");
    assert_eq!(rec["order"], 4);
    assert_eq!(rec["denom"], "cos");
    assert_eq!(rec["denom_power"], 5);
    assert_eq!(
        rec["terms"],
        serde_json::json!([{"k":1,"kind":"sin","coeff":"22"},{"k":3,"kind":"sin","coeff":"-2"}])
    );
}

#[test]
fn table_first_rows() {
    let o = run(&["table", "tan", "1"]);
    let rec: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["terms"], serde_json::json!([{"k":0,"kind":"cos","coeff":"1"}]));

    let o = run(&["table", "cot", "1"]);
    let rec: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["terms"], serde_json::json!([{"k":0,"kind":"cos","coeff":"-1"}]));
    assert_eq!(rec["denom"], "sin");
}

#[test]
fn table_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cot.csv");
    let o = run(&["table", "cot", "12", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("order,harmonic,kind,coefficient\n"));
    let tables = parse_csv(Function::Cot, &text).unwrap();
    let expected: Vec<_> = (1..=12).map(|n| table(DerivSpec::cot(n).unwrap()).unwrap()).collect();
    assert_eq!(tables, expected);
}

#[test]
fn eval_examples() {
    let value = |args: &[&str]| -> f64 {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        stdout(&o).trim().parse().unwrap()
    };
    assert_eq!(value(&["eval", "tan", "3", "0.0"]), 2.0);
    assert!((value(&["eval", "tan", "2", "0.7853981633974483"]) - 4.0).abs() < 1e-9);
    assert!((value(&["eval", "cot", "1", "1.5707963267948966"]) + 1.0).abs() < 1e-12);
    assert!((value(&["eval", "tan", "2", "pi/4"]) - 4.0).abs() < 1e-9);
    assert!((value(&["eval", "tan", "1", "-pi/4"]) - 2.0).abs() < 1e-12);
}

#[test]
fn eval_pole_exit_code() {
    let o = run(&["eval", "tan", "2", "1.5707963267948966"]);
    assert_eq!(o.status.code(), Some(4));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("pole of tan at x = pi/2"), "{err}");

    let o = run(&["eval", "cot", "1", "3.14159", "--guard", "1e-3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8(o.stderr).unwrap().contains("pole of cot at x = pi"));
}

#[test]
fn usage_and_io_exit_codes() {
    assert_eq!(run(&["table", "tan"]).status.code(), Some(2));
    assert_eq!(run(&["table", "tan", "3", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "tan", "1", "one"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "tan", "3", "--out", "/no/such/dir/t.json"]).status.code(), Some(3));
}

#[test]
fn max_order_env_cap() {
    assert_eq!(run(&["latex", "tan", "201"]).status.code(), Some(2));
    assert_eq!(run(&["latex", "tan", "200"]).status.code(), Some(0));

    let o = bin().args(["table", "tan", "11"]).env("TRIG_NDERIV_MAX_ORDER", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin().args(["table", "tan", "10"]).env("TRIG_NDERIV_MAX_ORDER", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = bin().args(["table", "tan", "1"]).env("TRIG_NDERIV_MAX_ORDER", "lots").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report["max_order"], 10);
    let per_order = report["per_order"].as_array().unwrap();
    assert_eq!(per_order.len(), 10);
    assert!(per_order.iter().all(|r| r["status"] == "pass" && r["first_mismatch"].is_null()));
    assert!(per_order[9]["tan_row"].as_array().unwrap().contains(&Value::from("2620708")));
    assert!(report["elapsed_ms"].as_f64().unwrap() >= 0.0);
    assert_eq!(report["engines_compared"].as_array().unwrap().len(), 5);

    let o = run(&["verify", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bench_reports() {
    let o = run(&["bench", "20", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let engines = report["engines"].as_array().unwrap();
    assert_eq!(engines.len(), 3);
    assert!(engines.iter().all(|e| e["median_ms"].as_array().unwrap().len() == 20));
    assert!(report["recurrence_within_closed_form_total"].is_boolean());

    let o = run(&["bench", "1", "--repeats", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report["repeats"], 1);
}

#[test]
fn latex_examples() {
    let o = run(&["latex", "tan", "1"]);
    assert_eq!(stdout(&o), "\\frac{1}{\\cos^{2}x}\\left(1\\right)\n");
    let o = run(&["latex", "tan", "4"]);
    let s = stdout(&o);
    assert!(s.contains("22\\sin(x)") && s.contains("-2\\sin(3x)"), "{s}");
    let o = run(&["latex", "cot", "2"]);
    let s = stdout(&o);
    assert!(s.contains("\\sin^{3}x") && s.contains("2\\cos(x)"), "{s}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn json_and_csv_round_trip(function in prop_oneof![Just(Function::Tan), Just(Function::Cot)], max in 1u32..=60) {
        let tables: Vec<_> = (1..=max).map(|n| table(DerivSpec::new(function, n).unwrap()).unwrap()).collect();

        let mut json = Vec::new();
        write_json(&tables, &mut json).unwrap();
        prop_assert_eq!(&parse_json(std::str::from_utf8(&json).unwrap()).unwrap(), &tables);

        let mut csv = Vec::new();
        write_csv(&tables, &mut csv).unwrap();
        prop_assert_eq!(&parse_csv(function, std::str::from_utf8(&csv).unwrap()).unwrap(), &tables);
    }
}

#[test]
fn large_coefficients_stay_exact() {
    let row = tan_table_closed(60).unwrap();
    let mut json = Vec::new();
    write_json(std::slice::from_ref(&row), &mut json).unwrap();
    let text = String::from_utf8(json).unwrap();
    // far beyond 2^64, and preserved digit for digit
    let widest = row.coeffs().map(|c| c.to_string().len()).max().unwrap();
    assert!(widest > 20);
    assert_eq!(parse_json(&text).unwrap()[0], row);
}
