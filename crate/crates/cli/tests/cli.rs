//! End-to-end tests of the `kummer` binary: worked examples, exit codes,
//! output determinism, and the checked-in golden sweep tables.

use std::process::{Command, Output};

fn kummer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kummer(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn factor_worked_example_is_byte_exact() {
    let out = stdout(&["factor", "--lambda", "5", "--coeffs", "2,1,0,0,0", "--format", "json"]);
    assert_eq!(
        out.trim_end(),
        r#"{"norm":11,"entries":[{"q":11,"f":1,"xi":9,"multiplicity":1}]}"#
    );
}

#[test]
fn factor_of_lambda_uses_the_ramified_divisor() {
    let out = stdout(&["factor", "--lambda", "5", "--coeffs", "5,0,0,0,0", "--format", "json"]);
    assert_eq!(
        out.trim_end(),
        r#"{"norm":625,"entries":[{"q":5,"f":1,"kind":"lambda","multiplicity":4}]}"#
    );
}

#[test]
fn divisors_notes_the_inert_prime() {
    let out = stdout(&["divisors", "--lambda", "5", "--q", "2"]);
    assert!(out.contains("f=4 e=1"));
    assert!(out.contains("actual prime: 2"));
}

#[test]
fn geometry_radical_axis_worked_example() {
    let out = stdout(&[
        "geometry", "radical-axis", "--c1", "0,0,25", "--c2", "6,0,25", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["radicalAxis"]["a"], serde_json::json!(1));
    assert_eq!(v["radicalAxis"]["b"], serde_json::json!(0));
    assert_eq!(v["radicalAxis"]["c"], serde_json::json!(3));
    assert_eq!(v["agree"], serde_json::json!(true));
    assert_eq!(v["commonChord"]["halfDistanceSq"], serde_json::json!("16"));
    // disjoint circles: permanent definition only
    let out = stdout(&[
        "geometry", "radical-axis", "--c1", "0,0,1", "--c2", "10,0,1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["radicalAxis"]["c"], serde_json::json!(5));
    assert!(v["commonChord"].is_null());
}

#[test]
fn geometry_chord_ideal_case() {
    let out = stdout(&["geometry", "chord", "--a", "2", "--b", "1", "--x0", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], serde_json::json!("ideal"));
    assert_eq!(v["halfChordSq"], serde_json::json!("3"));
    assert_eq!(v["OPrime"][0], serde_json::json!("1"));
    assert_eq!(v["sectionRelation"], serde_json::json!(true));
    assert_eq!(v["chordPowerRelation"], serde_json::json!(true));
    assert_eq!(v["endpointsOnCarrierConic"], serde_json::json!(true));
}

#[test]
fn input_errors_exit_one() {
    // non-prime lambda
    let out = kummer(&["norm", "--lambda", "9", "--coeffs", "1,0,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    // malformed coefficient list
    let out = kummer(&["norm", "--lambda", "5", "--coeffs", "1,banana,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    // wrong length
    let out = kummer(&["norm", "--lambda", "5", "--coeffs", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    // non-prime q
    let out = kummer(&["divisors", "--lambda", "5", "--q", "15"]);
    assert_eq!(out.status.code(), Some(1));
    // unknown subcommand is an input error too
    let out = kummer(&["transmogrify"]);
    assert_eq!(out.status.code(), Some(1));
    // desk-scale lambda guard, lifted by --allow-large
    let coeffs37: String = std::iter::once("1".to_string())
        .chain((1..37).map(|_| "0".to_string()))
        .collect::<Vec<_>>()
        .join(",");
    let out = kummer(&["norm", "--lambda", "37", "--coeffs", &coeffs37]);
    assert_eq!(out.status.code(), Some(1));
    let out = kummer(&["norm", "--lambda", "37", "--coeffs", &coeffs37, "--allow-large"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn concentric_circles_are_an_input_error() {
    let out = kummer(&["geometry", "radical-axis", "--c1", "1,2,4", "--c2", "1,2,9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_and_text_carry_the_same_numbers() {
    let text = stdout(&["valuation", "--lambda", "5", "--q", "5", "--g", "5,0,0,0,0"]);
    assert!(text.contains("= 4"));
    let json = stdout(&[
        "valuation", "--lambda", "5", "--q", "5", "--g", "5,0,0,0,0", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["valuation"], serde_json::json!(4));

    let text = stdout(&["eval", "--lambda", "5", "--g", "2,1,0,0,0", "--xi", "9", "--modulus", "11"]);
    assert!(text.contains("= 0"));
    let json = stdout(&[
        "eval", "--lambda", "5", "--g", "2,1,0,0,0", "--xi", "9", "--modulus", "11", "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["value"], serde_json::json!(0));
}

#[test]
fn search_reports_bounded_evidence_with_exit_zero() {
    let out = kummer(&[
        "search", "--lambda", "5", "--q", "7", "--support", "1", "--bound", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bounded evidence"));
}

#[test]
fn json_output_round_trips_and_is_deterministic() {
    let args = ["sweep", "--lambda", "5", "--q-max", "20", "--format", "json"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b, "sweep output is not byte-deterministic");
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["q"].is_u64());
    }
}

#[test]
fn golden_sweep_tables_match() {
    for (lambda, extra) in [
        ("3", vec![]),
        ("5", vec![]),
        ("7", vec![]),
        ("13", vec![]),
        ("23", vec!["--support", "3", "--bound", "1"]),
    ] {
        for (fmt, ext) in [("text", "txt"), ("json", "jsonl")] {
            let mut args = vec!["sweep", "--lambda", lambda, "--q-max", "50", "--format", fmt];
            args.extend(extra.iter());
            let out = stdout(&args);
            let golden_path = format!(
                "{}/tests/golden/sweep_lambda{lambda}_q50.{ext}",
                env!("CARGO_MANIFEST_DIR")
            );
            let golden = std::fs::read_to_string(&golden_path).unwrap();
            assert_eq!(out, golden, "golden mismatch for lambda={lambda} format={fmt}");
        }
    }
}
