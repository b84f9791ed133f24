//! Contract tests against the built binary: output shapes, exit codes, and
//! the documented example invocations.

use std::process::{Command, Output};

fn genbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genbern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = genbern(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap().trim_end().to_owned()
}

#[test]
fn bern_plain_and_json() {
    assert_eq!(stdout_ok(&["bern", "--n", "0", "--a", "3", "--format", "plain"]), "1");
    assert_eq!(stdout_ok(&["bern", "--n", "2", "--a", "1"]), "x^2 - x + 1/6");
    assert_eq!(
        stdout_ok(&["bern", "--n", "2", "--a", "1", "--format", "json"]),
        r#"{"n":2,"a":1,"method":"doublesum","coeffs":["1/6","-1","1"]}"#
    );
    assert_eq!(
        stdout_ok(&["bern", "--n", "2", "--a", "1", "--format", "latex"]),
        "B_{2}^{1}(x) = x^{2} - x + \\frac{1}{6}"
    );
}

#[test]
fn bern_methods_agree_from_the_cli() {
    let mut outputs = Vec::new();
    for method in ["bell", "doublesum", "series"] {
        let json = stdout_ok(&["bern", "--n", "6", "--a", "2", "--method", method, "--format", "json"]);
        // Strip the method tag before comparing the payloads.
        let stripped = json.replace(&format!("\"method\":\"{method}\""), "\"method\":\"_\"");
        outputs.push(stripped);
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);
}

#[test]
fn bern_series_accepts_order_zero() {
    assert_eq!(
        stdout_ok(&["bern", "--n", "3", "--a", "0", "--method", "series", "--format", "plain"]),
        "x^3"
    );
}

#[test]
fn table_csv_rows_are_padded() {
    assert_eq!(
        stdout_ok(&["table", "--max-n", "1", "--a", "1", "--format", "csv"]),
        "n,c0,c1\n0,1,0\n1,-1/2,1"
    );
    assert_eq!(stdout_ok(&["table", "--max-n", "0", "--a", "2", "--format", "csv"]), "n,c0\n0,1");
}

#[test]
fn table_plain_lists_polynomials() {
    let out = stdout_ok(&["table", "--max-n", "2", "--a", "1"]);
    assert_eq!(out, "B_0^1(x) = 1\nB_1^1(x) = x - 1/2\nB_2^1(x) = x^2 - x + 1/6");
}

#[test]
fn bernoulli_outputs() {
    assert_eq!(
        stdout_ok(&["bernoulli", "--max-n", "4"]),
        "1, -1/2, 1/6, 0, -1/30"
    );
    assert_eq!(stdout_ok(&["bernoulli", "--max-n", "0"]), "1");
    let csv = stdout_ok(&["bernoulli", "--max-n", "12", "--format", "csv"]);
    assert!(csv.starts_with("n,value\n0,1\n"));
    assert!(csv.ends_with("12,-691/2730"));
}

#[test]
fn bell_subcommand() {
    assert_eq!(
        stdout_ok(&["bell", "--n", "2", "--k", "1", "--a", "1", "--at-x", "0"]),
        "1/3"
    );
    assert_eq!(stdout_ok(&["bell", "--n", "0", "--k", "0", "--a", "1"]), "1");
    assert_eq!(stdout_ok(&["bell", "--n", "2", "--k", "3", "--a", "1"]), "0");
    // Negative evaluation points parse.
    let out = genbern(&["bell", "--n", "3", "--k", "2", "--a", "2", "--at-x", "-3/2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_quick_bounds_pass_and_render() {
    let plain = stdout_ok(&["verify", "--max-n", "5", "--max-a", "2", "--enum-cap", "5"]);
    assert!(plain.contains("PASS cross-method-equality"));
    assert!(plain.ends_with("overall: PASS"));
    let csv = stdout_ok(&[
        "verify", "--max-n", "3", "--max-a", "1", "--enum-cap", "3", "--format", "csv",
    ]);
    assert!(csv.starts_with("name,range,pass,counterexample"));
    assert_eq!(csv.lines().count(), 9, "header plus eight checks");
}

#[test]
fn usage_errors_exit_two() {
    // a = 0 outside the series method.
    let out = genbern(&["bern", "--n", "1", "--a", "0", "--method", "doublesum"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("--a"), "{stderr}");
    assert!(stderr.contains("a=0 requires --method series"), "{stderr}");

    // Unknown format value.
    let out = genbern(&["bern", "--n", "2", "--a", "1", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--format"));

    // Malformed rational for --at-x.
    let out = genbern(&["bell", "--n", "2", "--k", "1", "--a", "1", "--at-x", "1/0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--at-x"));

    // Missing required flag and a = 0 on subcommands that cannot take it.
    assert_eq!(genbern(&["bern", "--a", "1"]).status.code(), Some(2));
    assert_eq!(genbern(&["table", "--max-n", "2", "--a", "0"]).status.code(), Some(2));
    assert_eq!(
        genbern(&["bell", "--n", "1", "--k", "1", "--a", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(genbern(&["bern", "--n", "-3", "--a", "1"]).status.code(), Some(2));
}
