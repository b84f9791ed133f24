//! Acceptance suite: every release gate as one test, each printing a
//! pass/fail line. All comparisons are exact rational equality — there are
//! no tolerances anywhere.

use genbern::bell::{bell_closed, bell_enum, bell_rec, bell_rec_row};
use genbern::combinatorics::{stirling2, stirling2_via_gf};
use genbern::render::{
    parse_bell_json, parse_bern_json, parse_bernoulli_json, parse_table_json, parse_verify_json,
    render_bell, render_bern, render_bernoulli, render_table, render_verify, BellEval,
    OutputFormat,
};
use genbern::series::expm1_over_t;
use genbern::{
    bern, bern_bell, bern_doublesum, bern_series, bernoulli_number, binomial, factorial,
    generating_series, lambda_seq, rat, BigInt, Method, Rational, Series,
};
use num_traits::{One, Zero};
use std::process::Command;

fn report(criterion: &str) {
    println!("[PASS] {criterion}");
}

#[test]
fn cross_method_equality() {
    for a in 1..=5u32 {
        for n in 0..=25u32 {
            let b = bern_bell(n, a).unwrap().poly;
            let d = bern_doublesum(n, a).unwrap().poly;
            let s = bern_series(n, a).poly;
            assert_eq!(b, d, "bell vs doublesum at n={n} a={a}");
            assert_eq!(b, s, "bell vs series at n={n} a={a}");
        }
    }
    report("cross-method equality: identical exact polynomials for 0 <= n <= 25, 1 <= a <= 5");
}

#[test]
fn lambda_sequence_matches_generating_series() {
    for a in 1..=4u32 {
        let g = generating_series(a, 20);
        let lambda = lambda_seq(a, 20);
        for m in 1..=20usize {
            assert_eq!(
                &g.egf_coeff(m),
                lambda.term(m),
                "lambda_{m} vs EGF coefficient at a={a}"
            );
        }
    }
    report("lambda consistency: closed-form lambda_m equals m!*[t^m] of the generating series for m <= 20, a <= 4");
}

#[test]
fn egf_defining_identity() {
    let order = 20usize;
    for a in 1..=3u32 {
        let g = generating_series(a, order);
        let reflected = Series::from_coeffs(
            (0..=order as u32)
                .map(|k| {
                    bern_bell(k, a)
                        .unwrap()
                        .poly
                        .reflect()
                        .scale(&Rational::new(BigInt::one(), factorial(k as u64)))
                })
                .collect(),
        );
        assert_eq!(
            reflected.mul(&g).unwrap(),
            Series::one(order),
            "defining identity at a={a}"
        );
    }
    report("EGF defining identity: sum B_k^a(-x) t^k/k! times the generating series is 1 through t^20 for a in 1..=3");
}

#[test]
fn bell_three_way_agreement() {
    for a in 1..=3u32 {
        let lambda = lambda_seq(a, 25);
        for n in 0..=25u32 {
            let row = bell_rec_row(n, lambda.terms()).unwrap();
            for k in 0..=n {
                let rec = &row[k as usize];
                let closed = bell_closed(n, k, a);
                assert_eq!(rec, &closed, "recurrence vs closed form at n={n} k={k} a={a}");
                if n <= 12 {
                    let enumerated = bell_enum(n, k, lambda.terms()).unwrap();
                    let single = bell_rec(n, k, lambda.terms()).unwrap();
                    assert_eq!(enumerated, single, "enumeration vs recurrence at n={n} k={k} a={a}");
                    assert_eq!(&single, rec, "single entry vs row at n={n} k={k} a={a}");
                }
            }
            // Degenerate k > n: both routes vanish.
            for k in n + 1..=n + 2 {
                assert!(bell_rec(n, k, lambda.terms()).unwrap().is_zero());
                assert!(bell_closed(n, k, a).is_zero());
            }
        }
    }
    report("Bell three-way agreement: enumeration = recurrence = closed form for n <= 12, two-way to n <= 25, a in 1..=3");
}

#[test]
fn bernoulli_numbers_reproduce_series_oracle() {
    // The oracle: ordinary coefficients of t/(e^t - 1) are B_n/n!.
    let oracle = expm1_over_t(40).recip().unwrap();
    for n in 0..=40u32 {
        assert_eq!(
            bernoulli_number(n),
            oracle.egf_coeff(n as usize),
            "Bell-sum formula vs reciprocal series at n={n}"
        );
    }
    // The same numbers sit at x = 0 of the order-1 polynomials.
    for n in 0..=20u32 {
        assert_eq!(
            bernoulli_number(n),
            bern_series(n, 1).poly.eval(&rat(0, 1)),
            "B_{n} vs polynomial at zero"
        );
    }
    let frozen = [
        (1u32, rat(-1, 2)),
        (2, rat(1, 6)),
        (4, rat(-1, 30)),
        (10, rat(5, 66)),
        (12, rat(-691, 2730)),
    ];
    for (n, expected) in frozen {
        assert_eq!(bernoulli_number(n), expected, "frozen value B_{n}");
    }
    for k in 1..=12u32 {
        assert!(bernoulli_number(2 * k + 1).is_zero(), "B_{} = 0", 2 * k + 1);
    }
    report("Bernoulli reproduction: Bell-sum formula matches the reciprocal-series oracle for n <= 40, frozen values and odd vanishing included");
}

#[test]
fn stirling_recurrence_matches_generating_function() {
    for n in 0..=20usize {
        for k in 0..=n {
            assert_eq!(
                Rational::from_integer(stirling2(n, k)),
                stirling2_via_gf(n, k),
                "S({n},{k})"
            );
        }
    }
    report("Stirling oracle: recurrence-built S(n,k) matches the generating-function expansion for n <= 20");
}

#[test]
fn hockey_stick_identity() {
    for n in 0..=30u64 {
        for r in 0..=n {
            let mut sum = BigInt::zero();
            for k in r..=n {
                sum += binomial(k, r as i64);
            }
            assert_eq!(sum, binomial(n + 1, r as i64 + 1), "n={n} r={r}");
        }
    }
    report("hockey-stick identity: sum_{k=r}^{n} C(k,r) = C(n+1,r+1) for 0 <= r <= n <= 30");
}

#[test]
fn structural_invariants() {
    for a in 1..=4u32 {
        for n in 0..=20u32 {
            let result = bern(n, a, Method::DoubleSum).unwrap();
            assert_eq!(result.poly.degree(), n as i64, "degree at n={n} a={a}");
            assert_eq!(
                result.poly.leading_coeff(),
                Some(&rat(1, 1)),
                "monicity at n={n} a={a}"
            );
            if n >= 1 {
                let derived = result.poly.derivative();
                let previous = bern(n - 1, a, Method::DoubleSum).unwrap().poly;
                assert_eq!(
                    derived,
                    previous.scale(&Rational::from_integer(n.into())),
                    "derivative identity at n={n} a={a}"
                );
            }
        }
    }
    report("structural invariants: degree n, monic, and d/dx B_n^a = n B_{n-1}^a for n <= 20, a <= 4");
}

#[test]
fn cli_contract() {
    let bin = env!("CARGO_BIN_EXE_genbern");

    // `verify` with defaults exits 0.
    let out = Command::new(bin).arg("verify").output().unwrap();
    assert_eq!(out.status.code(), Some(0), "verify should exit 0");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("overall: PASS"), "{stdout}");

    // JSON outputs round-trip to identical in-memory values and bytes.
    let bern_out = run_ok(bin, &["bern", "--n", "2", "--a", "1", "--format", "json"]);
    assert_eq!(
        bern_out.trim(),
        r#"{"n":2,"a":1,"method":"doublesum","coeffs":["1/6","-1","1"]}"#
    );
    let parsed = parse_bern_json(bern_out.trim()).unwrap();
    assert_eq!(render_bern(&parsed, OutputFormat::Json), bern_out.trim());
    assert_eq!(parsed, bern_doublesum(2, 1).unwrap());

    let table_out = run_ok(bin, &["table", "--max-n", "4", "--a", "2", "--format", "json"]);
    let rows = parse_table_json(table_out.trim()).unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(render_table(&rows, OutputFormat::Json), table_out.trim());

    let bernoulli_out = run_ok(bin, &["bernoulli", "--max-n", "12", "--format", "json"]);
    let values = parse_bernoulli_json(bernoulli_out.trim()).unwrap();
    assert_eq!(values[12], (12, rat(-691, 2730)));
    assert_eq!(
        render_bernoulli(
            &values.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
            OutputFormat::Json
        ),
        bernoulli_out.trim()
    );

    let bell_out = run_ok(
        bin,
        &["bell", "--n", "2", "--k", "1", "--a", "1", "--at-x", "0", "--format", "json"],
    );
    let bell_parsed: BellEval = parse_bell_json(bell_out.trim()).unwrap();
    assert_eq!(bell_parsed.at.as_ref().unwrap().1, rat(1, 3));
    assert_eq!(render_bell(&bell_parsed, OutputFormat::Json), bell_out.trim());

    let verify_out = run_ok(
        bin,
        &["verify", "--max-n", "4", "--max-a", "1", "--enum-cap", "4", "--format", "json"],
    );
    let report_parsed = parse_verify_json(verify_out.trim()).unwrap();
    assert!(report_parsed.overall);
    assert_eq!(render_verify(&report_parsed, OutputFormat::Json), verify_out.trim());

    // The three documented usage errors all exit 2 with a diagnostic naming
    // the offending flag.
    let cases: [(&[&str], &str); 3] = [
        (
            &["bern", "--n", "1", "--a", "0", "--method", "doublesum"],
            "--a",
        ),
        (&["bern", "--n", "2", "--a", "1", "--format", "yaml"], "--format"),
        (
            &["bell", "--n", "2", "--k", "1", "--a", "1", "--at-x", "1/0"],
            "--at-x",
        ),
    ];
    for (args, flag) in cases {
        let out = Command::new(bin).args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?} should exit 2");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert!(stderr.contains(flag), "diagnostic for {args:?} must name {flag}: {stderr}");
    }
    let a_zero = Command::new(bin)
        .args(["bern", "--n", "1", "--a", "0", "--method", "doublesum"])
        .output()
        .unwrap();
    let stderr = String::from_utf8(a_zero.stderr).unwrap();
    assert!(
        stderr.contains("a=0 requires --method series"),
        "documented diagnostic text: {stderr}"
    );

    report("CLI contract: verify exits 0, JSON round-trips, documented usage errors exit 2");
}

fn run_ok(bin: &str, args: &[&str]) -> String {
    let out = Command::new(bin).args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{args:?} should succeed: {:?}", out);
    String::from_utf8(out.stdout).unwrap()
}
