//! The self-verification suite: machine checks of the identities the three
//! evaluation methods rest on, reported check by check with the first
//! counterexample when one exists.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bell::{bell_closed, bell_enum, bell_rec, bell_rec_row};
use crate::combinatorics::{stirling2, stirling2_via_gf};
use crate::exact::{binomial, factorial};
use crate::series::Series;
use crate::{
    bern_bell, bern_doublesum, bern_series, bernoulli_number, generating_series, lambda_seq,
    BigInt, Rational,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: u32,
    pub max_a: u32,
    /// Upper bound on `n` for the partition-enumeration route, which is
    /// exponential.
    pub enum_cap: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 20,
            max_a: 4,
            enum_cap: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub range: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

fn pass(name: &str, range: String) -> CheckResult {
    CheckResult {
        name: name.to_owned(),
        range,
        pass: true,
        counterexample: None,
    }
}

fn fail(name: &str, range: String, counterexample: String) -> CheckResult {
    CheckResult {
        name: name.to_owned(),
        range,
        pass: false,
        counterexample: Some(counterexample),
    }
}

/// Runs every check against the shared Stirling table.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    run_with_stirling(opts, stirling2)
}

/// Runs every check with a caller-supplied Stirling source feeding the
/// generating-function comparison; the seam tests use to prove the suite
/// actually detects a corrupted table.
pub fn run_with_stirling(
    opts: &VerifyOptions,
    s2: impl Fn(usize, usize) -> BigInt,
) -> VerifyReport {
    let checks = vec![
        check_cross_method(opts),
        check_lambda_consistency(opts),
        check_egf_product(opts),
        check_bell_agreement(opts),
        check_stirling_gf(opts, &s2),
        check_hockey_stick(opts),
        check_derivative(opts),
        check_odd_bernoulli(),
    ];
    let overall = checks.iter().all(|c| c.pass);
    VerifyReport { checks, overall }
}

/// All three methods produce the same exact polynomial.
fn check_cross_method(o: &VerifyOptions) -> CheckResult {
    let name = "cross-method-equality";
    let range = format!("0 <= n <= {}; 1 <= a <= {}", o.max_n, o.max_a);
    for a in 1..=o.max_a {
        for n in 0..=o.max_n {
            let b = bern_bell(n, a).expect("a >= 1").poly;
            let d = bern_doublesum(n, a).expect("a >= 1").poly;
            let s = bern_series(n, a).poly;
            if b != d || b != s {
                return fail(
                    name,
                    range,
                    format!("n={n} a={a}: bell=[{b}] doublesum=[{d}] series=[{s}]"),
                );
            }
        }
    }
    pass(name, range)
}

/// The closed-form lambda terms equal the EGF coefficients of the
/// generating series.
fn check_lambda_consistency(o: &VerifyOptions) -> CheckResult {
    let name = "lambda-egf-consistency";
    let range = format!("1 <= m <= {}; 1 <= a <= {}", o.max_n, o.max_a);
    if o.max_n == 0 {
        return pass(name, range);
    }
    for a in 1..=o.max_a {
        let g = generating_series(a, o.max_n as usize);
        let lambda = lambda_seq(a, o.max_n);
        for m in 1..=o.max_n as usize {
            let egf = g.egf_coeff(m);
            if &egf != lambda.term(m) {
                return fail(
                    name,
                    range,
                    format!("m={m} a={a}: closed-form=[{}] egf=[{egf}]", lambda.term(m)),
                );
            }
        }
    }
    pass(name, range)
}

/// The defining identity: sum_k B_k^a(-x) t^k/k! times the generating
/// series is exactly 1 through the truncation order.
fn check_egf_product(o: &VerifyOptions) -> CheckResult {
    let name = "egf-product-identity";
    let range = format!("order <= {}; 1 <= a <= {}", o.max_n, o.max_a);
    for a in 1..=o.max_a {
        let g = generating_series(a, o.max_n as usize);
        let f = Series::from_coeffs(
            (0..=o.max_n)
                .map(|k| {
                    bern_bell(k, a)
                        .expect("a >= 1")
                        .poly
                        .reflect()
                        .scale(&Rational::new(BigInt::one(), factorial(k as u64)))
                })
                .collect(),
        );
        let product = f.mul(&g).expect("orders agree");
        let one = Series::one(o.max_n as usize);
        if product != one {
            let m = (0..=o.max_n as usize)
                .find(|&m| product.coeff(m) != one.coeff(m))
                .expect("some coefficient differs");
            return fail(
                name,
                range,
                format!("a={a}: coefficient of t^{m} is [{}]", product.coeff(m)),
            );
        }
    }
    pass(name, range)
}

/// Enumeration, recurrence, and closed form agree on the Bell polynomials
/// of the lambda sequence; the exponential enumeration stops at `enum_cap`.
fn check_bell_agreement(o: &VerifyOptions) -> CheckResult {
    let name = "bell-three-way-agreement";
    let range = format!(
        "0 <= k <= n <= {} (enumeration n <= {}); 1 <= a <= {}",
        o.max_n, o.enum_cap, o.max_a
    );
    for a in 1..=o.max_a {
        let lambda = lambda_seq(a, o.max_n.max(1));
        for n in 0..=o.max_n {
            let row = bell_rec_row(n, lambda.terms()).expect("lambda long enough");
            // k runs past n to pin the degenerate k > n behavior as well.
            for k in 0..=n + 2 {
                let rec = if k <= n {
                    row[k as usize].clone()
                } else {
                    bell_rec(n, k, lambda.terms()).expect("corner case")
                };
                let closed = bell_closed(n, k, a);
                if rec != closed {
                    return fail(
                        name,
                        range,
                        format!("n={n} k={k} a={a}: recurrence=[{rec}] closed=[{closed}]"),
                    );
                }
                if n <= o.enum_cap && k <= n {
                    let single = bell_rec(n, k, lambda.terms()).expect("lambda long enough");
                    if single != rec {
                        return fail(
                            name,
                            range,
                            format!("n={n} k={k} a={a}: single-entry recurrence disagrees with row"),
                        );
                    }
                    let enumerated = bell_enum(n, k, lambda.terms()).expect("lambda long enough");
                    if enumerated != rec {
                        return fail(
                            name,
                            range,
                            format!(
                                "n={n} k={k} a={a}: enumeration=[{enumerated}] recurrence=[{rec}]"
                            ),
                        );
                    }
                }
            }
        }
    }
    pass(name, range)
}

/// The recurrence-built table matches the generating-function expansion.
fn check_stirling_gf(o: &VerifyOptions, s2: &impl Fn(usize, usize) -> BigInt) -> CheckResult {
    let name = "stirling-gf";
    let range = format!("0 <= k <= n <= {}", o.max_n);
    for n in 0..=o.max_n as usize {
        for k in 0..=n {
            let table = Rational::from_integer(s2(n, k));
            let gf = stirling2_via_gf(n, k);
            if table != gf {
                return fail(
                    name,
                    range,
                    format!("n={n} k={k}: table={table} series-expansion={gf}"),
                );
            }
        }
    }
    pass(name, range)
}

/// sum_{k=r}^{n} C(k, r) = C(n+1, r+1).
fn check_hockey_stick(o: &VerifyOptions) -> CheckResult {
    let name = "hockey-stick";
    let lim = (o.max_n as u64).max(30);
    let range = format!("0 <= r <= n <= {lim}");
    for n in 0..=lim {
        for r in 0..=n {
            let mut lhs = BigInt::zero();
            for k in r..=n {
                lhs += binomial(k, r as i64);
            }
            let rhs = binomial(n + 1, r as i64 + 1);
            if lhs != rhs {
                return fail(name, range, format!("n={n} r={r}: sum={lhs} binomial={rhs}"));
            }
        }
    }
    pass(name, range)
}

/// d/dx B_n^a(x) = n * B_{n-1}^a(x).
fn check_derivative(o: &VerifyOptions) -> CheckResult {
    let name = "derivative-identity";
    let range = format!("1 <= n <= {}; 1 <= a <= {}", o.max_n, o.max_a);
    for a in 1..=o.max_a {
        for n in 1..=o.max_n {
            let derived = bern_doublesum(n, a).expect("a >= 1").poly.derivative();
            let scaled = bern_doublesum(n - 1, a)
                .expect("a >= 1")
                .poly
                .scale(&Rational::from_integer(n.into()));
            if derived != scaled {
                return fail(
                    name,
                    range,
                    format!("n={n} a={a}: derivative=[{derived}] n*previous=[{scaled}]"),
                );
            }
        }
    }
    pass(name, range)
}

/// B_{2k+1} = 0 for k >= 1.
fn check_odd_bernoulli() -> CheckResult {
    let name = "odd-bernoulli-vanishing";
    let range = "1 <= k <= 12".to_owned();
    for k in 1..=12u32 {
        let b = bernoulli_number(2 * k + 1);
        if !b.is_zero() {
            return fail(name, range, format!("B_{} = {b}", 2 * k + 1));
        }
    }
    pass(name, range)
}
