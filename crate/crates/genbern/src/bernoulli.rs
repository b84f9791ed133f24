//! Generalized Bernoulli polynomials `B_n^a(x)` by three independent exact
//! methods, the derivative sequence they share, and the classical Bernoulli
//! numbers.
//!
//! The generating function `(t/(e^t - 1))^a e^{-xt} = sum_k B_k^a(-x) t^k/k!`
//! produces the reflected orientation; every method here computes `B_n^a(-x)`
//! internally and reflects once at the boundary, so the public results are
//! the standard `B_n^a(x)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Pow, Zero};

use crate::bell::bell_rec_row;
use crate::combinatorics::stirling2;
use crate::exact::{binomial, factorial};
use crate::series::{exp_xt, expm1_over_t, Series};
use crate::{BigInt, Poly, RatPoly, Rational};

/// The three evaluation strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Alternating factorial-weighted sum of partial Bell polynomials.
    Bell,
    /// Explicit double sum over Stirling numbers of the second kind.
    DoubleSum,
    /// Reciprocal of the truncated generating series (the oracle).
    Series,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Bell, Method::DoubleSum, Method::Series];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bell => "bell",
            Method::DoubleSum => "doublesum",
            Method::Series => "series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bell" => Ok(Method::Bell),
            "doublesum" => Ok(Method::DoubleSum),
            "series" => Ok(Method::Series),
            other => Err(format!(
                "unknown method {other:?} (expected bell, doublesum, or series)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BernError {
    /// Order zero makes sense only through the series route; the Bell and
    /// double-sum formulas presuppose `a >= 1`.
    OrderZeroNeedsSeries { method: Method },
}

impl fmt::Display for BernError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BernError::OrderZeroNeedsSeries { method } => {
                write!(f, "a=0 is only supported by the series method, not {method}")
            }
        }
    }
}

impl std::error::Error for BernError {}

/// A computed `B_n^a(x)` in the standard orientation, tagged with the
/// method that produced it. Always monic of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernResult {
    pub n: u32,
    pub a: u32,
    pub method: Method,
    pub poly: RatPoly,
}

/// The derivative sequence of `((e^t - 1)/t)^a e^{xt}` at `t = 0`:
/// `terms[m-1]` holds the degree-`m` monic polynomial
/// `lambda_m = sum_{l=0}^{m} S(l+a, a) x^{m-l} C(m,l) / C(l+a, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeq {
    a: u32,
    terms: Vec<RatPoly>,
}

impl LambdaSeq {
    pub fn order(&self) -> u32 {
        self.a
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `lambda_m`, 1-indexed.
    pub fn term(&self, m: usize) -> &RatPoly {
        &self.terms[m - 1]
    }

    pub fn terms(&self) -> &[RatPoly] {
        &self.terms
    }
}

/// `lambda_1..lambda_M` for order `a >= 1`.
pub fn lambda_seq(a: u32, m_max: u32) -> LambdaSeq {
    assert!(a >= 1, "the lambda sequence needs a positive order");
    assert!(m_max >= 1, "need at least one term");
    let mut terms = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let mut coeffs = vec![Rational::zero(); m as usize + 1];
        for l in 0..=m {
            let num = stirling2((l + a) as usize, a as usize) * binomial(m as u64, l as i64);
            let den = binomial((l + a) as u64, a as i64);
            coeffs[(m - l) as usize] = Rational::new(num, den);
        }
        terms.push(Poly::from_coeffs(coeffs));
    }
    LambdaSeq { a, terms }
}

/// `((e^t - 1)/t)^a e^{xt}` with polynomial coefficients, truncated at
/// `order`. Its EGF coefficients are the lambda sequence, and its
/// reciprocal generates the reflected polynomials `B_n^a(-x)`.
pub fn generating_series(a: u32, order: usize) -> Series<RatPoly> {
    let h_pow = expm1_over_t(order).pow(a);
    h_pow
        .map(|c| Poly::constant(c.clone()))
        .mul(&exp_xt(order))
        .expect("orders agree")
}

fn result(n: u32, a: u32, method: Method, neg_x: RatPoly) -> BernResult {
    BernResult {
        n,
        a,
        method,
        poly: neg_x.reflect(),
    }
}

/// `B_n^a(x)` through the Bell-polynomial sum
/// `B_n^a(-x) = sum_{k=0}^{n} (-1)^k k! B_{n,k}(lambda_1..lambda_{n-k+1})`.
pub fn bern_bell(n: u32, a: u32) -> Result<BernResult, BernError> {
    if a == 0 {
        return Err(BernError::OrderZeroNeedsSeries { method: Method::Bell });
    }
    let neg_x = if n == 0 {
        RatPoly::one()
    } else {
        let lambda = lambda_seq(a, n);
        let row = bell_rec_row(n, lambda.terms()).expect("lambda sized to n");
        let mut acc = RatPoly::zero();
        for (k, b) in row.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let mut w = Rational::from_integer(factorial(k as u64));
            if k % 2 == 1 {
                w = -w;
            }
            acc = acc + b.scale(&w);
        }
        acc
    };
    Ok(result(n, a, Method::Bell, neg_x))
}

/// `B_n^a(x)` through the fully explicit double sum
/// `B_n^a(-x) = sum_{r=0}^{n} C(n+1, r+1) (-1)^r
///              sum_{l=0}^{n} S(l+ar, ar) (rx)^{n-l} C(n,l) / C(l+ar, ar)`
/// with `0^0 = 1` at the corner terms.
pub fn bern_doublesum(n: u32, a: u32) -> Result<BernResult, BernError> {
    if a == 0 {
        return Err(BernError::OrderZeroNeedsSeries {
            method: Method::DoubleSum,
        });
    }
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for r in 0..=n {
        let ar = (a as usize) * (r as usize);
        let mut outer = binomial(n as u64 + 1, r as i64 + 1);
        if r % 2 == 1 {
            outer = -outer;
        }
        for l in 0..=n {
            let s = stirling2(l as usize + ar, ar);
            if s.is_zero() {
                continue;
            }
            let d = (n - l) as usize;
            let r_pow = BigInt::from(r).pow(d as u32);
            if r_pow.is_zero() {
                continue;
            }
            let num = &outer * s * r_pow * binomial(n as u64, l as i64);
            let den = binomial(l as u64 + ar as u64, ar as i64);
            coeffs[d] += Rational::new(num, den);
        }
    }
    Ok(result(n, a, Method::DoubleSum, Poly::from_coeffs(coeffs)))
}

/// `B_n^a(x)` as `n!` times the `t^n` coefficient of the reciprocal of the
/// generating series — the route that goes straight through the defining
/// identity, used as the oracle for the other two. Accepts `a = 0`, where
/// the result is plain `x^n`.
pub fn bern_series(n: u32, a: u32) -> BernResult {
    let g = generating_series(a, n as usize);
    let inv = g.recip().expect("constant term is 1");
    result(n, a, Method::Series, inv.egf_coeff(n as usize))
}

/// Classical Bernoulli number `B_n`: the Bell-polynomial sum over the
/// constant sequence `lambda_m = 1/(m+1)`, which is the order-1 lambda
/// sequence at `x = 0`. Equals `bern_series(n, 1).poly` evaluated at zero.
pub fn bernoulli_number(n: u32) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let seq: Vec<Rational> = (1..=n as i64).map(|m| crate::rat(1, m + 1)).collect();
    let row = bell_rec_row(n, &seq).expect("sequence sized to n");
    let mut acc = Rational::zero();
    for (k, b) in row.iter().enumerate() {
        let mut term = Rational::from_integer(factorial(k as u64)) * b;
        if k % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// Dispatch over the three strategies.
pub fn bern(n: u32, a: u32, method: Method) -> Result<BernResult, BernError> {
    match method {
        Method::Bell => bern_bell(n, a),
        Method::DoubleSum => bern_doublesum(n, a),
        Method::Series => Ok(bern_series(n, a)),
    }
}
