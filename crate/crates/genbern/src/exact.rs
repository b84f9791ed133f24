//! Exact scalar arithmetic: arbitrary-precision integers, canonical
//! rationals, factorials, and binomial coefficients. No floating point
//! appears anywhere downstream of this module.

use std::fmt;
use std::sync::RwLock;

pub use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Coeff;

/// Arbitrary-precision rational in canonical form: reduced, denominator
/// positive, zero represented as `0/1`. Canonicalization happens at
/// construction, so equality is structural. The textual form is `"p/q"`,
/// or `"p"` when the value is an integer, and round-trips through
/// [`parse_rational`].
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    DivisionByZero,
    InvalidRational(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::InvalidRational(s) => write!(f, "invalid rational literal: {s:?}"),
        }
    }
}

impl std::error::Error for ExactError {}

/// `p/q` as a canonical rational.
///
/// Panics on `q == 0`; use [`parse_rational`] for fallible construction.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. The result is canonical (`"2/4"` parses to
/// `1/2`); zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    s.parse::<Rational>()
        .map_err(|_| ExactError::InvalidRational(s.to_owned()))
}

/// Exact quotient; errors on a zero divisor.
pub fn try_div(a: &Rational, b: &Rational) -> Result<Rational, ExactError> {
    if b.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Multiplicative inverse; errors on zero.
pub fn try_inv(r: &Rational) -> Result<Rational, ExactError> {
    if r.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(r.recip())
    }
}

/// `r^e` for a nonnegative integer exponent, with `r^0 = 1` for every `r`.
pub fn rat_pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

/// `n!` by iterated multiplication.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Rows of the Pascal triangle kept memoized; larger `n` falls back to the
/// multiplicative formula.
pub const PASCAL_ROW_CAP: usize = 256;

static PASCAL: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// Binomial coefficient `C(n, k)`.
///
/// Out-of-range `k` (negative or above `n`) yields zero, so sums indexed
/// past their support vanish termwise.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    if (n as usize) < PASCAL_ROW_CAP {
        pascal_lookup(n as usize, k as usize)
    } else {
        // C(n,k) = prod_{i=1..k} (n-k+i)/i; every prefix is an exact integer.
        let mut acc = BigInt::one();
        for i in 1..=k {
            acc = acc * (n - k + i) / i;
        }
        acc
    }
}

fn pascal_lookup(n: usize, k: usize) -> BigInt {
    {
        let rows = PASCAL.read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let mut row = vec![BigInt::one(); m + 1];
        for j in 1..m {
            row[j] = &rows[m - 1][j - 1] + &rows[m - 1][j];
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

impl Coeff for Rational {
    fn from_rat(r: &Rational) -> Self {
        r.clone()
    }

    fn try_invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}
