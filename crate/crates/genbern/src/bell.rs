//! Partial (incomplete exponential) Bell polynomials `B_{n,k}` over a
//! generic coefficient sequence, computed three ways: by enumerating
//! partitions, by the standard recurrence, and — for the sequence attached
//! to a generating-series order `a` — by a closed form in Stirling numbers.
//!
//! Conventions at the corners: `B_{0,0} = 1`, `B_{n,0} = 0` for `n > 0`,
//! `B_{0,k} = 0` for `k > 0`, and `B_{n,k} = 0` for `k > n`. These are the
//! unique values consistent with the generating-function identity
//! `sum_n B_{n,k} t^n/n! = (1/k!) (sum_j lambda_j t^j/j!)^k`.

use std::fmt;

use num_traits::{One, Pow, Zero};

use crate::combinatorics::{enumerate_partitions, stirling2};
use crate::exact::{binomial, factorial};
use crate::{BigInt, Coeff, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BellError {
    /// The coefficient sequence is shorter than the `n - k + 1` terms the
    /// requested `B_{n,k}` reads.
    InsufficientSequence { needed: usize, got: usize },
}

impl fmt::Display for BellError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BellError::InsufficientSequence { needed, got } => write!(
                f,
                "coefficient sequence too short: need {needed} terms, got {got}"
            ),
        }
    }
}

impl std::error::Error for BellError {}

/// Corner-case values shared by all three routes; `None` means the generic
/// formulas apply.
fn corner<C: Coeff>(n: u32, k: u32) -> Option<C> {
    if n == 0 && k == 0 {
        Some(C::one())
    } else if k == 0 || k > n {
        Some(C::zero())
    } else {
        None
    }
}

fn check_len<C>(n: u32, k: u32, seq: &[C]) -> Result<usize, BellError> {
    let needed = (n - k + 1) as usize;
    if seq.len() < needed {
        Err(BellError::InsufficientSequence {
            needed,
            got: seq.len(),
        })
    } else {
        Ok(needed)
    }
}

fn ring_pow<C: Coeff>(base: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// `B_{n,k}(lambda_1, ..., lambda_{n-k+1})` as the sum over partitions of
/// `n` into `k` parts: for each multiplicity vector, the term is
/// `n!/(prod l_i!) * prod (lambda_i / i!)^{l_i}`.
///
/// `seq[i-1]` holds `lambda_i`. Exponential in `n`; intended as an oracle
/// for [`bell_rec`], which is the production path.
pub fn bell_enum<C: Coeff>(n: u32, k: u32, seq: &[C]) -> Result<C, BellError> {
    if let Some(v) = corner(n, k) {
        return Ok(v);
    }
    check_len(n, k, seq)?;
    let n_fact = factorial(n as u64);
    let mut total = C::zero();
    for mult in enumerate_partitions(n, k) {
        let mut denom = BigInt::one();
        let mut product = C::one();
        for (idx, &l) in mult.iter().enumerate() {
            if l == 0 {
                continue;
            }
            let part = idx as u64 + 1;
            denom *= factorial(l as u64);
            denom *= factorial(part).pow(l);
            product = product * ring_pow(&seq[idx], l);
        }
        let scalar = Rational::new(n_fact.clone(), denom);
        total = total + C::from_rat(&scalar) * product;
    }
    Ok(total)
}

/// Same value as [`bell_enum`], via the polynomial-time recurrence
/// `B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) lambda_i B_{n-i, k-1}`.
pub fn bell_rec<C: Coeff>(n: u32, k: u32, seq: &[C]) -> Result<C, BellError> {
    if let Some(v) = corner(n, k) {
        return Ok(v);
    }
    check_len(n, k, seq)?;
    // Padding with zeros changes nothing: B_{n,k} never reads lambda beyond
    // index n-k+1, and the padded entries kill every term that would.
    let table = if seq.len() >= n as usize {
        bell_table(n as usize, k as usize, seq)
    } else {
        let mut padded = seq.to_vec();
        padded.resize(n as usize, C::zero());
        bell_table(n as usize, k as usize, &padded)
    };
    Ok(table[n as usize][k as usize].clone())
}

/// The whole row `B_{n,0}, B_{n,1}, ..., B_{n,n}` from one table pass.
/// Requires `seq` to cover `lambda_1..lambda_n` (for `n >= 1`).
pub fn bell_rec_row<C: Coeff>(n: u32, seq: &[C]) -> Result<Vec<C>, BellError> {
    if n == 0 {
        return Ok(vec![C::one()]);
    }
    if seq.len() < n as usize {
        return Err(BellError::InsufficientSequence {
            needed: n as usize,
            got: seq.len(),
        });
    }
    Ok(bell_table(n as usize, n as usize, seq).pop().expect("n+1 rows"))
}

/// Bottom-up table of `B_{m,j}` for `0 <= j <= min(m, k_max)`, `m <= n`.
/// `seq` must cover `lambda_1..lambda_n`.
fn bell_table<C: Coeff>(n: usize, k_max: usize, seq: &[C]) -> Vec<Vec<C>> {
    let mut table: Vec<Vec<C>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let cols = m.min(k_max);
        let mut row = vec![C::zero(); cols + 1];
        if m == 0 {
            row[0] = C::one();
        }
        for j in 1..=cols {
            let mut acc = C::zero();
            for i in 1..=(m - j + 1) {
                let lam = &seq[i - 1];
                if lam.is_zero() {
                    continue;
                }
                let prev = &table[m - i][j - 1];
                if prev.is_zero() {
                    continue;
                }
                let w = Rational::from_integer(binomial(m as u64 - 1, i as i64 - 1));
                acc = acc + C::from_rat(&w) * lam.clone() * prev.clone();
            }
            row[j] = acc;
        }
        table.push(row);
    }
    table
}

/// Closed form for `B_{n,k}` over the derivative sequence of
/// `((e^t - 1)/t)^a e^{xt}`, as a polynomial in `x`:
///
/// `(1/k!) sum_{r=0}^{k} (-1)^{k-r} C(k,r)
///     sum_{l=0}^{n} S(l+ar, ar) (rx)^{n-l} C(n,l) / C(l+ar, ar)`
///
/// with `0^0 = 1` at the corner terms. Agrees with [`bell_enum`] and
/// [`bell_rec`] applied to [`crate::lambda_seq`], including the vanishing
/// for `n < k`.
pub fn bell_closed(n: u32, k: u32, a: u32) -> Poly<Rational> {
    assert!(a >= 1, "the closed form needs a positive order");
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for r in 0..=k {
        let ar = (a as usize) * (r as usize);
        let mut outer = binomial(k as u64, r as i64);
        if (k - r) % 2 == 1 {
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
    Poly::from_coeffs(coeffs).scale(&Rational::new(BigInt::one(), factorial(k as u64)))
}
