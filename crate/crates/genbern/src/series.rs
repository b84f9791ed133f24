//! Truncated formal power series over a coefficient ring.
//!
//! A series stores the ordinary coefficients of `t^0..t^N` explicitly; the
//! truncation order `N` is the length minus one, and arithmetic requires
//! both operands to carry the same order. Exponential-generating-function
//! values are exposed through [`Series::egf_coeff`], which rescales by `n!`.

use std::fmt;

use num_traits::One;

use crate::exact::factorial;
use crate::{BigInt, Coeff, Poly, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    OrderMismatch { left: usize, right: usize },
    NonInvertibleLeadingCoefficient,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "series truncation orders differ: {left} vs {right}")
            }
            SeriesError::NonInvertibleLeadingCoefficient => {
                write!(f, "constant term is not a unit, series has no reciprocal")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

impl<C: Coeff> Series<C> {
    /// Wraps explicit coefficients `c_0..c_N`; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the t^0 slot");
        Series { coeffs }
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = C::one();
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Ordinary coefficient of `t^i`.
    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    /// EGF coefficient: `n! * c_n`.
    pub fn egf_coeff(&self, n: usize) -> C {
        C::from_rat(&Rational::from_integer(factorial(n as u64))) * self.coeffs[n].clone()
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Rebuilds the series over another coefficient ring.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplicative inverse up to the truncation order, by the recurrence
    /// `g_0 = 1/c_0`, `g_m = -(1/c_0) * sum_{i=1..m} c_i g_{m-i}`.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0]
            .try_invert()
            .ok_or(SeriesError::NonInvertibleLeadingCoefficient)?;
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for m in 1..n {
            let mut s = C::zero();
            for i in 1..=m {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                s = s + self.coeffs[i].clone() * out[m - i].clone();
            }
            out.push(-(c0_inv.clone() * s));
        }
        Ok(Series { coeffs: out })
    }

    /// `f^a` by repeated squaring; `f^0` is the constant series 1.
    pub fn pow(&self, a: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("orders agree");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders agree");
            }
        }
        acc
    }
}

/// `(e^t - 1)/t` truncated at `order`: the coefficient of `t^l` is
/// `1/(l+1)!`.
pub fn expm1_over_t(order: usize) -> Series<Rational> {
    Series::from_coeffs(
        (0..=order)
            .map(|l| Rational::new(BigInt::one(), factorial(l as u64 + 1)))
            .collect(),
    )
}

/// `e^{xt}` with polynomial coefficients: the coefficient of `t^k` is
/// `x^k / k!`.
pub fn exp_xt(order: usize) -> Series<Poly<Rational>> {
    Series::from_coeffs(
        (0..=order)
            .map(|k| Poly::monomial(Rational::new(BigInt::one(), factorial(k as u64)), k))
            .collect(),
    )
}
