//! Dense univariate polynomials over an exact coefficient ring, in the
//! formal variable `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{Coeff, Rational};

/// `coeffs[i]` multiplies `x^i`. Trailing zero coefficients are trimmed at
/// construction; the zero polynomial is the empty list and its degree is the
/// sentinel `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: T, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The variable `x` itself.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Ascending coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation at `v`.
    pub fn eval(&self, v: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * v.clone() + c.clone())
    }

    /// `p(-x)`: negates the odd-degree coefficients. An involution.
    pub fn reflect(&self) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| T::from_rat(&Rational::from_integer(i.into())) * c.clone())
                .collect(),
        )
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Poly<T>) -> Poly<T> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Poly::from_coeffs(long)
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Coeff> Coeff for Poly<T> {
    fn from_rat(r: &Rational) -> Self {
        Self::constant(T::from_rat(r))
    }

    /// The units are the nonzero constants whose coefficient is itself a
    /// unit; anything of positive degree (and the zero polynomial) has no
    /// inverse here.
    fn try_invert(&self) -> Option<Self> {
        if self.degree() == 0 {
            self.coeffs[0].try_invert().map(Self::constant)
        } else {
            None
        }
    }
}

/// Plain rendering: descending powers, explicit signs, zero terms omitted,
/// e.g. `x^2 - x + 1/6`.
impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
