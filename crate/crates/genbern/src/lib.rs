//! Exact generalized Bernoulli polynomials `B_n^a(x)` of nonnegative integer
//! order `a`, defined by the generating function `(t/(e^t - 1))^a e^{xt}`,
//! computed three independent ways:
//!
//! * [`bern_bell`] — a finite Bell-polynomial sum over the derivative
//!   sequence of `((e^t - 1)/t)^a e^{xt}`,
//! * [`bern_doublesum`] — a fully explicit double sum over Stirling numbers
//!   of the second kind,
//! * [`bern_series`] — the reciprocal of the truncated generating series,
//!   which serves as the independent oracle for the other two.
//!
//! Everything is computed in exact rational arithmetic, so the three routes
//! must agree coefficient for coefficient; the [`verify`] module machine
//! checks that they do, along with the identities the closed forms rest on.

pub mod bell;
pub mod bernoulli;
pub mod combinatorics;
pub mod exact;
pub mod poly;
pub mod render;
pub mod series;
pub mod verify;

use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

pub use bernoulli::{
    bern, bern_bell, bern_doublesum, bern_series, bernoulli_number, generating_series, lambda_seq,
    BernError, BernResult, LambdaSeq, Method,
};
pub use exact::{binomial, factorial, parse_rational, rat, BigInt, ExactError, Rational};
pub use poly::Poly;
pub use series::Series;

/// Minimal coefficient-ring interface shared by the series and Bell-polynomial
/// machinery: ring operations plus an embedding of the rational scalars and a
/// partial inverse. Exact rationals and dense polynomials over them both
/// implement it, so the same generic code runs with either.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {
    /// Embeds an exact rational scalar into the ring.
    fn from_rat(r: &Rational) -> Self;

    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn try_invert(&self) -> Option<Self>;
}

/// Dense polynomial over exact rationals, the workhorse coefficient type.
pub type RatPoly = Poly<Rational>;

/// Truncated power series with rational coefficients.
pub type RatSeries = Series<Rational>;

/// Truncated power series with polynomial coefficients.
pub type PolySeries = Series<RatPoly>;
