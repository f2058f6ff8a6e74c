//! Exact rational arithmetic and linear algebra.
//!
//! Everything downstream (feasibility, orientations, homology ranks,
//! definiteness certificates) goes through the routines here. No floating
//! point is used anywhere in this crate.

mod definiteness;
mod elimination;
mod matrix;

pub use definiteness::{definiteness, diagonalize, quadratic_form, DefinitenessCertificate, Verdict};
pub use elimination::{det_sign, determinant, kernel_basis, rank, solve_affine};
pub use matrix::QMatrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational in canonical form (positive denominator, reduced).
pub type Rational = BigRational;

/// A vector of exact rationals.
pub type QVector = Vec<Rational>;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn ints(values: &[i64]) -> QVector {
    values.iter().map(|&v| int(v)).collect()
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(value: &Rational) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Parses `p`, `-p` or `p/q` with `q > 0`. The result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let text = text.trim();
    let is_int = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match text.split_once('/') {
        None => {
            if !is_int(text) {
                return Err(bad());
            }
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            if !is_int(p) || q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let n: BigInt = p.parse().map_err(|_| bad())?;
            let d: BigInt = q.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Least common multiple of the denominators of `values`.
pub(crate) fn common_denominator(values: &[Rational]) -> BigInt {
    use num_integer::Integer;
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
