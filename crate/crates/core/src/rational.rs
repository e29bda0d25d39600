//! The scalar type: arbitrary-precision rationals in lowest terms.
//!
//! `Rational` is a re-export of [`num_rational::BigRational`], which keeps
//! exactly the canonical form used throughout this crate: numerator and
//! denominator coprime, denominator positive, zero stored as `0/1`.

use alloc::string::{String, ToString};
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Dimension of the degree-`d` graded piece of a polynomial ring in `vars`
/// variables: `C(vars - 1 + d, vars - 1)`, and zero for `d < 0`.
pub fn poly_dim(d: i64, vars: usize) -> BigInt {
    binomial(vars as i64 - 1 + d, vars as i64 - 1)
}

/// Same as [`poly_dim`] but as a `Rational`, convenient in formulas.
pub fn poly_dim_q(d: i64, vars: usize) -> Rational {
    Rational::from_integer(poly_dim(d, vars))
}

/// Renders canonically: `"n"` when the denominator is one, else `"n/d"`.
pub fn format_rational(q: &Rational) -> String {
    let mut s = String::new();
    if q.denom().is_one() {
        let _ = write!(s, "{}", q.numer());
    } else {
        let _ = write!(s, "{}/{}", q.numer(), q.denom());
    }
    s
}

/// Parses `"n"` or `"n/d"`; the input need not be in lowest terms and is
/// normalized (e.g. `"-6/4"` parses to `-3/2`).
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num.parse().map_err(|_| ParseRationalError(s.to_string()))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| ParseRationalError(s.to_string()))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ParseRationalError(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl core::fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "invalid rational literal: {:?}", self.0)
    }
}
