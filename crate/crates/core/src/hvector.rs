//! Finitely supported Laurent polynomials over the rationals.
//!
//! An [`HVector`] stores a map degree -> coefficient with no zero
//! coefficients; the empty map is the zero polynomial. It plays two roles:
//! the h-vector `h(t)` of a diagram, and the alternating generating function
//! `S(t)` before division by `(1-t)^p`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HVector {
    coeffs: BTreeMap<i64, Rational>,
}

impl HVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from integer coefficients `values[i]` at degree `i`.
    pub fn from_ints(values: &[i64]) -> Self {
        let mut h = Self::zero();
        for (d, v) in values.iter().enumerate() {
            h.add_term(d as i64, crate::rational::int(*v));
        }
        h
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut h = Self::zero();
        for (d, q) in terms {
            h.add_term(d, q);
        }
        h
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^d` (zero when absent).
    pub fn coeff(&self, d: i64) -> Rational {
        self.coeffs.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest supported degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest supported degree, `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(d, q)| (*d, q))
    }

    pub fn add_term(&mut self, d: i64, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(d).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn add_scaled(&mut self, scale: &Rational, other: &Self) {
        for (d, q) in other.iter() {
            self.add_term(d, scale * q);
        }
    }

    pub fn scaled(&self, scale: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(scale, self);
        out
    }

    /// `h(1)`, the multiplicity when `self` is an h-vector.
    pub fn eval_at_one(&self) -> Rational {
        let mut acc = Rational::zero();
        for (_, q) in self.iter() {
            acc += q;
        }
        acc
    }

    /// Multiplies by `(1 - t)`.
    pub fn mul_one_minus_t(&self) -> Self {
        let mut out = Self::zero();
        for (d, q) in self.iter() {
            out.add_term(d, q.clone());
            out.add_term(d + 1, -q.clone());
        }
        out
    }

    /// Multiplies by `(1 - t)^k`.
    pub fn mul_one_minus_t_pow(&self, k: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.mul_one_minus_t();
        }
        out
    }

    /// Exact division by `(1 - t)`. The quotient's coefficient at degree `d`
    /// is the prefix sum of coefficients up to `d`; the division is exact
    /// precisely when the total sum vanishes, and `None` is returned
    /// otherwise.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lo = self.min_degree().unwrap();
        let hi = self.degree().unwrap();
        let mut out = Self::zero();
        let mut acc = Rational::zero();
        for d in lo..hi {
            acc += self.coeff(d);
            out.add_term(d, acc.clone());
        }
        acc += self.coeff(hi);
        if acc.is_zero() {
            Some(out)
        } else {
            None
        }
    }

    /// Exact division by `(1 - t)^k`; `None` on the first nonzero remainder.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Option<Self> {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.div_one_minus_t()?;
        }
        Some(out)
    }

    /// Coefficients of degrees `0..=deg` as a dense vector (degrees outside
    /// the support contribute zeros).
    pub fn dense(&self, deg: i64) -> Vec<Rational> {
        (0..=deg).map(|d| self.coeff(d)).collect()
    }
}

impl core::ops::Add<&HVector> for HVector {
    type Output = HVector;
    fn add(mut self, rhs: &HVector) -> HVector {
        for (d, q) in rhs.iter() {
            self.add_term(d, q.clone());
        }
        self
    }
}

impl core::ops::Sub<&HVector> for HVector {
    type Output = HVector;
    fn sub(mut self, rhs: &HVector) -> HVector {
        for (d, q) in rhs.iter() {
            self.add_term(d, -q.clone());
        }
        self
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, q) in self.iter() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            let coeff: String = format_rational(q);
            let needs_parens = coeff.contains('-') || coeff.contains('/');
            match (d, needs_parens) {
                (0, _) => write!(f, "{coeff}")?,
                (1, false) => write!(f, "{coeff}*t")?,
                (1, true) => write!(f, "({coeff})*t")?,
                (_, false) => write!(f, "{coeff}*t^{d}")?,
                (_, true) => write!(f, "({coeff})*t^{d}")?,
            }
        }
        Ok(())
    }
}
