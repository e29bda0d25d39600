//! The diagram data model.
//!
//! A [`BettiDiagram`] of codimension `p` is a sparse, finitely supported map
//! `(column i, row j) -> Rational` with `0 <= i <= p` and integer rows.
//! Stored entries are nonzero; entries may be negative (several operations
//! restrict to nonnegative diagrams and say so).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::hvector::HVector;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    /// The alternating generating function is not divisible by `(1-t)^p`.
    NotDivisible,
    /// A column required to be nonempty has no entries.
    EmptyColumn(usize),
    /// A column required to hold exactly one entry holds zero or several.
    NotSingleEntry(usize),
    /// Reinserting a column would divide an entry by zero.
    DivisionBySharedShift,
    /// No value for the reinserted entry restores divisibility.
    NoConsistentFill,
    /// An entry was addressed outside columns `0..=p`.
    ColumnOutOfRange { column: usize, codim: usize },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotDivisible => write!(f, "S(t) is not divisible by (1-t)^p"),
            Self::EmptyColumn(i) => write!(f, "column {i} has no entries"),
            Self::NotSingleEntry(i) => write!(f, "column {i} does not hold exactly one entry"),
            Self::DivisionBySharedShift => {
                write!(f, "an entry sits on the shift of the reinserted column")
            }
            Self::NoConsistentFill => {
                write!(f, "no reinserted value restores divisibility by (1-t)^p")
            }
            Self::ColumnOutOfRange { column, codim } => {
                write!(f, "column {column} outside 0..={codim}")
            }
        }
    }
}

/// Per-column row indices, e.g. minimal or maximal shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shifts(pub Vec<i64>);

impl Shifts {
    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiDiagram {
    codim: usize,
    entries: BTreeMap<(usize, i64), Rational>,
}

impl BettiDiagram {
    pub fn new(codim: usize) -> Self {
        Self {
            codim,
            entries: BTreeMap::new(),
        }
    }

    /// Builds from `(column, row, value)` triples; values at the same
    /// position accumulate.
    pub fn from_entries<I>(codim: usize, entries: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut d = Self::new(codim);
        for (i, j, q) in entries {
            d.add_entry(i, j, q)?;
        }
        Ok(d)
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at `(i, j)` (zero when absent).
    pub fn entry(&self, i: usize, j: i64) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, i: usize, j: i64) -> Option<&Rational> {
        self.entries.get(&(i, j))
    }

    pub fn add_entry(&mut self, i: usize, j: i64, q: Rational) -> Result<(), DiagramError> {
        if i > self.codim {
            return Err(DiagramError::ColumnOutOfRange {
                column: i,
                codim: self.codim,
            });
        }
        if q.is_zero() {
            return Ok(());
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
        Ok(())
    }

    /// `self += scale * other`; both diagrams must share the codimension.
    pub fn add_scaled(&mut self, scale: &Rational, other: &Self) {
        assert_eq!(self.codim, other.codim, "codimension mismatch");
        for ((i, j), q) in other.entries.iter() {
            self.add_entry(*i, *j, scale * q).expect("column in range");
        }
    }

    pub fn scaled(&self, scale: &Rational) -> Self {
        let mut out = Self::new(self.codim);
        out.add_scaled(scale, self);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|((i, j), q)| (*i, *j, q))
    }

    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|((_, j), q)| (*j, q))
    }

    pub fn column_total(&self, i: usize) -> Rational {
        let mut acc = Rational::zero();
        for (_, q) in self.column(i) {
            acc += q;
        }
        acc
    }

    pub fn min_row(&self, i: usize) -> Option<i64> {
        self.column(i).next().map(|(j, _)| j)
    }

    pub fn max_row(&self, i: usize) -> Option<i64> {
        self.column(i).last().map(|(j, _)| j)
    }

    pub fn has_negative_entry(&self) -> bool {
        self.entries.values().any(|q| q.is_negative())
    }

    /// Shifts every row index by `delta`.
    pub fn translate_rows(&self, delta: i64) -> Self {
        let mut out = Self::new(self.codim);
        for (i, j, q) in self.iter() {
            out.add_entry(i, j + delta, q.clone()).expect("in range");
        }
        out
    }

    /// The alternating generating function `S(t) = sum (-1)^i D[i][j] t^j`.
    pub fn s_polynomial(&self) -> HVector {
        let mut s = HVector::zero();
        for (i, j, q) in self.iter() {
            let signed = if i % 2 == 0 { q.clone() } else { -q.clone() };
            s.add_term(j, signed);
        }
        s
    }

    /// The h-vector `S(t)/(1-t)^p`, failing when the division is not exact.
    pub fn hvector(&self) -> Result<HVector, DiagramError> {
        self.s_polynomial()
            .div_one_minus_t_pow(self.codim)
            .ok_or(DiagramError::NotDivisible)
    }

    /// `h(1)`.
    pub fn multiplicity(&self) -> Result<Rational, DiagramError> {
        Ok(self.hvector()?.eval_at_one())
    }

    /// The flip `D'[i][j] = D[p-i][p+shift-j]`; `shift = 0` is the plain
    /// dual, and the flip is an involution for any fixed shift.
    pub fn dual_flip(&self, shift: i64) -> Self {
        let p = self.codim;
        let mut out = Self::new(p);
        for (i, j, q) in self.iter() {
            out.add_entry(p - i, p as i64 + shift - j, q.clone())
                .expect("in range");
        }
        out
    }

    /// Per-column minimal and maximal row indices; every column must be
    /// nonempty.
    pub fn shifts(&self) -> Result<(Shifts, Shifts), DiagramError> {
        let mut min = Vec::with_capacity(self.codim + 1);
        let mut max = Vec::with_capacity(self.codim + 1);
        for i in 0..=self.codim {
            min.push(self.min_row(i).ok_or(DiagramError::EmptyColumn(i))?);
            max.push(self.max_row(i).ok_or(DiagramError::EmptyColumn(i))?);
        }
        Ok((Shifts(min), Shifts(max)))
    }

    /// Row of the unique entry of column `i`, `None` when the column holds
    /// zero or several entries.
    pub fn single_entry_row(&self, i: usize) -> Option<i64> {
        let mut rows = self.column(i).map(|(j, _)| j);
        match (rows.next(), rows.next()) {
            (Some(j), None) => Some(j),
            _ => None,
        }
    }

    /// Removes a single-entry column `k` (entry at row `d`), scaling every
    /// remaining entry at row `j` by `|d - j|`. The result has codimension
    /// one lower; on the span of pure diagrams this is a linear isomorphism
    /// onto the lower-codimension diagram space.
    pub fn collapse_column(&self, k: usize) -> Result<Self, DiagramError> {
        if k > self.codim {
            return Err(DiagramError::ColumnOutOfRange {
                column: k,
                codim: self.codim,
            });
        }
        let d = self
            .single_entry_row(k)
            .ok_or(DiagramError::NotSingleEntry(k))?;
        let mut out = Self::new(self.codim - 1);
        for (i, j, q) in self.iter() {
            if i == k {
                continue;
            }
            let target = if i < k { i } else { i - 1 };
            let factor = Rational::from_integer(num_bigint::BigInt::from((d - j).abs()));
            out.add_entry(target, j, factor * q).expect("in range");
        }
        Ok(out)
    }

    /// Inverse of [`collapse_column`](Self::collapse_column): divides every
    /// entry at row `j` by `|row - j|`, reinserts column `k`, and fills
    /// `(k, row)` with the unique value that makes the result divisible by
    /// `(1-t)^(p+1)`.
    pub fn expand_column(&self, k: usize, row: i64) -> Result<Self, DiagramError> {
        let p = self.codim + 1;
        if k > p {
            return Err(DiagramError::ColumnOutOfRange { column: k, codim: p });
        }
        let mut out = Self::new(p);
        for (i, j, q) in self.iter() {
            if j == row {
                return Err(DiagramError::DivisionBySharedShift);
            }
            let target = if i < k { i } else { i + 1 };
            let factor = Rational::from_integer(num_bigint::BigInt::from((row - j).abs()));
            out.add_entry(target, j, q / factor).expect("in range");
        }
        // A single free entry remains; divisibility by (1-t) forces its
        // value, and the higher powers are then checked.
        let partial = out.s_polynomial();
        let fill = if k % 2 == 0 {
            -partial.eval_at_one()
        } else {
            partial.eval_at_one()
        };
        out.add_entry(k, row, fill).expect("in range");
        if out.hvector().is_err() {
            return Err(DiagramError::NoConsistentFill);
        }
        Ok(out)
    }
}
