//! Pure diagrams and the cone they span.
//!
//! A pure diagram has one entry per column; its entries are pinned, up to a
//! global scale, by the Herzog-Kuhl equations. [`pure_diagram`] returns the
//! normalization with entry 1 in column zero. [`greedy_decompose`] peels off
//! pure diagrams along the minimal-shift chain, [`quasipure_decompose`]
//! certifies shift-separated diagrams, and [`codim3_level_membership`] is
//! the authoritative cone test for codimension-3 level shapes, obtained by
//! collapsing the two single-entry columns down to codimension one.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::diagram::{BettiDiagram, DiagramError};
use crate::hvector::HVector;
use crate::rational::{poly_dim_q, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeError {
    /// A degree sequence was not strictly increasing.
    NotIncreasing,
    /// Parameters outside the defining range, e.g. `j > c`.
    OutOfRange,
    /// The diagram is not a nonnegative combination of pure diagrams along
    /// the greedy chain.
    NotInCone,
    /// Maximal shift of some column reaches the minimal shift of the next.
    NotShiftSeparated,
    /// The diagram does not have the single-entry column shape required.
    ShapeError,
    Diagram(DiagramError),
}

impl From<DiagramError> for ConeError {
    fn from(e: DiagramError) -> Self {
        Self::Diagram(e)
    }
}

impl fmt::Display for ConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotIncreasing => write!(f, "degree sequence is not strictly increasing"),
            Self::OutOfRange => write!(f, "parameters out of range"),
            Self::NotInCone => write!(f, "not a nonnegative combination of pure diagrams"),
            Self::NotShiftSeparated => write!(f, "column shifts are not separated"),
            Self::ShapeError => write!(f, "diagram does not have the required column shape"),
            Self::Diagram(e) => write!(f, "{e}"),
        }
    }
}

/// A strictly increasing degree sequence `d_0 < d_1 < ... < d_p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PureType(Vec<i64>);

impl PureType {
    pub fn new(degrees: Vec<i64>) -> Result<Self, ConeError> {
        if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ConeError::NotIncreasing);
        }
        Ok(Self(degrees))
    }

    pub fn codim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// Componentwise comparison in the chain partial order.
    pub fn le(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for PureType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi(")?;
        for (n, d) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A nonnegative linear combination of pure diagrams of one codimension;
/// coefficients are strictly positive and types pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PureCombo {
    terms: Vec<(Rational, PureType)>,
}

impl PureCombo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff * pi(ty)`, merging with an existing term of the same type
    /// and dropping terms that cancel to zero.
    pub fn push(&mut self, coeff: Rational, ty: PureType) {
        if coeff.is_zero() {
            return;
        }
        if let Some(slot) = self.terms.iter_mut().find(|(_, t)| *t == ty) {
            slot.0 += coeff;
            if slot.0.is_zero() {
                self.terms.retain(|(q, _)| !q.is_zero());
            }
            return;
        }
        self.terms.push((coeff, ty));
    }

    pub fn terms(&self) -> &[(Rational, PureType)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sums the weighted pure diagrams back into a diagram of codimension
    /// `codim` (needed explicitly for the empty combination).
    pub fn evaluate(&self, codim: usize) -> BettiDiagram {
        let mut out = BettiDiagram::new(codim);
        for (q, ty) in &self.terms {
            debug_assert_eq!(ty.codim(), codim);
            out.add_scaled(q, &pure_diagram(ty));
        }
        out
    }

    /// Whether the types are pairwise comparable (form a chain).
    pub fn is_chain(&self) -> bool {
        for (n, (_, a)) in self.terms.iter().enumerate() {
            for (_, b) in &self.terms[n + 1..] {
                if !a.le(b) && !b.le(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn multiplicity(&self) -> Rational {
        let mut acc = Rational::zero();
        for (q, ty) in &self.terms {
            acc += q * pure_multiplicity(ty);
        }
        acc
    }
}

/// Multiplicity of the normalized pure diagram: `prod (d_i - d_0) / p!`.
pub fn pure_multiplicity(ty: &PureType) -> Rational {
    let d = ty.degrees();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (n, di) in d.iter().enumerate().skip(1) {
        num *= BigInt::from(di - d[0]);
        den *= BigInt::from(n as i64);
    }
    Rational::new(num, den)
}

/// The pure diagram of the given type, normalized to 1 in column zero.
///
/// After translating so that `d_0 = 0`, the entry in column `k >= 1` sits at
/// row `d_k` and equals `prod_{i >= 1, i != k} d_i / |d_i - d_k|`.
pub fn pure_diagram(ty: &PureType) -> BettiDiagram {
    let d = ty.degrees();
    let p = ty.codim();
    let d0 = d[0];
    let mut out = BettiDiagram::new(p);
    out.add_entry(0, d0, Rational::from_integer(BigInt::from(1)))
        .expect("in range");
    for k in 1..=p {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for i in 1..=p {
            if i == k {
                continue;
            }
            num *= BigInt::from(d[i] - d0);
            den *= BigInt::from((d[i] - d[k]).abs());
        }
        out.add_entry(k, d[k], Rational::new(num, den))
            .expect("in range");
    }
    out
}

/// Convenience wrapper validating the degree sequence first.
pub fn pure_diagram_of(degrees: Vec<i64>) -> Result<BettiDiagram, ConeError> {
    Ok(pure_diagram(&PureType::new(degrees)?))
}

/// The compressed level type `(d0, d0+j+1, ..., d0+j+p-1, d0+c+p)`, defined
/// for `0 <= j <= c`; at `j = c` it degenerates to `(d0, d0+c+1, ..., d0+c+p)`.
pub fn compressed_level_type(d0: i64, j: i64, c: i64, p: usize) -> Result<PureType, ConeError> {
    if j < 0 || j > c || p == 0 {
        return Err(ConeError::OutOfRange);
    }
    let mut degrees = Vec::with_capacity(p + 1);
    degrees.push(d0);
    for i in 1..p {
        degrees.push(d0 + j + i as i64);
    }
    degrees.push(d0 + c + p as i64);
    PureType::new(degrees)
}

/// The h-vector of the compressed level diagram of socle degree `c` with
/// full growth through degree `j`: `h_i = r_i` for `i <= j` and
/// `h_i = (r_j / r_{c-j}) r_{c-i}` for `j < i <= c`, where `r` is the
/// coefficient dimension of the ring in `p` variables.
pub fn compressed_level_hvector(j: i64, c: i64, p: usize) -> Result<HVector, ConeError> {
    if j < 0 || j > c || p == 0 {
        return Err(ConeError::OutOfRange);
    }
    let mut h = HVector::zero();
    for i in 0..=j {
        h.add_term(i, poly_dim_q(i, p));
    }
    let scale = poly_dim_q(j, p) / poly_dim_q(c - j, p);
    for i in (j + 1)..=c {
        h.add_term(i, &scale * poly_dim_q(c - i, p));
    }
    Ok(h)
}

/// Greedy decomposition into pure diagrams along the minimal-shift chain.
///
/// Repeatedly reads the minimal shift of each column, which must form a
/// strictly increasing sequence, and subtracts the largest multiple of that
/// pure diagram keeping all entries nonnegative; exactly one entry vanishes
/// per round, so the loop terminates. On success the returned types form a
/// chain and the weighted sum reconstructs the input exactly.
pub fn greedy_decompose(d: &BettiDiagram) -> Result<PureCombo, ConeError> {
    if d.has_negative_entry() {
        return Err(ConeError::NotInCone);
    }
    let p = d.codim();
    let mut rest = d.clone();
    let mut combo = PureCombo::new();
    while !rest.is_zero() {
        let mut mins = Vec::with_capacity(p + 1);
        for i in 0..=p {
            mins.push(rest.min_row(i).ok_or(ConeError::NotInCone)?);
        }
        let ty = PureType::new(mins).map_err(|_| ConeError::NotInCone)?;
        let pi = pure_diagram(&ty);
        let mut step: Option<Rational> = None;
        for (i, j, q) in pi.iter() {
            let ratio = rest.entry(i, j) / q;
            if step.as_ref().map_or(true, |s| ratio < *s) {
                step = Some(ratio);
            }
        }
        let step = step.expect("pure diagram has entries");
        if !step.is_positive() {
            return Err(ConeError::NotInCone);
        }
        rest.add_scaled(&-step.clone(), &pi);
        combo.push(step, ty);
    }
    Ok(combo)
}

/// Decomposition for shift-separated diagrams: requires the maximal shift of
/// each column to lie strictly below the minimal shift of the next, then
/// returns the greedy decomposition (which cannot fail on such diagrams with
/// nonnegative entries).
pub fn quasipure_decompose(d: &BettiDiagram) -> Result<PureCombo, ConeError> {
    let (min, max) = d.shifts()?;
    for i in 1..=d.codim() {
        if max.0[i - 1] >= min.0[i] {
            return Err(ConeError::NotShiftSeparated);
        }
    }
    greedy_decompose(d)
}

/// Cone membership for codimension-3 diagrams with exactly one entry in
/// columns zero and three.
///
/// Collapsing columns three and zero reduces to codimension one, where a
/// diagram is a nonnegative combination of pure diagrams exactly when all
/// entries are nonnegative, the running sums of column zero dominate the
/// running sums of column one shifted down a row, and the two column totals
/// agree.
pub fn codim3_level_membership(d: &BettiDiagram) -> Result<bool, ConeError> {
    if d.codim() != 3 {
        return Err(ConeError::ShapeError);
    }
    let collapsed = d
        .collapse_column(3)
        .and_then(|e| e.collapse_column(0))
        .map_err(|_| ConeError::ShapeError)?;
    if collapsed.has_negative_entry() {
        return Ok(false);
    }
    if collapsed.column_total(0) != collapsed.column_total(1) {
        return Ok(false);
    }
    let rows: Vec<i64> = collapsed.iter().map(|(_, j, _)| j).collect();
    let (lo, hi) = match (rows.iter().min(), rows.iter().max()) {
        (Some(lo), Some(hi)) => (*lo - 1, *hi),
        _ => return Ok(true),
    };
    let mut sum0 = Rational::zero();
    let mut sum1 = Rational::zero();
    for l in lo..=hi {
        sum0 += collapsed.entry(0, l);
        sum1 += collapsed.entry(1, l + 1);
        if sum0 < sum1 {
            return Ok(false);
        }
    }
    Ok(true)
}
