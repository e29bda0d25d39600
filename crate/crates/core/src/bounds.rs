//! Multiplicity bounds.
//!
//! [`mc_bounds`] checks the shift bounds
//! `beta_0 * prod(min shifts) / p! <= e <= beta_0 * prod(max shifts) / p!`
//! on a diagram. [`zanello_check`] checks the index form of the bounds for
//! codimension three, reading the shifts of the maximally cancelled diagram
//! off the sign changes of `(1-t)^3 h(t)`. [`mc_upper_certificate_codim3`]
//! turns a level diagram `B` with h-vector `h` into a pure-diagram
//! decomposition whose types are all dominated by the maximal shifts of
//! `B`, certifying the upper bound for `h`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::analysis::{max_betti_combo, power_type, AnalysisError};
use crate::cancel::{
    apply_cancellations, cancellation_certificate, sign_change_indices, CancelError,
    CancellationCertificate, SignChangeIndices,
};
use crate::diagram::{BettiDiagram, DiagramError, Shifts};
use crate::pure::{pure_diagram, quasipure_decompose, ConeError, PureCombo, PureType};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    /// The diagram is not level shaped (single entries in the outer
    /// columns) or has the wrong codimension.
    NotLevelShape,
    /// The construction produced a diagram that is not shift separated or
    /// not in the cone; with a feasible certificate and a level target this
    /// indicates a genuine counterexample and is surfaced loudly.
    CertificateFailed,
    Diagram(DiagramError),
    Cancel(CancelError),
    Cone(ConeError),
    Analysis(AnalysisError),
}

impl From<DiagramError> for BoundsError {
    fn from(e: DiagramError) -> Self {
        Self::Diagram(e)
    }
}

impl From<CancelError> for BoundsError {
    fn from(e: CancelError) -> Self {
        Self::Cancel(e)
    }
}

impl From<AnalysisError> for BoundsError {
    fn from(e: AnalysisError) -> Self {
        Self::Analysis(e)
    }
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotLevelShape => write!(f, "diagram is not level shaped"),
            Self::CertificateFailed => write!(f, "certificate construction failed"),
            Self::Diagram(e) => write!(f, "{e}"),
            Self::Cancel(e) => write!(f, "{e}"),
            Self::Cone(e) => write!(f, "{e}"),
            Self::Analysis(e) => write!(f, "{e}"),
        }
    }
}

/// Shift-form multiplicity bounds of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McBounds {
    pub min_shifts: Shifts,
    pub max_shifts: Shifts,
    pub lower: Rational,
    pub multiplicity: Rational,
    pub upper: Rational,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// Evaluates `beta_0 * prod(shift_i) / p!` for both shift sequences,
/// translating rows first so the minimal shift of column zero is zero.
pub fn mc_bounds(d: &BettiDiagram) -> Result<McBounds, BoundsError> {
    let (min, max) = d.shifts()?;
    let offset = min.0[0];
    let translate = |s: &Shifts| Shifts(s.0.iter().map(|v| v - offset).collect());
    let min = translate(&min);
    let max = translate(&max);
    let multiplicity = d.multiplicity()?;
    let beta0 = d.column_total(0);
    let p = d.codim();
    let shift_bound = |shifts: &Shifts| {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for (i, s) in shifts.0.iter().enumerate().skip(1) {
            num *= BigInt::from(*s);
            den *= BigInt::from(i as i64);
        }
        &beta0 * Rational::new(num, den)
    };
    let lower = shift_bound(&min);
    let upper = shift_bound(&max);
    let _ = p;
    Ok(McBounds {
        lower_ok: lower <= multiplicity,
        upper_ok: multiplicity <= upper,
        min_shifts: min,
        max_shifts: max,
        lower,
        multiplicity,
        upper,
    })
}

/// Index-form bounds `n1*n2*(c+3)/6 <= e <= N1*N2*(c+3)/6` for a
/// codimension-3 h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZanelloBounds {
    pub indices: SignChangeIndices,
    pub lower: Rational,
    pub multiplicity: Rational,
    pub upper: Rational,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

pub fn zanello_check(h: &crate::hvector::HVector) -> Result<ZanelloBounds, BoundsError> {
    let indices = sign_change_indices(h)?;
    let c = h.degree().expect("nonzero");
    let scale = Rational::new(BigInt::from(c + 3), BigInt::from(6));
    let product = |a: i64, b: i64| Rational::from_integer(BigInt::from(a * b)) * &scale;
    let lower = product(indices.first_negative, indices.first_positive);
    let upper = product(indices.last_negative, indices.last_positive);
    let multiplicity = h.eval_at_one();
    Ok(ZanelloBounds {
        lower_ok: lower <= multiplicity,
        upper_ok: multiplicity <= upper,
        indices,
        lower,
        multiplicity,
        upper,
    })
}

/// Builds a pure-diagram certificate for the upper bound of a
/// codimension-3 level diagram `b` with h-vector `h`.
///
/// The maximal combination `D = sum a_j pi(0, j+1, j+2, j+3)` cancels to
/// `b` by some certificate. Splitting `D` at the maximal first shift
/// `m1` of `b` into `D'` (types below) and `D''` (types at or above), and
/// applying to `D''` only the certificate amounts in columns one and two
/// above the split, leaves a shift-separated diagram `E` that decomposes
/// into pure diagrams. Every type of `E + D'` is dominated componentwise by
/// the maximal shifts of `b`, so the total multiplicity is at most
/// `beta_0 * m1 * m2 * m3 / 6`.
pub fn mc_upper_certificate_codim3(
    h: &crate::hvector::HVector,
    b: &BettiDiagram,
) -> Result<PureCombo, BoundsError> {
    if b.codim() != 3 {
        return Err(BoundsError::NotLevelShape);
    }
    if b.single_entry_row(0).is_none() || b.single_entry_row(3).is_none() {
        return Err(BoundsError::NotLevelShape);
    }
    let combo = max_betti_combo(h, 3)?;
    let cert = cancellation_certificate(&combo.diagram, b)?;
    let (_, max_shifts) = b.shifts()?;
    let m1 = max_shifts.0[1];

    let mut upper_part = BettiDiagram::new(3);
    let mut lower_types: Vec<(Rational, PureType)> = Vec::new();
    for (j, a) in combo.coefficients.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let ty = power_type(j as i64, 3);
        if (j as i64) >= m1 - 1 {
            upper_part.add_scaled(a, &pure_diagram(&ty));
        } else {
            lower_types.push((a.clone(), ty));
        }
    }

    let mut partial = CancellationCertificate::new();
    for (k, l, amount) in cert.iter() {
        if (k == 1 && l >= m1 + 1) || (k == 2 && l >= m1 + 2) {
            partial.add(k, l, amount.clone());
        }
    }
    let separated = apply_cancellations(&upper_part, &partial)
        .map_err(|_| BoundsError::CertificateFailed)?;

    let mut result = if separated.is_zero() {
        PureCombo::new()
    } else {
        quasipure_decompose(&separated).map_err(|_| BoundsError::CertificateFailed)?
    };
    for (a, ty) in lower_types {
        result.push(a, ty);
    }

    let dominant = PureType::new(max_shifts.0.clone()).map_err(|_| BoundsError::CertificateFailed)?;
    if result.terms().iter().any(|(_, ty)| !ty.le(&dominant)) {
        return Err(BoundsError::CertificateFailed);
    }
    debug_assert_eq!(result.multiplicity(), h.eval_at_one());
    Ok(result)
}
