//! The consecutive-cancellation calculus.
//!
//! A cancellation at `(k, l)` subtracts the same nonnegative amount at
//! positions `(k, l)` and `(k+1, l)`; it leaves the alternating generating
//! function, and hence the h-vector and multiplicity, unchanged. A
//! [`CancellationCertificate`] collects amounts per position; since the
//! subtractions commute, feasibility is checked on the final entries only.

use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::diagram::BettiDiagram;
use crate::hvector::HVector;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CancelError {
    /// Applying the certificate would leave a negative entry.
    NegativeEntry { column: usize, row: i64 },
    /// The target is not reachable by consecutive cancellations (an
    /// alternating partial sum is negative, or the generating functions
    /// differ).
    NotACancellation,
    /// The h-vector does not produce a level-shaped diagram.
    NotLevelShape,
    /// The third difference lacks the sign changes needed for the index
    /// bounds.
    NoSignChange,
}

impl fmt::Display for CancelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegativeEntry { column, row } => {
                write!(f, "cancellation drives entry ({column}, {row}) negative")
            }
            Self::NotACancellation => write!(f, "not reachable by consecutive cancellations"),
            Self::NotLevelShape => write!(f, "h-vector does not yield a level shape"),
            Self::NoSignChange => write!(f, "third difference has no admissible sign change"),
        }
    }
}

/// Amounts `b > 0` indexed by position `(column k, row l)`, witnessing
/// `B = D - sum b_{k,l} C^{k,l}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CancellationCertificate {
    amounts: BTreeMap<(usize, i64), Rational>,
}

impl CancellationCertificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut cert = Self::new();
        for (k, l, b) in entries {
            cert.add(k, l, b);
        }
        cert
    }

    /// Accumulates an amount at `(k, l)`; zero totals are dropped.
    pub fn add(&mut self, k: usize, l: i64, b: Rational) {
        if b.is_zero() {
            return;
        }
        let slot = self.amounts.entry((k, l)).or_insert_with(Rational::zero);
        *slot += b;
        if slot.is_zero() {
            self.amounts.remove(&(k, l));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.amounts.iter().map(|((k, l), b)| (*k, *l, b))
    }

    pub fn is_empty(&self) -> bool {
        self.amounts.is_empty()
    }

    pub fn amount(&self, k: usize, l: i64) -> Rational {
        self.amounts
            .get(&(k, l))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Subtracts `b` at `(k, l)` and `(k+1, l)` for every certificate entry.
/// Fails if any amount is negative or any resulting entry is negative.
pub fn apply_cancellations(
    d: &BettiDiagram,
    cert: &CancellationCertificate,
) -> Result<BettiDiagram, CancelError> {
    let mut out = d.clone();
    for (k, l, b) in cert.iter() {
        if b.is_negative() {
            return Err(CancelError::NegativeEntry { column: k, row: l });
        }
        for col in [k, k + 1] {
            out.add_entry(col, l, -b.clone())
                .map_err(|_| CancelError::NegativeEntry { column: col, row: l })?;
        }
    }
    for (i, j, q) in out.iter() {
        if q.is_negative() {
            return Err(CancelError::NegativeEntry { column: i, row: j });
        }
    }
    Ok(out)
}

/// The unique candidate certificate taking `d` to `b`, from the alternating
/// partial sums of the column differences:
/// `b_{i,j} = sum_{k <= i} (-1)^(i-k) (D_{k,j} - B_{k,j})`.
///
/// Succeeds precisely when every partial sum is nonnegative and the final
/// (column `p`) sums vanish, which is equivalent to the two diagrams having
/// the same generating function; then `apply_cancellations(d, cert) == b`.
pub fn cancellation_certificate(
    d: &BettiDiagram,
    b: &BettiDiagram,
) -> Result<CancellationCertificate, CancelError> {
    if d.codim() != b.codim() {
        return Err(CancelError::NotACancellation);
    }
    let p = d.codim();
    let mut rows: alloc::vec::Vec<i64> = d.iter().chain(b.iter()).map(|(_, j, _)| j).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut cert = CancellationCertificate::new();
    for j in rows {
        let mut acc = Rational::zero();
        for i in 0..=p {
            acc = d.entry(i, j) - b.entry(i, j) - acc;
            if i == p {
                if !acc.is_zero() {
                    return Err(CancelError::NotACancellation);
                }
            } else {
                if acc.is_negative() {
                    return Err(CancelError::NotACancellation);
                }
                cert.add(i, j, acc.clone());
            }
        }
    }
    Ok(cert)
}

/// Third difference `(1-t)^3 h(t)`.
pub fn third_difference(h: &HVector) -> HVector {
    h.mul_one_minus_t_pow(3)
}

/// The maximally cancelled level-shaped diagram of a codimension-3
/// h-vector: `h_0` in column zero at row zero, the top coefficient of the
/// third difference (negated) in column three, and each interior
/// coefficient of the third difference in column one (when negative) or
/// column two (when positive).
///
/// Requires `h` supported on `[0, c]` with `h_0 > 0` and a negative top
/// third-difference coefficient (equivalently `h_c > 0`).
pub fn maximal_cancellation_level(h: &HVector) -> Result<BettiDiagram, CancelError> {
    let c = h.degree().ok_or(CancelError::NotLevelShape)?;
    if h.min_degree() != Some(0) || !h.coeff(0).is_positive() {
        return Err(CancelError::NotLevelShape);
    }
    let delta = third_difference(h);
    if delta.coeff(0) != h.coeff(0) {
        return Err(CancelError::NotLevelShape);
    }
    let top = delta.coeff(c + 3);
    if !top.is_negative() {
        return Err(CancelError::NotLevelShape);
    }
    let mut out = BettiDiagram::new(3);
    out.add_entry(0, 0, h.coeff(0)).expect("in range");
    out.add_entry(3, c + 3, -top).expect("in range");
    for (j, q) in delta.iter() {
        if j <= 0 || j >= c + 3 {
            continue;
        }
        if q.is_negative() {
            out.add_entry(1, j, -q.clone()).expect("in range");
        } else {
            out.add_entry(2, j, q.clone()).expect("in range");
        }
    }
    Ok(out)
}

/// Degrees of the sign changes of the third difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignChangeIndices {
    /// Smallest degree with a negative coefficient.
    pub first_negative: i64,
    /// Smallest positive degree with a positive coefficient.
    pub first_positive: i64,
    /// Largest degree `<= c + 1` with a negative coefficient.
    pub last_negative: i64,
    /// Largest degree with a positive coefficient.
    pub last_positive: i64,
}

/// Reads the four sign-change degrees off `(1-t)^3 h(t)`.
pub fn sign_change_indices(h: &HVector) -> Result<SignChangeIndices, CancelError> {
    let c = h.degree().ok_or(CancelError::NoSignChange)?;
    let delta = third_difference(h);
    let negatives: alloc::vec::Vec<i64> = delta
        .iter()
        .filter(|(_, q)| q.is_negative())
        .map(|(j, _)| j)
        .collect();
    let positives: alloc::vec::Vec<i64> = delta
        .iter()
        .filter(|(j, q)| q.is_positive() && *j > 0)
        .map(|(j, _)| j)
        .collect();
    let first_negative = *negatives.first().ok_or(CancelError::NoSignChange)?;
    let first_positive = *positives.first().ok_or(CancelError::NoSignChange)?;
    let last_negative = negatives
        .iter()
        .rev()
        .find(|j| **j <= c + 1)
        .copied()
        .ok_or(CancelError::NoSignChange)?;
    let last_positive = *positives.last().ok_or(CancelError::NoSignChange)?;
    Ok(SignChangeIndices {
        first_negative,
        first_positive,
        last_negative,
        last_positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pure::pure_diagram_of;
    use crate::rational::{int, ratio};

    fn lower_bound_example_diagram() -> BettiDiagram {
        // max Betti combination of 16 + 48t + 21t^2 + 10t^3
        let mut d = pure_diagram_of(vec![0, 2, 3, 4]).unwrap().scaled(&ratio(25, 2));
        d.add_scaled(&ratio(5, 2), &pure_diagram_of(vec![0, 3, 4, 5]).unwrap());
        d.add_scaled(&int(1), &pure_diagram_of(vec![0, 4, 5, 6]).unwrap());
        d
    }

    fn cancelled_lower_bound_diagram() -> BettiDiagram {
        BettiDiagram::from_entries(
            3,
            [
                (0, 0, int(16)),
                (1, 2, int(75)),
                (2, 3, int(75)),
                (1, 4, int(15)),
                (2, 5, int(9)),
                (3, 6, int(10)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn empty_certificate_is_identity() {
        let d = cancelled_lower_bound_diagram();
        let cert = CancellationCertificate::new();
        assert_eq!(apply_cancellations(&d, &cert).unwrap(), d);
    }

    #[test]
    fn cancel_to_known_diagram() {
        let d = lower_bound_example_diagram();
        assert_eq!(d.entry(0, 0), int(16));
        assert_eq!(d.entry(1, 2), int(75));
        assert_eq!(d.entry(2, 3), int(100));
        assert_eq!(d.entry(3, 4), ratio(75, 2));
        let cert = CancellationCertificate::from_entries([
            (1, 3, int(25)),
            (2, 4, ratio(75, 2)),
            (2, 5, int(15)),
        ]);
        let b = apply_cancellations(&d, &cert).unwrap();
        assert_eq!(b, cancelled_lower_bound_diagram());
        assert_eq!(b.s_polynomial(), d.s_polynomial());
        // and the certificate is recovered from the pair
        assert_eq!(cancellation_certificate(&d, &b).unwrap(), cert);
    }

    #[test]
    fn overdrawn_amount_is_rejected() {
        let d = cancelled_lower_bound_diagram();
        let cert = CancellationCertificate::from_entries([(1, 4, int(16))]);
        assert_eq!(
            apply_cancellations(&d, &cert).unwrap_err(),
            CancelError::NegativeEntry { column: 1, row: 4 }
        );
    }

    #[test]
    fn identity_certificate_is_empty() {
        let d = lower_bound_example_diagram();
        assert!(cancellation_certificate(&d, &d).unwrap().is_empty());
    }

    #[test]
    fn differing_generating_functions_rejected() {
        let koszul = pure_diagram_of(vec![0, 1, 2, 3]).unwrap();
        let zero = BettiDiagram::new(3);
        assert_eq!(
            cancellation_certificate(&koszul, &zero).unwrap_err(),
            CancelError::NotACancellation
        );
    }

    #[test]
    fn maximal_cancellation_examples() {
        let h = HVector::from_ints(&[16, 48, 21, 10]);
        assert_eq!(
            maximal_cancellation_level(&h).unwrap(),
            cancelled_lower_bound_diagram()
        );

        let koszul = pure_diagram_of(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            maximal_cancellation_level(&HVector::from_ints(&[1])).unwrap(),
            koszul
        );

        // (1+t)^3: third difference (1-t^2)^3 = 1 - 3t^2 + 3t^4 - t^6
        let h = HVector::from_ints(&[1, 3, 3, 1]);
        let expect = BettiDiagram::from_entries(
            3,
            [
                (0, 0, int(1)),
                (1, 2, int(3)),
                (2, 4, int(3)),
                (3, 6, int(1)),
            ],
        )
        .unwrap();
        assert_eq!(maximal_cancellation_level(&h).unwrap(), expect);
    }

    #[test]
    fn maximal_cancellation_has_level_hvector_and_no_slack() {
        for h in [
            HVector::from_ints(&[16, 48, 21, 10]),
            HVector::from_ints(&[1, 3, 5, 6, 2]),
            HVector::from_ints(&[5, 15, 18, 15]),
        ] {
            let d = maximal_cancellation_level(&h).unwrap();
            assert_eq!(d.hvector().unwrap(), h);
            // no further cancellation possible between columns 1/2 and 2/3
            let c = h.degree().unwrap();
            for j in d.iter().map(|(_, j, _)| j) {
                if j > 0 && j < c + 3 {
                    assert!(d.entry(1, j).is_zero() || d.entry(2, j).is_zero());
                    assert!(d.entry(2, j).is_zero() || d.entry(3, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn sign_change_examples() {
        let idx = sign_change_indices(&HVector::from_ints(&[16, 48, 21, 10])).unwrap();
        assert_eq!(
            (idx.first_negative, idx.first_positive, idx.last_negative, idx.last_positive),
            (2, 3, 4, 5)
        );
        let idx = sign_change_indices(&HVector::from_ints(&[1, 3, 3, 1])).unwrap();
        assert_eq!(
            (idx.first_negative, idx.first_positive, idx.last_negative, idx.last_positive),
            (2, 4, 2, 4)
        );
        let idx = sign_change_indices(&HVector::from_ints(&[1])).unwrap();
        assert_eq!(
            (idx.first_negative, idx.first_positive, idx.last_negative, idx.last_positive),
            (1, 2, 1, 2)
        );
    }
}
