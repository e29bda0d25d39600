//! Conditions and constructions on h-vectors.
//!
//! Everything here works "up to a rational multiple": the tests decide
//! whether some rational multiple of `h(t)` is the h-vector of a module of
//! the stated kind, via exact linear inequalities in consecutive
//! coefficients. Throughout, `r_i` denotes the dimension of the degree-`i`
//! piece of a polynomial ring in `p` variables ([`poly_dim_q`]) and `h_i = 0`
//! outside the support.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::diagram::BettiDiagram;
use crate::hvector::HVector;
use crate::pure::{compressed_level_hvector, pure_diagram, PureType};
use crate::rational::{poly_dim_q, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    /// The coefficient ratio `h_j / r_j` increases at the named index, so no
    /// rational multiple of `h` is the h-vector of a module generated in
    /// degree zero.
    NotModuleHVector(i64),
    /// The zero polynomial has no reverse.
    ZeroPolynomial,
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotModuleHVector(j) => {
                write!(f, "h_j/r_j increases at j = {j}; not a module h-vector direction")
            }
            Self::ZeroPolynomial => write!(f, "zero polynomial"),
        }
    }
}

fn det2(m: [[Rational; 2]; 2]) -> Rational {
    let [[a, b], [c, d]] = m;
    a * d - b * c
}

fn det3(m: [[Rational; 3]; 3]) -> Rational {
    let [[a, b, c], [d, e, f], [g, h, i]] = m;
    a * det2([[e.clone(), f.clone()], [h.clone(), i.clone()]])
        - b * det2([[d.clone(), f], [g.clone(), i]])
        + c * det2([[d, e], [g, h]])
}

fn assert_standard_support(h: &HVector) {
    assert!(!h.is_zero(), "h-vector must be nonzero");
    assert_eq!(h.min_degree(), Some(0), "h-vector must be supported on [0, c]");
    assert!(h.coeff(0).is_positive(), "h_0 must be positive");
}

/// The coefficients and diagram of the largest Betti table with h-vector
/// `h`: `a_j = h_j/r_j - h_{j+1}/r_{j+1}` and
/// `D = sum a_j pi(0, j+1, ..., j+p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxBettiCombo {
    /// `a_0, ..., a_c`, all nonnegative.
    pub coefficients: Vec<Rational>,
    pub diagram: BettiDiagram,
}

/// Full-power pure type `(0, j+1, j+2, ..., j+p)`.
pub fn power_type(j: i64, p: usize) -> PureType {
    let mut degrees = Vec::with_capacity(p + 1);
    degrees.push(0);
    for i in 1..=p {
        degrees.push(j + i as i64);
    }
    PureType::new(degrees).expect("strictly increasing")
}

/// Fails with the first index where `a_j < 0`; on success the diagram has
/// h-vector exactly `h`.
pub fn max_betti_combo(h: &HVector, p: usize) -> Result<MaxBettiCombo, AnalysisError> {
    assert_standard_support(h);
    let c = h.degree().expect("nonzero");
    let mut coefficients = Vec::with_capacity((c + 1) as usize);
    let mut diagram = BettiDiagram::new(p);
    for j in 0..=c {
        let a = h.coeff(j) / poly_dim_q(j, p) - h.coeff(j + 1) / poly_dim_q(j + 1, p);
        if a.is_negative() {
            return Err(AnalysisError::NotModuleHVector(j));
        }
        if !a.is_zero() {
            diagram.add_scaled(&a, &pure_diagram(&power_type(j, p)));
        }
        coefficients.push(a);
    }
    debug_assert_eq!(diagram.hvector().as_ref(), Ok(h));
    Ok(MaxBettiCombo {
        coefficients,
        diagram,
    })
}

/// Witness for membership in the cone spanned by compressed-level h-vectors
/// of socle degree `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelWitness {
    /// Coefficients `f_0, ..., f_c` with
    /// `h(t) = sum f_i * compressed_level_hvector(i, c, p)`.
    pub coefficients: Vec<Rational>,
    /// The 3x3 determinants in consecutive coefficients; `f_i` has the same
    /// sign as `determinants[i]`.
    pub determinants: Vec<Rational>,
    /// All determinants nonnegative.
    pub pass: bool,
}

/// Decides whether `h` is a nonnegative combination of compressed-level
/// h-vectors of its socle degree, via the determinant
/// `| h_{i-1} h_i h_{i+1} ; r_{i-1} r_i r_{i+1} ; r_{c-i+1} r_{c-i} r_{c-i-1} | >= 0`
/// for `i = 0..=c`. The coefficient `f_i` is that determinant times
/// `r_{c-i}` divided by the two 2x2 minors pairing the `r`-rows, which are
/// strictly negative for `p >= 2`, so each `f_i` carries the determinant's
/// sign and the reconstruction below is an identity.
pub fn level_condition(h: &HVector, p: usize) -> LevelWitness {
    assert!(p >= 2, "level condition needs at least two variables");
    assert_standard_support(h);
    let c = h.degree().expect("nonzero");
    let r = |i: i64| poly_dim_q(i, p);
    let mut coefficients = Vec::new();
    let mut determinants = Vec::new();
    let mut pass = true;
    for i in 0..=c {
        let det = det3([
            [h.coeff(i - 1), h.coeff(i), h.coeff(i + 1)],
            [r(i - 1), r(i), r(i + 1)],
            [r(c - i + 1), r(c - i), r(c - i - 1)],
        ]);
        let lower = det2([[r(i - 1), r(i)], [r(c - i + 1), r(c - i)]]);
        let upper = det2([[r(i), r(i + 1)], [r(c - i), r(c - i - 1)]]);
        let f = r(c - i) * &det / (lower * upper);
        debug_assert_eq!(f.is_positive(), det.is_positive());
        if det.is_negative() {
            pass = false;
        }
        coefficients.push(f);
        determinants.push(det);
    }
    #[cfg(debug_assertions)]
    {
        let mut rebuilt = HVector::zero();
        for (i, f) in coefficients.iter().enumerate() {
            rebuilt.add_scaled(f, &compressed_level_hvector(i as i64, c, p).unwrap());
        }
        debug_assert_eq!(&rebuilt, h);
    }
    LevelWitness {
        coefficients,
        determinants,
        pass,
    }
}

/// Codimension-two specialization; the determinant condition reduces to
/// concavity of the coefficient sequence.
pub fn codim2_level_condition(h: &HVector) -> bool {
    level_condition(h, 2).pass
}

/// Witness for rational cancellability: `a`-coefficients plus the column
/// differences `D_{p-1, p+j} - D_{p, p+j}` of the maximal diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellabilityWitness {
    pub coefficients: Vec<Rational>,
    /// `margins[j] = a_{j+1} (p r_{j+1} - r_j) - a_j r_j` for `j = 0..c-1`.
    pub margins: Vec<Rational>,
    pub pass: bool,
}

/// Decides whether a rational multiple of `h` is cancellable: all `a_j`
/// nonnegative and every margin nonnegative. Each margin is also computed
/// through the equivalent determinant
/// `(1/r_{j+2}) | h_j h_{j+1} h_{j+2} ; r_j r_{j+1} r_{j+2} ; p 1 0 |`
/// and the two routes are asserted equal.
pub fn rational_cancellable(h: &HVector, p: usize) -> CancellabilityWitness {
    assert_standard_support(h);
    let c = h.degree().expect("nonzero");
    let r = |i: i64| poly_dim_q(i, p);
    let a: Vec<Rational> = (0..=c)
        .map(|j| h.coeff(j) / r(j) - h.coeff(j + 1) / r(j + 1))
        .collect();
    let mut margins = Vec::new();
    let mut pass = a.iter().all(|x| !x.is_negative());
    let pq = crate::rational::int(p as i64);
    for j in 0..c {
        let ju = j as usize;
        let margin =
            a[ju + 1].clone() * (&pq * r(j + 1) - r(j)) - a[ju].clone() * r(j);
        let det_form = det3([
            [h.coeff(j), h.coeff(j + 1), h.coeff(j + 2)],
            [r(j), r(j + 1), r(j + 2)],
            [pq.clone(), crate::rational::int(1), Rational::zero()],
        ]) / r(j + 2);
        debug_assert_eq!(margin, det_form);
        if margin.is_negative() {
            pass = false;
        }
        margins.push(margin);
    }
    CancellabilityWitness {
        coefficients: a,
        margins,
        pass,
    }
}

/// Decides whether a rational multiple of `h` is cancellable with a
/// cancellable reverse, as four families of inequalities in consecutive
/// coefficients: two determinant families for `i = 1..=c` and two ratio
/// families (in cleared-denominator form) for `i = 0..=c`. Equivalent to
/// `rational_cancellable` on `h` and on its reverse.
pub fn rational_dual_cancellable(h: &HVector, p: usize) -> bool {
    assert_standard_support(h);
    let c = h.degree().expect("nonzero");
    let r = |i: i64| poly_dim_q(i, p);
    let pq = crate::rational::int(p as i64);
    let one = crate::rational::int(1);
    for i in 1..=c {
        let forward = det3([
            [h.coeff(i - 1), h.coeff(i), h.coeff(i + 1)],
            [r(i - 1), r(i), r(i + 1)],
            [pq.clone(), one.clone(), Rational::zero()],
        ]);
        if forward.is_negative() {
            return false;
        }
        let backward = det3([
            [h.coeff(i - 1), h.coeff(i), h.coeff(i + 1)],
            [Rational::zero(), one.clone(), pq.clone()],
            [r(c - i + 1), r(c - i), r(c - i - 1)],
        ]);
        if backward.is_negative() {
            return false;
        }
    }
    for i in 0..=c {
        if (h.coeff(i) * r(i + 1) - h.coeff(i + 1) * r(i)).is_negative() {
            return false;
        }
        if (h.coeff(i + 1) * r(c - i) - h.coeff(i) * r(c - i - 1)).is_negative() {
            return false;
        }
    }
    true
}

/// Coefficient reversal on `[0, c]`: `h_c + h_{c-1} t + ... + h_0 t^c`.
pub fn reverse(h: &HVector) -> Result<HVector, AnalysisError> {
    let c = h.degree().ok_or(AnalysisError::ZeroPolynomial)?;
    Ok(HVector::from_terms(
        h.iter().map(|(d, q)| (c - d, q.clone())),
    ))
}

/// The h-vectors carved out of `h` by a multiplication map that is
/// injective up to the first weak descent and surjective afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzSplit {
    /// Smallest `u` with `h_u >= h_{u+1}`.
    pub descent: i64,
    /// Cokernel h-vector: forward differences through degree `u`.
    pub cokernel: HVector,
    /// Kernel h-vector: backward differences on degrees `u+1 ..= c+1`.
    pub kernel: HVector,
    /// Kernel dual, regraded to start in degree zero.
    pub kernel_dual: HVector,
}

/// Smallest `u >= 0` with `h_u >= h_{u+1}`; exists because the coefficient
/// at `c + 1` is zero.
pub fn first_weak_descent(h: &HVector) -> i64 {
    let c = h.degree().expect("nonzero");
    (0..=c).find(|&i| h.coeff(i) >= h.coeff(i + 1)).unwrap_or(c)
}

/// Splits `h` as the kernel/cokernel pair of a degree-one multiplication
/// map; the three parts always share one multiplicity.
pub fn lefschetz_split(h: &HVector) -> LefschetzSplit {
    assert_standard_support(h);
    let c = h.degree().expect("nonzero");
    let u = first_weak_descent(h);
    let mut cokernel = HVector::zero();
    for i in 0..=u {
        cokernel.add_term(i, h.coeff(i) - h.coeff(i - 1));
    }
    let mut kernel = HVector::zero();
    for i in (u + 1)..=(c + 1) {
        kernel.add_term(i, h.coeff(i - 1) - h.coeff(i));
    }
    let mut kernel_dual = HVector::zero();
    for i in 0..=(c - u) {
        kernel_dual.add_term(i, h.coeff(c - i) - h.coeff(c - i + 1));
    }
    debug_assert_eq!(cokernel.eval_at_one(), kernel.eval_at_one());
    debug_assert_eq!(kernel.eval_at_one(), kernel_dual.eval_at_one());
    LefschetzSplit {
        descent: u,
        cokernel,
        kernel,
        kernel_dual,
    }
}

/// Witness for the weak-Lefschetz condition in `p` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlpWitness {
    pub descent: i64,
    /// `f_0, ..., f_u`: cokernel-side coefficients over the ring in one
    /// variable fewer.
    pub front: Vec<Rational>,
    /// `g_0, ..., g_{c-u}`: kernel-side coefficients.
    pub back: Vec<Rational>,
    /// `F = sum f_i pi(0, i+1, ..., i+p-1)`, codimension `p - 1`.
    pub front_diagram: BettiDiagram,
    /// `G = sum g_i pi(0, i+1, ..., i+p-1)`, codimension `p - 1`.
    pub back_diagram: BettiDiagram,
    /// `E[i][j] = F[i][j] + G[p-i][p+c-j]`, codimension `p`.
    pub bound_diagram: BettiDiagram,
    /// All `f_i` and `g_i` nonnegative.
    pub pass: bool,
}

/// Decides whether a rational multiple of `h` is the h-vector of a level
/// module with the weak Lefschetz property, and builds the associated upper
/// bound diagram `E` from the two codimension-`(p-1)` halves.
pub fn wlp_condition(h: &HVector, p: usize) -> WlpWitness {
    assert!(p >= 2, "weak Lefschetz condition needs at least two variables");
    assert_standard_support(h);
    let c = h.degree().expect("nonzero");
    let u = first_weak_descent(h);
    let s = |i: i64| poly_dim_q(i, p - 1);

    let mut front = Vec::new();
    for i in 0..u {
        front.push(
            (h.coeff(i) - h.coeff(i - 1)) / s(i) - (h.coeff(i + 1) - h.coeff(i)) / s(i + 1),
        );
    }
    front.push((h.coeff(u) - h.coeff(u - 1)) / s(u));

    let mut back = Vec::new();
    for i in 0..(c - u) {
        back.push(
            (h.coeff(c - i) - h.coeff(c - i + 1)) / s(i)
                - (h.coeff(c - i - 1) - h.coeff(c - i)) / s(i + 1),
        );
    }
    back.push((h.coeff(u) - h.coeff(u + 1)) / s(c - u));

    let pass = front.iter().chain(back.iter()).all(|x| !x.is_negative());

    let half_diagram = |coeffs: &[Rational]| {
        let mut d = BettiDiagram::new(p - 1);
        for (i, q) in coeffs.iter().enumerate() {
            if !q.is_zero() {
                d.add_scaled(q, &pure_diagram(&power_type(i as i64, p - 1)));
            }
        }
        d
    };
    let front_diagram = half_diagram(&front);
    let back_diagram = half_diagram(&back);

    let mut bound_diagram = BettiDiagram::new(p);
    for (i, j, q) in front_diagram.iter() {
        bound_diagram.add_entry(i, j, q.clone()).expect("in range");
    }
    for (i, j, q) in back_diagram.iter() {
        bound_diagram
            .add_entry(p - i, p as i64 + c - j, q.clone())
            .expect("in range");
    }
    WlpWitness {
        descent: u,
        front,
        back,
        front_diagram,
        back_diagram,
        bound_diagram,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pure::greedy_decompose;
    use crate::rational::{int, ratio};

    #[test]
    fn max_betti_combo_known_values() {
        let h = HVector::from_ints(&[1, 3, 6, 7, 9]);
        let combo = max_betti_combo(&h, 3).unwrap();
        assert_eq!(
            combo.coefficients,
            vec![int(0), int(0), ratio(3, 10), ratio(1, 10), ratio(3, 5)]
        );
        let d = &combo.diagram;
        for (i, j, v) in [
            (0, 0, int(1)),
            (1, 3, int(3)),
            (2, 4, ratio(9, 2)),
            (3, 5, ratio(9, 5)),
            (1, 4, ratio(3, 2)),
            (2, 5, ratio(12, 5)),
            (3, 6, int(1)),
            (1, 5, ratio(63, 5)),
            (2, 6, int(21)),
            (3, 7, int(9)),
        ] {
            assert_eq!(d.entry(i, j), v);
        }
        assert_eq!(d.hvector().unwrap(), h);

        let trivial = max_betti_combo(&HVector::from_ints(&[1]), 3).unwrap();
        assert_eq!(trivial.coefficients, vec![int(1)]);
        assert_eq!(
            trivial.diagram,
            pure_diagram(&PureType::new(vec![0, 1, 2, 3]).unwrap())
        );

        assert_eq!(
            max_betti_combo(&HVector::from_ints(&[1, 4]), 3).unwrap_err(),
            AnalysisError::NotModuleHVector(0)
        );
    }

    #[test]
    fn level_condition_known_values() {
        let w = level_condition(&HVector::from_ints(&[1, 3, 6, 7, 9]), 3);
        assert!(w.pass);
        assert_eq!(
            w.coefficients,
            vec![int(0), int(0), ratio(3, 7), int(0), ratio(4, 7)]
        );

        let w = level_condition(&HVector::from_ints(&[1, 3, 5, 6, 2]), 3);
        assert!(w.pass);
        assert_eq!(
            w.coefficients,
            vec![int(0), ratio(5, 21), ratio(11, 42), ratio(1, 2), int(0)]
        );

        // a compressed-level h-vector decomposes as itself
        let h = compressed_level_hvector(1, 3, 3).unwrap();
        let w = level_condition(&h, 3);
        assert!(w.pass);
        assert_eq!(w.coefficients, vec![int(0), int(1), int(0), int(0)]);
    }

    #[test]
    fn level_condition_signs_match() {
        for h in [
            HVector::from_ints(&[1, 3, 6, 10, 7, 6, 2]),
            HVector::from_ints(&[2, 5, 3, 4]),
            HVector::from_ints(&[1, 2, 3, 2, 1]),
        ] {
            let w = level_condition(&h, 3);
            for (f, det) in w.coefficients.iter().zip(&w.determinants) {
                assert_eq!(f.is_positive(), det.is_positive());
                assert_eq!(f.is_zero(), det.is_zero());
            }
        }
    }

    #[test]
    fn codim2_examples() {
        assert!(codim2_level_condition(&HVector::from_ints(&[1, 2, 1])));
        assert!(!codim2_level_condition(&HVector::from_ints(&[1, 1, 3])));
        assert!(codim2_level_condition(&HVector::from_ints(&[1])));
    }

    #[test]
    fn rational_cancellable_examples() {
        let w = rational_cancellable(&HVector::from_ints(&[1, 3, 6, 7, 9]), 3);
        assert!(w.pass);
        // margins at rows 5 and 6 are the two displayed column differences
        assert_eq!(w.margins[2], ratio(12, 5) - ratio(9, 5));
        assert_eq!(w.margins[3], int(21) - int(1));

        assert!(rational_cancellable(&HVector::from_ints(&[1]), 3).pass);
        assert!(rational_cancellable(&HVector::from_ints(&[1]), 5).pass);
        assert!(rational_cancellable(&HVector::from_ints(&[1, 3, 6, 8, 8, 9]), 3).pass);
    }

    #[test]
    fn dual_cancellable_examples() {
        assert!(rational_dual_cancellable(
            &HVector::from_ints(&[1, 3, 6, 7, 9]),
            3
        ));
        assert!(rational_dual_cancellable(
            &HVector::from_ints(&[1, 3, 5, 7, 6, 6, 2]),
            3
        ));
        // equivalent to checking h and its reverse separately
        for ints in [
            &[1i64, 3, 6, 7, 9][..],
            &[1, 3, 5, 7, 6, 6, 2],
            &[2, 4, 3, 1],
            &[1, 2, 4, 5],
            &[3, 2, 5],
        ] {
            let h = HVector::from_ints(ints);
            let direct = rational_dual_cancellable(&h, 3);
            let split = rational_cancellable(&h, 3).pass
                && rational_cancellable(&reverse(&h).unwrap(), 3).pass;
            assert_eq!(direct, split, "mismatch for {ints:?}");
        }
    }

    #[test]
    fn reverse_examples() {
        let h = HVector::from_ints(&[1, 2, 3]);
        assert_eq!(reverse(&h).unwrap(), HVector::from_ints(&[3, 2, 1]));
        assert_eq!(reverse(&reverse(&h).unwrap()).unwrap(), h);
        assert_eq!(
            reverse(&HVector::zero()).unwrap_err(),
            AnalysisError::ZeroPolynomial
        );
    }

    #[test]
    fn lefschetz_split_examples() {
        let split = lefschetz_split(&HVector::from_ints(&[1, 3, 5, 6, 2]));
        assert_eq!(split.descent, 3);
        assert_eq!(split.cokernel, HVector::from_ints(&[1, 2, 2, 1]));
        assert_eq!(split.kernel, HVector::from_terms([(4, int(4)), (5, int(2))]));
        assert_eq!(split.kernel_dual, HVector::from_ints(&[2, 4]));

        let split = lefschetz_split(&HVector::from_ints(&[1]));
        assert_eq!(split.descent, 0);
        assert_eq!(split.cokernel, HVector::from_ints(&[1]));
        assert_eq!(split.kernel, HVector::from_terms([(1, int(1))]));
        assert_eq!(split.kernel_dual, HVector::from_ints(&[1]));

        let split = lefschetz_split(&HVector::from_ints(&[1, 3]));
        assert_eq!(split.descent, 1);
        assert_eq!(split.cokernel, HVector::from_ints(&[1, 2]));
        assert_eq!(split.kernel, HVector::from_terms([(2, int(3))]));
        assert_eq!(split.kernel_dual, HVector::from_ints(&[3]));
    }

    #[test]
    fn wlp_known_witness() {
        let w = wlp_condition(&HVector::from_ints(&[1, 3, 5, 6, 2]), 3);
        assert!(w.pass);
        assert_eq!(w.descent, 3);
        assert_eq!(w.front, vec![int(0), ratio(1, 3), ratio(5, 12), ratio(1, 4)]);
        assert_eq!(w.back, vec![int(0), int(2)]);

        for (i, j, v) in [
            (0, 0, int(1)),
            (1, 2, int(1)),
            (2, 3, ratio(2, 3)),
            (1, 3, ratio(5, 3)),
            (2, 4, ratio(5, 4)),
            (1, 4, ratio(5, 4)),
            (2, 5, int(1)),
        ] {
            assert_eq!(w.front_diagram.entry(i, j), v, "F at ({i}, {j})");
        }
        for (i, j, v) in [(0, 0, int(2)), (1, 2, int(6)), (2, 3, int(4))] {
            assert_eq!(w.back_diagram.entry(i, j), v, "G at ({i}, {j})");
        }
        for (i, j, v) in [
            (0, 0, int(1)),
            (1, 2, int(1)),
            (2, 3, ratio(2, 3)),
            (1, 3, ratio(5, 3)),
            (2, 4, ratio(5, 4)),
            (1, 4, ratio(21, 4)),
            (2, 5, int(7)),
            (3, 7, int(2)),
        ] {
            assert_eq!(w.bound_diagram.entry(i, j), v, "E at ({i}, {j})");
        }

        let combo = greedy_decompose(&w.bound_diagram).unwrap();
        assert!(combo.is_chain());
        assert_eq!(combo.evaluate(3), w.bound_diagram);
    }

    #[test]
    fn wlp_failure_case() {
        let w = wlp_condition(&HVector::from_ints(&[1, 3, 6, 10, 7, 6, 2]), 3);
        assert!(!w.pass);
        assert!(w.front.iter().chain(w.back.iter()).any(|x| x.is_negative()));
    }

    #[test]
    fn wlp_full_growth_passes() {
        // h_i = r_i: every reverse difference lands nonnegative
        let h = HVector::from_ints(&[1, 3, 6, 10]);
        assert!(wlp_condition(&h, 3).pass);
    }
}
