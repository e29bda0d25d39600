//! Exact Betti numbers of lexicographic quotients.
//!
//! Fix `R = k[x_1..x_p]` and a free module `F = R^s` with all generators in
//! degree zero, basis ordered `e_1 > e_2 > ... > e_s`. For a quotient
//! Hilbert function `h` the lex submodule `L` has `s*r_d - h_d` monomials in
//! degree `d`, filling `e_1` before `e_2` and so on; each component is a lex
//! ideal whose degree-`d` piece is a lex segment. Minimal generators are the
//! segment positions not reached from the previous degree, and each
//! generator `u` of degree `d` contributes `C(maxvar(u) - 1, i)` to
//! `beta_{i+1, d+i}` of the quotient (the resolution of a stable monomial
//! ideal is supported on such counts).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::analysis::reverse;
use crate::diagram::BettiDiagram;
use crate::hvector::HVector;
use crate::rational::{binomial, poly_dim, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexError {
    /// A dimension argument lies outside `0..=r_d`.
    OutOfRange,
    /// The sequence is not the Hilbert function of a quotient of `F` by a
    /// submodule (some growth step is too steep, a coefficient is negative
    /// or fractional, or `h_0 > s`).
    NotOSequence,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfRange => write!(f, "dimension out of range"),
            Self::NotOSequence => write!(f, "not a module O-sequence"),
        }
    }
}

/// A monomial as an exponent vector, largest variable first; the derived
/// ordering on exponent vectors is the lex order on monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> i64 {
        self.exponents.iter().map(|e| *e as i64).sum()
    }

    /// One-based index of the smallest variable dividing the monomial;
    /// zero for the constant monomial.
    pub fn max_var(&self) -> usize {
        self.exponents
            .iter()
            .rposition(|e| *e > 0)
            .map_or(0, |i| i + 1)
    }

    fn times_var(&self, v: usize) -> Self {
        let mut exponents = self.exponents.clone();
        exponents[v] += 1;
        Self { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
        let short = self.exponents.len() <= NAMES.len();
        let mut wrote = false;
        for (i, e) in self.exponents.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            let name: String = if short {
                String::from(NAMES[i])
            } else {
                alloc::format!("x{}", i + 1)
            };
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `vars` variables, in descending lex order.
pub fn monomials_of_degree(d: i64, vars: usize) -> Vec<Monomial> {
    fn rec(remaining: i64, vars_left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if vars_left == 1 {
            prefix.push(remaining as u32);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e as u32);
            rec(remaining - e, vars_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 || vars == 0 {
        return out;
    }
    rec(d, vars, &mut Vec::with_capacity(vars), &mut out);
    out
}

fn dim_usize(d: i64, vars: usize) -> usize {
    poly_dim(d, vars).to_usize().expect("dimension fits usize")
}

/// Dimension of `R_1 * span(top a monomials of degree d)`: the degree-`d+1`
/// slice of the lex-segment ideal generated in degree `d` by the `a`
/// largest monomials.
fn segment_span_growth(a: usize, d: i64, vars: usize) -> usize {
    if a == 0 {
        return 0;
    }
    let monomials = monomials_of_degree(d, vars);
    debug_assert!(a <= monomials.len());
    let mut products: BTreeSet<Monomial> = BTreeSet::new();
    for m in &monomials[..a] {
        for v in 0..vars {
            products.insert(m.times_var(v));
        }
    }
    products.len()
}

/// The Macaulay bound: the largest attainable quotient dimension in degree
/// `d + 1` given quotient dimension `a` in degree `d`, realized by the lex
/// segment complement. Satisfies `macaulay_growth(0, ..) = 0` and
/// `macaulay_growth(r_d, ..) = r_{d+1}`.
pub fn macaulay_growth(a: usize, d: i64, vars: usize) -> Result<usize, LexError> {
    let rd = dim_usize(d, vars);
    if a > rd {
        return Err(LexError::OutOfRange);
    }
    Ok(dim_usize(d + 1, vars) - segment_span_growth(rd - a, d, vars))
}

/// Per-degree dimensions of the lex submodule and its component ideals for
/// a quotient Hilbert function `h` on `F = R^s`.
///
/// Component `i` (one-based) has degree-`d` dimension
/// `clamp(s*r_d - h_d - (i-1)*r_d, 0, r_d)`: the lex order fills earlier
/// basis vectors first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexProfile {
    vars: usize,
    generators: usize,
    socle_degree: i64,
    /// `component_dims[i][d]` for components `0..s` and degrees `0..=c+1`.
    component_dims: Vec<Vec<usize>>,
}

impl LexProfile {
    /// Builds the profile and verifies that every component's dimension
    /// sequence is achievable by a lex ideal (each degree contains the span
    /// of the previous degree times the variables). Rejects fractional or
    /// negative coefficients and `h_d > s * r_d`.
    pub fn build(h: &HVector, generators: usize, vars: usize) -> Result<Self, LexError> {
        if vars == 0 || generators == 0 {
            return Err(LexError::NotOSequence);
        }
        if let Some(lo) = h.min_degree() {
            if lo < 0 {
                return Err(LexError::NotOSequence);
            }
        }
        let socle_degree = h.degree().unwrap_or(-1);
        let mut dense: Vec<usize> = Vec::new();
        for d in 0..=socle_degree {
            let q = h.coeff(d);
            if q.is_negative() || !q.denom().is_one() {
                return Err(LexError::NotOSequence);
            }
            dense.push(q.numer().to_usize().ok_or(LexError::NotOSequence)?);
        }
        let mut component_dims = alloc::vec![Vec::new(); generators];
        for d in 0..=(socle_degree + 1) {
            let rd = dim_usize(d, vars);
            let hd = *dense.get(d as usize).unwrap_or(&0);
            let total = generators * rd;
            if hd > total {
                return Err(LexError::NotOSequence);
            }
            let mut rest = total - hd;
            for dims in component_dims.iter_mut() {
                let take = rest.min(rd);
                dims.push(take);
                rest -= take;
            }
        }
        let profile = Self {
            vars,
            generators,
            socle_degree,
            component_dims,
        };
        for dims in &profile.component_dims {
            for d in 0..=profile.socle_degree {
                let du = d as usize;
                if segment_span_growth(dims[du], d, vars) > dims[du + 1] {
                    return Err(LexError::NotOSequence);
                }
            }
        }
        Ok(profile)
    }

    pub fn component_dim(&self, component: usize, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        if d > self.socle_degree + 1 {
            return dim_usize(d, self.vars);
        }
        self.component_dims[component][d as usize]
    }

    /// Calls `visit(component, degree, monomial)` for every minimal
    /// generator of every component ideal, skipping components that swallow
    /// the whole ring (their quotient is the zero module).
    fn for_each_generator<F: FnMut(usize, i64, &Monomial)>(&self, mut visit: F) {
        for (component, dims) in self.component_dims.iter().enumerate() {
            if dims[0] == 1 {
                continue;
            }
            for d in 1..=(self.socle_degree + 1) {
                let du = d as usize;
                let reached = segment_span_growth(dims[du - 1], d - 1, self.vars);
                if dims[du] > reached {
                    let monomials = monomials_of_degree(d, self.vars);
                    for m in &monomials[reached..dims[du]] {
                        visit(component, d, m);
                    }
                }
            }
        }
    }
}

/// Whether `h` is the Hilbert function of a quotient of `R^s` by a
/// submodule, with all generators in degree zero.
pub fn module_o_sequence(h: &HVector, generators: usize, vars: usize) -> bool {
    LexProfile::build(h, generators, vars).is_ok()
}

/// Largest quotient dimension attainable in degree `d + 1` given the
/// profile's dimensions through degree `d`; used to prune enumerations.
pub fn max_next_value(h: &HVector, generators: usize, vars: usize, d: i64) -> Option<usize> {
    let truncated = HVector::from_terms(h.iter().filter(|(e, _)| *e <= d).map(|(e, q)| (e, q.clone())));
    let profile = LexProfile::build(&truncated, generators, vars).ok()?;
    let mut grown = 0usize;
    for component in 0..generators {
        grown += segment_span_growth(profile.component_dim(component, d), d, vars);
    }
    Some(generators * dim_usize(d + 1, vars) - grown)
}

/// The Betti diagram of `F/L` for the lex submodule `L` with quotient
/// Hilbert function `h`; completely determined by `h`, `s` and `p`.
pub fn betti_lex(h: &HVector, generators: usize, vars: usize) -> Result<BettiDiagram, LexError> {
    let profile = LexProfile::build(h, generators, vars)?;
    let mut out = BettiDiagram::new(vars);
    for (component, dims) in profile.component_dims.iter().enumerate() {
        let _ = component;
        if dims[0] == 0 {
            out.add_entry(0, 0, Rational::one()).expect("in range");
        }
    }
    profile.for_each_generator(|_, d, m| {
        let top = m.max_var();
        for i in 0..top {
            let count = binomial(top as i64 - 1, i as i64);
            out.add_entry(i + 1, d + i as i64, Rational::from_integer(count))
                .expect("in range");
        }
    });
    Ok(out)
}

/// Minimal generators of the lex submodule as `(component, monomial)`
/// pairs, in component order then descending degree-lex position.
pub fn lex_generators(
    h: &HVector,
    generators: usize,
    vars: usize,
) -> Result<Vec<(usize, Monomial)>, LexError> {
    let profile = LexProfile::build(h, generators, vars)?;
    let mut out = Vec::new();
    profile.for_each_generator(|component, _, m| out.push((component, m.clone())));
    Ok(out)
}

/// Smallest positive integer `m` such that, for every degree, `m * h_d` is
/// an integer multiple of `r_d`; scaling by `m` makes every lex component a
/// power of the maximal ideal.
pub fn lex_stabilizer(h: &HVector, vars: usize) -> BigInt {
    let mut m = BigInt::one();
    for (d, q) in h.iter() {
        if d < 0 {
            continue;
        }
        let modulus = poly_dim(d, vars) * q.denom();
        let g = q.numer().gcd(&modulus);
        m = m.lcm(&(modulus / g));
    }
    m
}

/// `betti_lex(m*h, m*s, p) / m` for the stabilizer `m`: the normalized lex
/// bound, a sum of power-quotient diagrams `a_j * pi(0, j+1, ..., j+p)`.
/// For `s = 1` this agrees with the maximal Betti combination of `h`.
pub fn normalized_betti_lex(
    h: &HVector,
    generators: usize,
    vars: usize,
) -> Result<BettiDiagram, LexError> {
    let m = lex_stabilizer(h, vars);
    let mq = Rational::from_integer(m.clone());
    let scaled = h.scaled(&mq);
    let scaled_gens = (BigInt::from(generators) * &m)
        .to_usize()
        .ok_or(LexError::NotOSequence)?;
    let d = betti_lex(&scaled, scaled_gens, vars)?;
    Ok(d.scaled(&(Rational::one() / mq)))
}

/// Whether the lex diagram of `h` (with `h_0` generators) admits
/// cancellation of every last-column entry except the socle position:
/// `betti_lex[p-1][j] - betti_lex[p][j] >= 0` for all `j != c + p`.
pub fn exact_cancellable(h: &HVector, vars: usize) -> Result<bool, LexError> {
    let c = h.degree().ok_or(LexError::NotOSequence)?;
    let h0 = h.coeff(0);
    if !h0.is_positive() || !h0.denom().is_one() {
        return Err(LexError::NotOSequence);
    }
    let generators = h0.numer().to_usize().ok_or(LexError::NotOSequence)?;
    let d = betti_lex(h, generators, vars)?;
    let socle_row = c + vars as i64;
    let mut rows: Vec<i64> = d
        .column(vars - 1)
        .map(|(j, _)| j)
        .chain(d.column(vars).map(|(j, _)| j))
        .collect();
    rows.sort_unstable();
    rows.dedup();
    for j in rows {
        if j == socle_row {
            continue;
        }
        if (d.entry(vars - 1, j) - d.entry(vars, j)).is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`exact_cancellable`] for both `h` and its reverse (with `h_c`
/// generators on the reverse side).
pub fn exact_dual_cancellable(h: &HVector, vars: usize) -> Result<bool, LexError> {
    let rev = reverse(h).map_err(|_| LexError::NotOSequence)?;
    Ok(exact_cancellable(h, vars)? && exact_cancellable(&rev, vars)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::max_betti_combo;
    use crate::pure::pure_diagram_of;
    use crate::rational::int;

    #[test]
    fn monomial_order_and_display() {
        let degree2 = monomials_of_degree(2, 3);
        let rendered: Vec<String> = degree2.iter().map(|m| alloc::format!("{m}")).collect();
        assert_eq!(rendered, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        assert!(degree2.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(degree2[2].max_var(), 3);
        assert_eq!(Monomial::new(alloc::vec![0, 0, 0]).max_var(), 0);
    }

    #[test]
    fn macaulay_growth_examples() {
        // full degree grows to the full next degree
        assert_eq!(macaulay_growth(10, 3, 3).unwrap(), 15);
        // quotient dimension 3 in degree 2 of three variables caps at 4
        assert_eq!(macaulay_growth(3, 2, 3).unwrap(), 4);
        assert_eq!(macaulay_growth(0, 5, 3).unwrap(), 0);
        assert_eq!(macaulay_growth(7, 2, 3).unwrap_err(), LexError::OutOfRange);
    }

    #[test]
    fn o_sequence_examples() {
        assert!(module_o_sequence(
            &HVector::from_ints(&[1, 3, 6, 7, 9]),
            1,
            3
        ));
        assert!(!module_o_sequence(&HVector::from_ints(&[1, 4]), 1, 3));
        // two generators double every bound
        assert!(module_o_sequence(
            &HVector::from_ints(&[2, 6, 12, 14, 18]),
            2,
            3
        ));
        assert!(!module_o_sequence(
            &HVector::from_ints(&[2, 7]),
            2,
            3
        ));
        // an interior zero below a nonzero coefficient violates growth
        assert!(!module_o_sequence(
            &HVector::from_terms([(0, int(1)), (2, int(1))]),
            1,
            3
        ));
    }

    #[test]
    fn betti_lex_golden_matrix() {
        let h = HVector::from_ints(&[1, 3, 6, 7, 9]);
        let d = betti_lex(&h, 1, 3).unwrap();
        let expect = BettiDiagram::from_entries(
            3,
            [
                (0, 0, int(1)),
                (1, 3, int(3)),
                (2, 4, int(3)),
                (3, 5, int(1)),
                (1, 5, int(11)),
                (2, 6, int(20)),
                (3, 7, int(9)),
            ],
        )
        .unwrap();
        assert_eq!(d, expect);
        assert_eq!(d.hvector().unwrap(), h);
    }

    #[test]
    fn betti_lex_explicit_generators() {
        // the lex ideal for 1 + 3t + 6t^2 + 7t^3 + 9t^4 has three cubic and
        // eleven quintic generators
        let gens = lex_generators(&HVector::from_ints(&[1, 3, 6, 7, 9]), 1, 3).unwrap();
        let by_degree = |d: i64| gens.iter().filter(|(_, m)| m.degree() == d).count();
        assert_eq!(gens.len(), 14);
        assert_eq!(by_degree(3), 3);
        assert_eq!(by_degree(5), 11);
        let degree3: Vec<String> = gens
            .iter()
            .filter(|(_, m)| m.degree() == 3)
            .map(|(_, m)| alloc::format!("{m}"))
            .collect();
        assert_eq!(degree3, ["x^3", "x^2*y", "x^2*z"]);
    }

    #[test]
    fn betti_lex_power_quotients() {
        // h with full growth up to degree 2 resolves as the cube of the
        // maximal ideal
        let d = betti_lex(&HVector::from_ints(&[1, 3, 6]), 1, 3).unwrap();
        assert_eq!(d, pure_diagram_of(vec![0, 3, 4, 5]).unwrap());
        let d = betti_lex(&HVector::from_ints(&[1]), 1, 3).unwrap();
        assert_eq!(d, pure_diagram_of(vec![0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn normalized_betti_lex_agrees_with_max_combo() {
        let h = HVector::from_ints(&[1, 3, 6, 7, 9]);
        assert_eq!(lex_stabilizer(&h, 3), BigInt::from(10));
        let normalized = normalized_betti_lex(&h, 1, 3).unwrap();
        assert_eq!(normalized, max_betti_combo(&h, 3).unwrap().diagram);

        // all remainders zero: the plain lex diagram is already normalized
        let h = HVector::from_ints(&[1, 3, 6]);
        assert_eq!(lex_stabilizer(&h, 3), BigInt::one());
        assert_eq!(
            normalized_betti_lex(&h, 1, 3).unwrap(),
            betti_lex(&h, 1, 3).unwrap()
        );
    }

    #[test]
    fn exact_cancellable_examples() {
        let h = HVector::from_ints(&[1, 3, 6, 7, 9]);
        assert!(!exact_cancellable(&h, 3).unwrap());
        let ten_h = h.scaled(&int(10));
        assert!(exact_cancellable(&ten_h, 3).unwrap());
        assert!(exact_cancellable(&HVector::from_ints(&[1]), 3).unwrap());
    }

    #[test]
    fn exact_dual_cancellable_examples() {
        assert!(exact_dual_cancellable(&HVector::from_ints(&[1, 3, 5, 7, 6, 6, 2]), 3).unwrap());
        assert!(!exact_dual_cancellable(&HVector::from_ints(&[1, 3, 6, 8, 8, 9]), 3).unwrap());
        assert!(exact_dual_cancellable(&HVector::from_ints(&[1]), 3).unwrap());
    }

    #[test]
    fn integer_multiples_stay_cancellable() {
        for ints in [&[1i64, 3, 5, 7, 6, 6, 2][..], &[1, 3, 6, 7, 6, 6, 2]] {
            let h = HVector::from_ints(ints);
            assert!(exact_cancellable(&h, 3).unwrap());
            for m in [2i64, 3, 5] {
                assert!(exact_cancellable(&h.scaled(&int(m)), 3).unwrap());
            }
        }
    }
}
