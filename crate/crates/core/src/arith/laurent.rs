use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::ring::Ring;
use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

/// Sparse Laurent polynomial in `nvars` variables (`x, y_1, …, y_n` in this
/// crate) with coefficients in a ring `S`.
///
/// Terms are kept in a `BTreeMap`, so iteration is in increasing
/// lexicographic exponent order, which is also the term order used by
/// [`LaurentPoly::exact_div`].
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<S: Ring> {
    nvars: usize,
    terms: BTreeMap<Exponent, S>,
}

impl<S: Ring> LaurentPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        LaurentPoly::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::constant(nvars, S::one())
    }

    pub fn monomial(exp: Exponent, c: S) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The monomial `v_var^power` with coefficient one.
    pub fn var(nvars: usize, var: usize, power: i32) -> Self {
        let mut e = vec![0; nvars];
        e[var] = power;
        LaurentPoly::monomial(e, S::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, S)>) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> Option<&S> {
        self.terms.get(exp)
    }

    /// Adds `c·x^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn sub_assign(&mut self, other: &Self) {
        assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), &c.neg());
        }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul(c2));
            }
        }
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Applies a coefficientwise map; zero results are dropped.
    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    /// Fallible coefficientwise map.
    pub fn try_map_coeffs<T: Ring, E>(
        &self,
        f: impl Fn(&Exponent, &S) -> std::result::Result<T, E>,
    ) -> std::result::Result<LaurentPoly<T>, E> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let v = f(e, c)?;
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        Ok(out)
    }

    /// Applies a map on exponent vectors (e.g. a Weyl group element).
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Exponent) -> Self {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c);
        }
        out
    }

    /// The Euler derivation `v·∂/∂v` in variable `var`.
    pub fn euler_derivative(&self, var: usize) -> Self {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] != 0 {
                out.terms.insert(e.clone(), c.mul(&S::from_i64(e[var] as i64)));
            }
        }
        out
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs lexicographic long division. A quotient exists only if every
    /// quotient exponent lies inside the box given by the Newton polytopes,
    /// `min(f) - min(g) ≤ e ≤ max(f) - max(g)` coordinatewise; leaving that box
    /// or a non-divisible leading coefficient reports `DivisionNotExact`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let (fmin, fmax) = self.exponent_bounds();
        let (gmin, gmax) = divisor.exponent_bounds();
        let lo: Vec<i32> = fmin.iter().zip(&gmin).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = fmax.iter().zip(&gmax).map(|(a, b)| a - b).collect();

        let (lead_exp, lead_coeff) = divisor.terms.iter().next_back().expect("nonzero divisor");
        let mut rem = self.terms.clone();
        let mut quot = LaurentPoly::zero(self.nvars);
        while let Some((e, c)) = rem.pop_last() {
            let qe: Exponent = e.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return Err(Error::DivisionNotExact);
            }
            let qc = c.try_div(lead_coeff).ok_or(Error::DivisionNotExact)?;
            for (ge, gc) in divisor.terms.iter().rev().skip(1) {
                let te: Exponent = qe.iter().zip(ge).map(|(a, b)| a + b).collect();
                let delta = qc.mul(gc);
                match rem.entry(te) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(delta.neg());
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        o.get_mut().sub_assign(&delta);
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.terms.insert(qe, qc);
        }
        Ok(quot)
    }

    /// Coordinatewise minimum and maximum exponents (zero polynomial: all zeros).
    pub fn exponent_bounds(&self) -> (Exponent, Exponent) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        if self.is_zero() {
            return (vec![0; self.nvars], vec![0; self.nvars]);
        }
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Terms in graded-lex order: larger `Σ|e_i|` first, ties broken by
    /// decreasing lexicographic order of the exponent vector.
    pub fn graded_lex_terms(&self) -> Vec<(&Exponent, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| graded_lex_cmp(b, a));
        v
    }
}

pub fn graded_lex_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|x| x.abs() as i64).sum();
    let db: i64 = b.iter().map(|x| x.abs() as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Renders an exponent vector as `x^a y1^b …`, omitting zero exponents.
pub fn monomial_name(e: &[i32]) -> String {
    let mut parts = Vec::new();
    for (i, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        let name = if i == 0 { "x".to_string() } else { format!("y{i}") };
        if p == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{p}"));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl<S: Ring + fmt::Display> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .graded_lex_terms()
            .into_iter()
            .map(|(e, c)| format!("({c})*{}", monomial_name(e)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<S: Ring> fmt::Debug for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{int, Rational};
    use proptest::prelude::*;

    type P = LaurentPoly<Rational>;

    fn x() -> P {
        P::var(2, 0, 1)
    }

    fn y() -> P {
        P::var(2, 1, 1)
    }

    fn one() -> P {
        P::one(2)
    }

    #[test]
    fn divides_constructed_product() {
        let g = x().mul(&y()).sub(&one());
        let f = g.mul(&x().add(&y()));
        assert_eq!(f.exact_div(&g).unwrap(), x().add(&y()));
    }

    #[test]
    fn zero_dividend() {
        assert_eq!(P::zero(2).exact_div(&x().sub(&y())).unwrap(), P::zero(2));
    }

    #[test]
    fn difference_of_squares() {
        let f = x().mul(&x()).sub(&y().mul(&y()));
        assert_eq!(f.exact_div(&x().add(&y())).unwrap(), x().sub(&y()));
    }

    #[test]
    fn non_divisible_is_reported() {
        let f = x().add(&one());
        assert_eq!(f.exact_div(&x().sub(&y())), Err(Error::DivisionNotExact));
        // Laurent case where naive division would never terminate
        let inv = P::var(2, 0, -1);
        assert_eq!(one().exact_div(&one().sub(&inv)), Err(Error::DivisionNotExact));
    }

    fn sparse() -> impl Strategy<Value = P> {
        prop::collection::vec(((-2i32..3, -2i32..3), -3i64..4), 1..5).prop_map(|ts| {
            P::from_terms(2, ts.into_iter().map(|((a, b), c)| (vec![a, b], int(c))))
        })
    }

    proptest! {
        #[test]
        fn division_round_trip(f in sparse(), g in sparse()) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!(f.mul(&g).exact_div(&g).unwrap(), f);
        }
    }
}
