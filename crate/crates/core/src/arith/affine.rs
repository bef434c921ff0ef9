//! Affine forms in the two parameters `(k, p)` and products of their powers.
//!
//! Every Pieri coefficient is such a product, and the blow-up limit at
//! `(k, p) = (-1, 0)` is read off factor by factor, so these values are never
//! expanded into general rational functions unless a caller asks for it.

use std::collections::BTreeMap;
use std::fmt;


use super::ring::{fmt_compact, Rational, Ring};
use super::unipoly::UniPoly;
use super::unirational::UniRational;
use crate::error::{Error, Result};

/// `a·k + b·p + c`
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineForm {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl AffineForm {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        AffineForm { a, b, c }
    }

    pub fn constant(c: Rational) -> Self {
        AffineForm::new(Rational::zero(), Rational::zero(), c)
    }

    pub fn k() -> Self {
        AffineForm::new(Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn p() -> Self {
        AffineForm::new(Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn zero() -> Self {
        AffineForm::constant(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn depends_on_p(&self) -> bool {
        !self.b.is_zero()
    }

    pub fn add(&self, o: &AffineForm) -> AffineForm {
        AffineForm::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c)
    }

    pub fn sub(&self, o: &AffineForm) -> AffineForm {
        AffineForm::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c)
    }

    pub fn scale(&self, s: &Rational) -> AffineForm {
        AffineForm::new(&self.a * s, &self.b * s, &self.c * s)
    }

    pub fn add_const(&self, c: &Rational) -> AffineForm {
        AffineForm::new(self.a.clone(), self.b.clone(), &self.c + c)
    }

    pub fn eval(&self, k: &Rational, p: &Rational) -> Rational {
        &self.a * k + &self.b * p + &self.c
    }

    /// Value at the blow-up centre `(k, p) = (-1, 0)`.
    pub fn at_center(&self) -> Rational {
        &self.c - &self.a
    }

    /// Substitutes `p = t(k+1)`, giving `(a + b t)·k + (b t + c)`.
    pub fn substitute_blowup(&self, t: &Rational) -> UniPoly {
        let bt = &self.b * t;
        UniPoly::linear(&self.a + &bt, bt + &self.c)
    }

    /// Substitutes a fixed value of `p`, leaving a polynomial in `k`.
    pub fn substitute_p(&self, p: &Rational) -> UniPoly {
        UniPoly::linear(self.a.clone(), &self.b * p + &self.c)
    }

    /// Splits into `scale · primitive` where the primitive form has its
    /// `p`-coefficient equal to 1, or (when `p`-free) its `k`-coefficient
    /// equal to 1. Constant forms return `None` together with their value.
    fn split_scale(&self) -> (Rational, Option<AffineForm>) {
        let s = if !self.b.is_zero() {
            self.b.clone()
        } else if !self.a.is_zero() {
            self.a.clone()
        } else {
            return (self.c.clone(), None);
        };
        let inv = s.recip();
        (s, Some(self.scale(&inv)))
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, name) in [(&self.a, "k"), (&self.b, "p")] {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(name.to_string());
            } else if *c == -Rational::one() {
                parts.push(format!("-{name}"));
            } else {
                parts.push(format!("{}{name}", fmt_compact(c)));
            }
        }
        if !self.c.is_zero() || parts.is_empty() {
            parts.push(fmt_compact(&self.c));
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// `prefactor · Π form^exponent`, with forms stored in primitive normalized
/// shape so that equal factors always merge.
///
/// The zero value has prefactor 0 and no factors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactoredRational {
    prefactor: Rational,
    factors: BTreeMap<AffineForm, i32>,
}

impl FactoredRational {
    pub fn one() -> Self {
        FactoredRational::constant(Rational::one())
    }

    pub fn zero() -> Self {
        FactoredRational::constant(Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        FactoredRational {
            prefactor: c,
            factors: BTreeMap::new(),
        }
    }

    /// A single form; the zero form gives the zero value.
    pub fn from_form(form: &AffineForm) -> Self {
        FactoredRational::one().mul_form(form, 1).expect("positive exponent never divides by zero")
    }

    /// `Π num / Π den`. Fails if a denominator form is identically zero.
    pub fn ratio(num: &[AffineForm], den: &[AffineForm]) -> Result<Self> {
        let mut acc = FactoredRational::one();
        for f in num {
            acc = acc.mul_form(f, 1)?;
        }
        for f in den {
            acc = acc.mul_form(f, -1)?;
        }
        Ok(acc)
    }

    pub fn prefactor(&self) -> &Rational {
        &self.prefactor
    }

    pub fn factors(&self) -> impl Iterator<Item = (&AffineForm, i32)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
    }

    /// Multiplies by `form^exp`.
    pub fn mul_form(mut self, form: &AffineForm, exp: i32) -> Result<Self> {
        if exp == 0 || self.is_zero() {
            return Ok(self);
        }
        let (scale, prim) = form.split_scale();
        if scale.is_zero() {
            if exp < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(FactoredRational::zero());
        }
        self.prefactor *= pow_rational(&scale, exp);
        if let Some(prim) = prim {
            let e = self.factors.entry(prim).or_insert(0);
            *e += exp;
            if *e == 0 {
                self.factors.retain(|_, e| *e != 0);
            }
        }
        Ok(self)
    }

    pub fn mul(&self, other: &FactoredRational) -> FactoredRational {
        if self.is_zero() || other.is_zero() {
            return FactoredRational::zero();
        }
        let mut out = self.clone();
        out.prefactor *= &other.prefactor;
        for (f, e) in &other.factors {
            let slot = out.factors.entry(f.clone()).or_insert(0);
            *slot += e;
        }
        out.factors.retain(|_, e| *e != 0);
        out
    }

    pub fn inv(&self) -> Result<FactoredRational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FactoredRational {
            prefactor: self.prefactor.recip(),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn div(&self, other: &FactoredRational) -> Result<FactoredRational> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, s: &Rational) -> FactoredRational {
        if s.is_zero() {
            return FactoredRational::zero();
        }
        let mut out = self.clone();
        out.prefactor *= s;
        out
    }

    /// Value at a point, or `None` at a pole.
    pub fn eval(&self, k: &Rational, p: &Rational) -> Option<Rational> {
        let mut acc = self.prefactor.clone();
        for (f, &e) in &self.factors {
            let v = f.eval(k, p);
            if v.is_zero() {
                if e < 0 {
                    return None;
                }
                return Some(Rational::zero());
            }
            acc *= pow_rational(&v, e);
        }
        Some(acc)
    }

    /// True when no factor involves `p`.
    pub fn is_p_free(&self) -> bool {
        self.factors.keys().all(|f| !f.depends_on_p())
    }

    /// Expands after `p = t(k+1)`. Errors if a denominator factor becomes
    /// the zero polynomial.
    pub fn substitute_blowup(&self, t: &Rational) -> Result<UniRational> {
        self.expand_with(|f| f.substitute_blowup(t))
    }

    /// Expands after fixing `p`, leaving a rational function of `k`.
    pub fn substitute_p(&self, p: &Rational) -> Result<UniRational> {
        self.expand_with(|f| f.substitute_p(p))
    }

    fn expand_with(&self, subst: impl Fn(&AffineForm) -> UniPoly) -> Result<UniRational> {
        let mut num = UniPoly::constant(self.prefactor.clone());
        let mut den = UniPoly::one();
        for (f, &e) in &self.factors {
            let lin = subst(f);
            if e > 0 {
                num = num.mul(&lin.pow(e as u32));
            } else {
                if lin.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                den = den.mul(&lin.pow((-e) as u32));
            }
        }
        Ok(UniRational::new(num, den))
    }
}

pub(crate) fn pow_rational(x: &Rational, e: i32) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_compact(&self.prefactor))?;
        for (form, e) in &self.factors {
            if *e == 1 {
                write!(f, "·({form})")?;
            } else {
                write!(f, "·({form})^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredRational[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{int, rat};

    fn form(a: i64, b: i64, c: i64) -> AffineForm {
        AffineForm::new(int(a), int(b), int(c))
    }

    #[test]
    fn scaled_forms_merge() {
        // (2k+2)/(k+1) = 2
        let f = FactoredRational::ratio(&[form(2, 0, 2)], &[form(1, 0, 1)]).unwrap();
        assert_eq!(f, FactoredRational::constant(int(2)));
    }

    #[test]
    fn zero_form_in_numerator_is_zero() {
        let f = FactoredRational::ratio(&[form(0, 0, 0), form(1, 1, 1)], &[form(1, 0, 0)]).unwrap();
        assert!(f.is_zero());
        assert_eq!(
            FactoredRational::ratio(&[], &[form(0, 0, 0)]),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn substitution_of_single_forms() {
        // k + p + 1 at t = 1 → 2k + 2
        let f = FactoredRational::from_form(&form(1, 1, 1));
        let u = f.substitute_blowup(&int(1)).unwrap();
        assert_eq!(u, UniRational::from_poly(UniPoly::linear(int(2), int(2))));
        // p-free form is unchanged for any t
        let g = FactoredRational::from_form(&form(1, 0, -3));
        for t in [int(0), rat(5, 7), int(-4)] {
            assert_eq!(
                g.substitute_blowup(&t).unwrap(),
                UniRational::from_poly(UniPoly::linear(int(1), int(-3)))
            );
        }
        // p - 2(k+1) at t = 2 vanishes identically
        let h = FactoredRational::from_form(&form(-2, 1, -2));
        assert!(h.substitute_blowup(&int(2)).unwrap().is_zero());
    }

    #[test]
    fn evaluation_matches_expansion() {
        let f = FactoredRational::ratio(&[form(1, 2, 3), form(0, 1, -1)], &[form(3, 0, 1)])
            .unwrap()
            .scale(&rat(-2, 5));
        let u = f.substitute_p(&rat(1, 3)).unwrap();
        assert_eq!(u.eval(&rat(2, 7)), f.eval(&rat(2, 7), &rat(1, 3)));
    }
}
