use crate::arith::ring::int;
use crate::arith::{LaurentPoly, Ring, UniPoly, UniRational};

/// A Laurent polynomial with coefficients in `Q(k)`, stored as a polynomial
/// numerator over a single common denominator.
///
/// Operator application and projector steps only touch the numerator, so
/// they need no per-coefficient gcds. [`SymPoly::normalize`] cancels the
/// common content and makes the denominator monic.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly {
    pub num: LaurentPoly<UniPoly>,
    pub den: UniPoly,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { num: LaurentPoly::zero(nvars), den: UniPoly::one() }
    }

    pub fn one(nvars: usize) -> Self {
        SymPoly { num: LaurentPoly::one(nvars), den: UniPoly::one() }
    }

    pub fn from_num(num: LaurentPoly<UniPoly>) -> Self {
        SymPoly { num, den: UniPoly::one() }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancels the gcd of the denominator with all numerator coefficients.
    pub fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return SymPoly::zero(self.nvars());
        }
        let mut g = self.den.clone();
        for (_, c) in self.num.terms() {
            if g.is_constant() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_constant() {
            self.num = self.num.map_coeffs(|c| c.try_div(&g).expect("gcd divides"));
            self.den = self.den.try_div(&g).expect("gcd divides");
        }
        let lc = self.den.leading().expect("nonzero denominator").clone();
        if !Ring::is_one(&lc) {
            let inv = UniPoly::constant(lc.recip());
            self.num = self.num.scale(&inv);
            self.den = self.den.monic();
        }
        self
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&other.den);
        let a = other.den.try_div(&g).expect("gcd divides");
        let b = self.den.try_div(&g).expect("gcd divides");
        let mut num = self.num.scale(&a);
        num.add_assign(&other.num.scale(&b));
        SymPoly { num, den: self.den.mul(&a) }.normalize()
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.scale(&UniRational::constant(int(-1))))
    }

    pub fn scale(&self, s: &UniRational) -> SymPoly {
        if s.is_zero() {
            return SymPoly::zero(self.nvars());
        }
        SymPoly { num: self.num.scale(s.num()), den: self.den.mul(s.den()) }.normalize()
    }

    /// Coefficient of `x^exp` as an element of `Q(k)`.
    pub fn coeff(&self, exp: &[i32]) -> UniRational {
        match self.num.coeff(exp) {
            Some(c) => UniRational::new(c.clone(), self.den.clone()),
            None => UniRational::zero(),
        }
    }

    /// The same polynomial with canonical `Q(k)` coefficients.
    pub fn to_rational_coeffs(&self) -> LaurentPoly<UniRational> {
        self.num.map_coeffs(|c| UniRational::new(c.clone(), self.den.clone()))
    }

    /// Sum of all coefficients, i.e. the value at `x = y_j = 1`.
    pub fn value_at_one(&self) -> UniRational {
        let mut acc = UniPoly::zero();
        for (_, c) in self.num.terms() {
            acc.add_assign(c);
        }
        UniRational::new(acc, self.den.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_uses_common_denominator() {
        let kp1 = UniPoly::linear(int(1), int(1));
        let x = LaurentPoly::<UniPoly>::var(2, 0, 1);
        let a = SymPoly { num: x.clone(), den: kp1.clone() };
        let b = SymPoly { num: x.scale(&UniPoly::k()), den: kp1.clone() };
        // x/(k+1) + kx/(k+1) = x
        let s = a.add(&b);
        assert_eq!(s.den, UniPoly::one());
        assert_eq!(s.num, x);
    }

    #[test]
    fn normalize_makes_denominator_monic() {
        let x = LaurentPoly::<UniPoly>::var(2, 1, -1);
        let f = SymPoly { num: x.scale(&UniPoly::constant(int(4))), den: UniPoly::linear(int(2), int(2)) }.normalize();
        assert_eq!(f.den, UniPoly::linear(int(1), int(1)));
        assert_eq!(f.coeff(&[0, -1]), UniRational::new(UniPoly::constant(int(2)), UniPoly::linear(int(1), int(1))));
    }
}
