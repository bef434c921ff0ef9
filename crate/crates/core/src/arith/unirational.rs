use std::fmt;


use super::ring::{Field, Rational, Ring};
use super::unipoly::UniPoly;

/// Rational function in the single parameter `k`, kept canonical:
/// numerator and denominator coprime, denominator monic, and zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniRational {
    num: UniPoly,
    den: UniPoly,
}

impl UniRational {
    /// Builds `num/den` in canonical form. Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in UniRational");
        if num.is_zero() {
            return UniRational::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero").recip();
        UniRational {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        UniRational {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        UniRational::from_poly(UniPoly::constant(c))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Ring for UniRational {
    fn zero() -> Self {
        UniRational {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    fn one() -> Self {
        UniRational::from_poly(UniPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return UniRational::new(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let a = self.den.div_rem(&g).0;
        let b = other.den.div_rem(&g).0;
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        UniRational::new(num, a.mul(&other.den))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniRational::zero();
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = other.den.div_rem(&g1).0;
        let n2 = other.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        UniRational::new(n1.mul(&n2), d1.mul(&d2))
    }

    fn neg(&self) -> Self {
        UniRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn from_i64(v: i64) -> Self {
        UniRational::from_poly(UniPoly::from_i64(v))
    }

    fn from_rational(v: &Rational) -> Self {
        UniRational::constant(v.clone())
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self.mul(&other.inv()))
    }
}

impl Field for UniRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        UniRational::new(self.den.clone(), self.num.clone())
    }
}

impl From<UniPoly> for UniRational {
    fn from(p: UniPoly) -> Self {
        UniRational::from_poly(p)
    }
}

impl fmt::Display for UniRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for UniRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniRational({self})")
    }
}
