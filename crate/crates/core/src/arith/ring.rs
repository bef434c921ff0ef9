use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always reduced with a positive denominator.
pub type Rational = BigRational;

/// Commutative ring with exact arithmetic, used as the coefficient type of
/// [`LaurentPoly`](super::LaurentPoly).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(v: &Rational) -> Self;

    /// Exact quotient `self / other`, or `None` when it does not exist in the ring.
    fn try_div(&self, other: &Self) -> Option<Self>;

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(v: &Rational) -> Self {
        v.clone()
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `num/den`, with an explicit `/1` for integers.
pub fn fmt_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Formats a rational compactly: integers without a denominator.
pub fn fmt_compact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}
