use std::fmt;


use super::ring::{fmt_compact, Field, Rational, Ring};

/// Dense univariate polynomial over the rationals in the parameter `k`.
///
/// Coefficients are indexed by degree; the vector never ends in a zero, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `a·k + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        UniPoly::new(vec![b, a])
    }

    /// The monomial `k`.
    pub fn k() -> Self {
        UniPoly::linear(Rational::one(), Rational::zero())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::default();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Leading coefficient 1 (the zero polynomial is returned unchanged).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor (Euclid, normalized at every step).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Largest `e` with `(k - point)^e` dividing `self`, and the cofactor.
    /// The zero polynomial is reported with order `usize::MAX`.
    pub fn split_root(&self, point: &Rational) -> (usize, UniPoly) {
        if self.is_zero() {
            return (usize::MAX, UniPoly::default());
        }
        let mut cur = self.coeffs.clone();
        let mut order = 0;
        loop {
            // synthetic division by (k - point)
            let n = cur.len();
            if n == 0 {
                break;
            }
            let mut q = vec![Rational::zero(); n - 1];
            let mut acc = Rational::zero();
            for i in (0..n).rev() {
                acc = acc * point + &cur[i];
                if i > 0 {
                    q[i - 1] = acc.clone();
                }
            }
            if !acc.is_zero() {
                break;
            }
            cur = q;
            order += 1;
        }
        (order, UniPoly::new(cur))
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }

    fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut c = long.coeffs.clone();
        for (x, y) in c.iter_mut().zip(&short.coeffs) {
            *x += y;
        }
        UniPoly::new(c)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = self.coeffs.clone();
        c.resize(n, Rational::zero());
        for (x, y) in c.iter_mut().zip(&other.coeffs) {
            *x -= y;
        }
        UniPoly::new(c)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::default();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        UniPoly::new(c)
    }

    fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn from_i64(v: i64) -> Self {
        UniPoly::constant(Rational::from_i64(v))
    }

    fn from_rational(v: &Rational) -> Self {
        UniPoly::constant(v.clone())
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.is_constant() {
            return Some(self.scale(&other.coeffs[0].inv()));
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = fmt_compact(c);
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{s}")?,
                1 => write!(f, "{s}*k")?,
                _ => write!(f, "{s}*k^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (k+1)(k-2) and (k+1)(k+3)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn split_root_counts_multiplicity() {
        let a = p(&[1, 1]).pow(3).mul(&p(&[5, 1]));
        let (e, rest) = a.split_root(&int(-1));
        assert_eq!(e, 3);
        assert_eq!(rest, p(&[5, 1]));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.try_div(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.try_div(&p(&[2, 1])), None);
    }
}
