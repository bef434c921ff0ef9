//! The deformed CMS operator for one even variable `x` and `n` odd variables
//! `y_1, …, y_n`, with `∂ = v·d/dv` and `q = 0`:
//!
//! ```text
//! ℒ = ∂_x² + k Σ ∂_j²
//!   − Σ_{i<j} [ (y_i+y_j)/(y_i−y_j) (∂_i−∂_j) + (y_iy_j+1)/(y_iy_j−1) (∂_i+∂_j) ]
//!   − p (x+1)/(x−1) ∂_x
//!   − Σ_j [ p (y_j+1)/(y_j−1) + (1−k) (y_j²+1)/(y_j²−1) ] ∂_j
//!   − Σ_j [ (x+y_j)/(x−y_j) (∂_x − k∂_j) + (xy_j+1)/(xy_j−1) (∂_x + k∂_j) ]
//! ```
//!
//! Every fraction is applied as an exact division of the derivative
//! combination by its denominator, then multiplied by the numerator.

use crate::arith::{Field, LaurentPoly, Ring};
use crate::error::Result;

/// `ℒ` at fixed values of `k` and `p` in the coefficient ring `S`.
#[derive(Clone, Debug)]
pub struct CmsOperator<S: Ring> {
    n: usize,
    k: S,
    p: S,
    one_minus_k: S,
}

/// `m1 + sign·m2` for two exponent vectors.
fn binomial<S: Ring>(nvars: usize, m1: &[(usize, i32)], m2: &[(usize, i32)], sign: i64) -> LaurentPoly<S> {
    let mono = |m: &[(usize, i32)]| {
        let mut e = vec![0; nvars];
        for &(v, p) in m {
            e[v] += p;
        }
        e
    };
    LaurentPoly::from_terms(nvars, [(mono(m1), S::one()), (mono(m2), S::from_i64(sign))])
}

impl<S: Ring> CmsOperator<S> {
    pub fn new(n: usize, k: S, p: S) -> Self {
        let one_minus_k = S::one().sub(&k);
        CmsOperator { n, k, p, one_minus_k }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> &S {
        &self.k
    }

    /// `ℒf`; fails with `DivisionNotExact` when `f` is outside the invariant algebra.
    pub fn apply(&self, f: &LaurentPoly<S>) -> Result<LaurentPoly<S>> {
        let nv = self.n + 1;
        assert_eq!(f.nvars(), nv, "variable count mismatch");
        let dx = f.euler_derivative(0);
        let dy: Vec<_> = (1..nv).map(|j| f.euler_derivative(j)).collect();

        let mut res = dx.euler_derivative(0);
        for (j, d) in dy.iter().enumerate() {
            res.add_assign(&d.euler_derivative(j + 1).scale(&self.k));
        }

        // subtracts num/den · g, den and num given as binomials
        let mut term = |g: &LaurentPoly<S>, den: LaurentPoly<S>, num: LaurentPoly<S>, s: Option<&S>| -> Result<()> {
            if g.is_zero() {
                return Ok(());
            }
            let mut q = g.exact_div(&den)?.mul(&num);
            if let Some(s) = s {
                q = q.scale(s);
            }
            res.sub_assign(&q);
            Ok(())
        };

        for i in 0..self.n {
            for j in i + 1..self.n {
                let (yi, yj) = (i + 1, j + 1);
                term(
                    &dy[i].sub(&dy[j]),
                    binomial(nv, &[(yi, 1)], &[(yj, 1)], -1),
                    binomial(nv, &[(yi, 1)], &[(yj, 1)], 1),
                    None,
                )?;
                term(
                    &dy[i].add(&dy[j]),
                    binomial(nv, &[(yi, 1), (yj, 1)], &[], -1),
                    binomial(nv, &[(yi, 1), (yj, 1)], &[], 1),
                    None,
                )?;
            }
        }

        term(&dx, binomial(nv, &[(0, 1)], &[], -1), binomial(nv, &[(0, 1)], &[], 1), Some(&self.p))?;

        for (j, d) in dy.iter().enumerate() {
            let y = j + 1;
            term(d, binomial(nv, &[(y, 1)], &[], -1), binomial(nv, &[(y, 1)], &[], 1), Some(&self.p))?;
            term(
                d,
                binomial(nv, &[(y, 2)], &[], -1),
                binomial(nv, &[(y, 2)], &[], 1),
                Some(&self.one_minus_k),
            )?;
        }

        for (j, d) in dy.iter().enumerate() {
            let y = j + 1;
            let kd = d.scale(&self.k);
            term(
                &dx.sub(&kd),
                binomial(nv, &[(0, 1)], &[(y, 1)], -1),
                binomial(nv, &[(0, 1)], &[(y, 1)], 1),
                None,
            )?;
            term(
                &dx.add(&kd),
                binomial(nv, &[(0, 1), (y, 1)], &[], -1),
                binomial(nv, &[(0, 1), (y, 1)], &[], 1),
                None,
            )?;
        }
        Ok(res)
    }
}

/// `k·p_1·f`, where `k·p_1 = k(x + x⁻¹) + Σ (y_j + y_j⁻¹)`; avoids inverting `k`
/// in polynomial coefficient rings.
pub fn k_p1_multiply<S: Ring>(f: &LaurentPoly<S>, k: &S) -> LaurentPoly<S> {
    let nv = f.nvars();
    let mut unit = vec![0; nv];
    let mut out = LaurentPoly::zero(nv);
    unit[0] = 1;
    let xs = f.shift(&unit).add(&f.shift(&unit.iter().map(|v| -v).collect::<Vec<_>>()));
    out.add_assign(&xs.scale(k));
    for j in 1..nv {
        let mut e = vec![0; nv];
        e[j] = 1;
        let minus: Vec<i32> = e.iter().map(|v| -v).collect();
        out.add_assign(&f.shift(&e));
        out.add_assign(&f.shift(&minus));
    }
    out
}

/// `p_1·f` over a field.
pub fn p1_multiply<S: Field>(f: &LaurentPoly<S>, k: &S) -> LaurentPoly<S> {
    k_p1_multiply(f, k).scale(&k.inv())
}

/// `p_1` itself, `x + x⁻¹ + k⁻¹ Σ (y_j + y_j⁻¹)`.
pub fn p1<S: Field>(n: usize, k: &S) -> LaurentPoly<S> {
    p1_multiply(&LaurentPoly::one(n + 1), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{int, rat};
    use crate::arith::Rational;

    fn op(n: usize) -> CmsOperator<Rational> {
        CmsOperator::new(n, rat(2, 7), rat(3, 11))
    }

    #[test]
    fn constants_are_annihilated() {
        for n in 1..=3 {
            let one = LaurentPoly::<Rational>::one(n + 1);
            assert!(op(n).apply(&one).unwrap().is_zero());
        }
    }

    #[test]
    fn p1_at_n1() {
        let k = rat(2, 7);
        let f = p1(1, &k);
        assert_eq!(f.len(), 4);
        assert_eq!(f.coeff(&[1, 0]), Some(&int(1)));
        assert_eq!(f.coeff(&[0, -1]), Some(&rat(7, 2)));
        assert!(p1_multiply(&LaurentPoly::zero(2), &k).is_zero());
    }

    #[test]
    fn p1_shifts_one_coordinate_by_one() {
        let k = rat(5, 3);
        let f = LaurentPoly::from_terms(3, [(vec![2, -1, 0], int(1)), (vec![0, 0, 3], int(4))]);
        let g = p1_multiply(&f, &k);
        for (e, _) in g.terms() {
            let ok = f.terms().any(|(e0, _)| {
                let d: i32 = e.iter().zip(e0).map(|(a, b)| (a - b).abs()).sum();
                d == 1
            });
            assert!(ok);
        }
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        // x alone is not invariant under x → 1/x; its derivative x does not vanish at x = 1
        let f = LaurentPoly::<Rational>::var(2, 0, 1);
        assert!(op(1).apply(&f).is_err());
    }

    #[test]
    fn p1_is_an_eigenfunction_up_to_a_constant() {
        // ℒ p1 = c_(1) p1 + const, since J_(1) = p1 - a_{∅,∅}
        for n in 1..=2 {
            let k = rat(2, 7);
            let p = rat(3, 11);
            let o = CmsOperator::new(n, k.clone(), p.clone());
            let f = p1(n, &k);
            let lf = o.apply(&f).unwrap();
            let c = crate::partitions::eigenvalue(&crate::Partition::of(&[1]), n).eval(&k, &p);
            let rest = lf.sub(&f.scale(&c));
            assert!(rest.terms().all(|(e, _)| e.iter().all(|&v| v == 0)), "n={n}: {rest:?}");
        }
    }
}
