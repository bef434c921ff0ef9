//! Specializations at `k = -1` along `p = t(k+1)`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::arith::ring::{int, is_nonneg_integer};
use crate::arith::{monomial_name, ExtendedScalar, LaurentPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::partitions::{in_hook, s_set, sharp_chain, tilde_c, witness, Partition};
use crate::pieri::{a_limit_table, b_coeff_blowup, is_singular};

use super::cms::{p1_multiply, CmsOperator};
use super::jacobi::JacobiEngine;
use super::sympoly::SymPoly;

/// A polynomial with rational coefficients obtained as a limit `k → -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedPoly {
    pub lambda: Partition,
    pub t: ExtendedScalar,
    pub poly: LaurentPoly<Rational>,
}

/// Coefficientwise `lim_{k→-1}`; a coefficient with a pole gives `PoleAtLimit`.
pub fn limit_at_minus_one(f: &SymPoly, lambda: &Partition) -> Result<LaurentPoly<Rational>> {
    let point = int(-1);
    let (ed, dcof) = f.den.split_root(&point);
    let dval = dcof.eval(&point);
    f.num.try_map_coeffs(|e, c| {
        let (ec, ccof) = c.split_root(&point);
        if ec < ed {
            Err(Error::PoleAtLimit { lambda: lambda.clone(), monomial: monomial_name(e) })
        } else if ec > ed {
            Ok(Rational::zero())
        } else {
            Ok(ccof.eval(&point) / &dval)
        }
    })
}

/// Route A: the limit of `J_λ` built at the engine's `t`.
pub fn sj_direct(engine: &JacobiEngine, lambda: &Partition) -> Result<SpecializedPoly> {
    let j = engine.jacobi(lambda)?;
    Ok(SpecializedPoly {
        lambda: lambda.clone(),
        t: ExtendedScalar::Finite(engine.t().clone()),
        poly: limit_at_minus_one(&j, lambda)?,
    })
}

/// `SI_λ` as the limit of `I_λ` built at the engine's `t`.
pub fn si_direct(engine: &JacobiEngine, lambda: &Partition) -> Result<SpecializedPoly> {
    let i = engine.i_poly(lambda)?;
    Ok(SpecializedPoly {
        lambda: lambda.clone(),
        t: ExtendedScalar::Finite(engine.t().clone()),
        poly: limit_at_minus_one(&i, lambda)?,
    })
}

/// The family `SJ_λ(∞)` for one `n`, built by the limit-Pieri recursion at
/// the fully specialized point `(k, p) = (-1, 0)`.
///
/// `p_1 SJ_ν` expands with the limit table (adds 1, diagonal 0, removals 0,
/// 1 or 2). Subtracting the known removal terms leaves the sum of the
/// `SJ_μ` over the added boxes, which the operator at the same point
/// separates by their (distinct) eigenvalues `c̃_μ`.
pub struct InfinityFamily {
    n: usize,
    k: Rational,
    op: CmsOperator<Rational>,
    memo: RwLock<HashMap<Partition, Arc<LaurentPoly<Rational>>>>,
}

impl InfinityFamily {
    pub fn new(n: usize) -> Self {
        let k = int(-1);
        InfinityFamily {
            n,
            op: CmsOperator::new(n, k.clone(), Rational::zero()),
            k,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn operator(&self) -> &CmsOperator<Rational> {
        &self.op
    }

    pub fn get(&self, lambda: &Partition) -> Result<Arc<LaurentPoly<Rational>>> {
        if let Some(f) = self.memo.read().expect("cache lock").get(lambda) {
            return Ok(f.clone());
        }
        if !in_hook(lambda, 1, self.n) {
            return Err(Error::NotInHook { lambda: lambda.clone(), n: self.n });
        }
        let f = if lambda.is_empty() {
            LaurentPoly::one(self.n + 1)
        } else {
            self.build(lambda)?
        };
        let f = Arc::new(f);
        self.memo.write().expect("cache lock").insert(lambda.clone(), f.clone());
        Ok(f)
    }

    fn build(&self, lambda: &Partition) -> Result<LaurentPoly<Rational>> {
        let corner = *lambda.removable_cells().last().expect("nonempty diagram");
        let parent = lambda.remove_from_row(corner.row).expect("removable corner");
        let mut g = p1_multiply(&*self.get(&parent)?, &self.k);
        let mut adds = Vec::new();
        for mu in s_set(&parent, self.n) {
            if mu.size() > parent.size() {
                adds.push(mu);
            } else if mu != parent {
                let c = a_limit_table(&parent, &mu, self.n)?;
                g.sub_assign(&self.get(&mu)?.scale(&c));
            }
        }
        let c_lambda = tilde_c(lambda, self.n);
        for mu in adds.iter().filter(|m| *m != lambda) {
            let c_mu = tilde_c(mu, self.n);
            if c_mu == c_lambda {
                return Err(Error::DegenerateParameters {
                    parent: parent.clone(),
                    target: lambda.clone(),
                    reason: format!("added diagrams {mu} and {lambda} share the eigenvalue {c_mu} at k = -1"),
                });
            }
            let mut next = self.op.apply(&g)?;
            next.sub_assign(&g.scale(&int(c_mu)));
            g = next.scale(&(int(1) / int(c_lambda - c_mu)));
        }
        Ok(g)
    }

    pub fn specialized(&self, lambda: &Partition) -> Result<SpecializedPoly> {
        Ok(SpecializedPoly {
            lambda: lambda.clone(),
            t: ExtendedScalar::Infinity,
            poly: (*self.get(lambda)?).clone(),
        })
    }

    /// `SI_λ` from the `SJ(∞)` family: `SJ_λ(∞)`, plus `SJ_{λ♯}(∞)` when λ
    /// is singular with `λ'_j > 1`.
    pub fn si(&self, lambda: &Partition) -> Result<SpecializedPoly> {
        let mut poly = (*self.get(lambda)?).clone();
        if is_singular(lambda, self.n) && lambda.column(witness(lambda, self.n)?) > 1 {
            let chain = sharp_chain(lambda, self.n)?;
            poly.add_assign(&*self.get(&chain[1])?);
        }
        Ok(SpecializedPoly { lambda: lambda.clone(), t: ExtendedScalar::Infinity, poly })
    }

    /// `SJ_λ(t)` by the formula route.
    ///
    /// Regular diagrams do not depend on `t`. For singular `λ` with
    /// `l = λ'_j` and `[λ, λ♯, …, λ^{l♯}]` the sharp chain,
    /// `SJ_λ(t) = SJ_λ(∞) + Σ_{s=1}^{l-1} (-1)^s/(t-l+1) SJ_{λ^{s♯}}(∞) + (-1)^l 2/(t-l+1) SJ_{λ^{l♯}}(∞)`,
    /// valid for `t ∉ Z≥0` and at `t = l`.
    pub fn sj(&self, lambda: &Partition, t: &ExtendedScalar) -> Result<SpecializedPoly> {
        let base = self.get(lambda)?;
        let done = |poly: LaurentPoly<Rational>| SpecializedPoly { lambda: lambda.clone(), t: t.clone(), poly };
        if !is_singular(lambda, self.n) {
            return Ok(done((*base).clone()));
        }
        let t = match t {
            ExtendedScalar::Infinity => return Ok(done((*base).clone())),
            ExtendedScalar::Undefined => {
                return Err(Error::ExcludedParameter { lambda: lambda.clone(), t: t.to_string() })
            }
            ExtendedScalar::Finite(t) => t,
        };
        let l = lambda.column(witness(lambda, self.n)?);
        if is_nonneg_integer(t) && *t != int(l as i64) {
            return Err(Error::ExcludedParameter { lambda: lambda.clone(), t: t.to_string() });
        }
        let chain = sharp_chain(lambda, self.n)?;
        let inv = int(1) / (t - int(l as i64) + int(1));
        let mut poly = (*base).clone();
        for (s, mu) in chain.iter().enumerate().skip(1) {
            let sign = if s % 2 == 0 { int(1) } else { int(-1) };
            let c = if s == l { sign * int(2) * &inv } else { sign * &inv };
            poly.add_assign(&self.get(mu)?.scale(&c));
        }
        Ok(done(poly))
    }
}

/// `SJ_λ(∞)` as the alternating sum `SI_λ - SI_{λ♯} + … ± SI_{λ^{(l-1)♯}}`,
/// with each `SI` taken as a limit of `I_μ` built by `engine`. The
/// coefficient of `SI_{λ^{s♯}}` is the product of `b(∞)` along the chain.
pub fn sj_infinity_by_si(engine: &JacobiEngine, lambda: &Partition) -> Result<SpecializedPoly> {
    let n = engine.n();
    let chain = if is_singular(lambda, n) { sharp_chain(lambda, n)? } else { vec![lambda.clone()] };
    let mut poly = LaurentPoly::zero(n + 1);
    let mut coeff = int(1);
    for (s, mu) in chain.iter().enumerate() {
        if coeff.is_zero() {
            break;
        }
        let sign = if s % 2 == 0 { int(1) } else { int(-1) };
        poly.add_assign(&si_direct(engine, mu)?.poly.scale(&(sign * &coeff)));
        if s + 1 < chain.len() {
            match b_coeff_blowup(mu, &ExtendedScalar::Infinity, n)? {
                ExtendedScalar::Finite(b) => coeff *= b,
                other => return Err(Error::Undefined(format!("b_{mu}(inf) = {other}"))),
            }
        }
    }
    Ok(SpecializedPoly { lambda: lambda.clone(), t: ExtendedScalar::Infinity, poly })
}

/// `SJ_λ(t)` from `SI` at a finite `t`, with coefficients the partial
/// products of `b(t)` along the sharp chain.
pub fn sj_by_si(engine: &JacobiEngine, lambda: &Partition, t: &Rational) -> Result<SpecializedPoly> {
    let n = engine.n();
    let chain = if is_singular(lambda, n) { sharp_chain(lambda, n)? } else { vec![lambda.clone()] };
    let mut poly = LaurentPoly::zero(n + 1);
    let mut coeff = int(1);
    let te = ExtendedScalar::Finite(t.clone());
    for (s, mu) in chain.iter().enumerate() {
        let sign = if s % 2 == 0 { int(1) } else { int(-1) };
        poly.add_assign(&si_direct(engine, mu)?.poly.scale(&(sign * &coeff)));
        if s + 1 < chain.len() {
            match b_coeff_blowup(mu, &te, n)? {
                ExtendedScalar::Finite(b) => coeff *= b,
                _ => return Err(Error::ExcludedParameter { lambda: lambda.clone(), t: t.to_string() }),
            }
        }
    }
    Ok(SpecializedPoly { lambda: lambda.clone(), t: te, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rat;
    use crate::arith::{UniPoly, UniRational};
    use crate::partitions::hook_partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn limit_detects_poles() {
        let kp1 = UniPoly::linear(int(1), int(1));
        let x = LaurentPoly::<UniPoly>::var(2, 0, 1);
        let ok = SymPoly { num: x.scale(&kp1.mul(&UniPoly::linear(int(1), int(3)))), den: kp1.clone() };
        assert_eq!(limit_at_minus_one(&ok, &p(&[1])).unwrap().coeff(&[1, 0]), Some(&int(2)));
        let bad = SymPoly { num: x, den: kp1 };
        assert!(matches!(limit_at_minus_one(&bad, &p(&[1])), Err(Error::PoleAtLimit { .. })));
        let _ = UniRational::one();
    }

    #[test]
    fn infinity_family_is_an_eigenbasis() {
        for n in 1..=2 {
            let fam = InfinityFamily::new(n);
            for lam in hook_partitions_up_to(n, 4) {
                let f = fam.get(&lam).unwrap();
                let r = fam.operator().apply(&f).unwrap().sub(&f.scale(&int(tilde_c(&lam, n))));
                assert!(r.is_zero(), "{lam}");
            }
        }
    }

    #[test]
    fn limit_pieri_matches_direct_limit_for_regular() {
        // for regular λ, SJ(t) does not depend on t, so the direct limit at
        // t = 1/2 already equals SJ(∞)
        for n in 1..=2 {
            let fam = InfinityFamily::new(n);
            let e = JacobiEngine::new(n, rat(1, 2));
            for lam in hook_partitions_up_to(n, 4) {
                if is_singular(&lam, n) {
                    continue;
                }
                assert_eq!(sj_direct(&e, &lam).unwrap().poly, *fam.get(&lam).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn routes_agree_at_generic_t() {
        for n in 1..=2 {
            let fam = InfinityFamily::new(n);
            for t in [rat(1, 2), rat(7, 3)] {
                let e = JacobiEngine::new(n, t.clone());
                for lam in hook_partitions_up_to(n, 4) {
                    let a = sj_direct(&e, &lam).unwrap();
                    let b = fam.sj(&lam, &ExtendedScalar::Finite(t.clone())).unwrap();
                    assert_eq!(a.poly, b.poly, "{lam} n={n} t={t}");
                    assert_eq!(sj_by_si(&e, &lam, &t).unwrap().poly, a.poly, "{lam}");
                }
            }
        }
    }

    #[test]
    fn infinity_by_si_matches_limit_pieri() {
        for n in 1..=2 {
            let fam = InfinityFamily::new(n);
            let e = JacobiEngine::new(n, rat(5, 3));
            for lam in hook_partitions_up_to(n, 4) {
                assert_eq!(sj_infinity_by_si(&e, &lam).unwrap().poly, *fam.get(&lam).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn si_examples() {
        let fam = InfinityFamily::new(1);
        // (2) at n = 1 has λ'_1 = 1
        assert_eq!(fam.si(&p(&[2])).unwrap().poly, *fam.get(&p(&[2])).unwrap());
        let fam = InfinityFamily::new(2);
        let lam = p(&[4, 2, 1]);
        assert_eq!(witness(&lam, 2).unwrap(), 2);
        let sharp = sharp_chain(&lam, 2).unwrap()[1].clone();
        let expect = fam.get(&lam).unwrap().add(&fam.get(&sharp).unwrap());
        assert_eq!(fam.si(&lam).unwrap().poly, expect);
    }

    #[test]
    fn si_direct_is_t_independent_and_matches_projective_formula() {
        for n in 1..=2 {
            let fam = InfinityFamily::new(n);
            let e1 = JacobiEngine::new(n, rat(1, 2));
            let e2 = JacobiEngine::new(n, rat(5, 3));
            for lam in hook_partitions_up_to(n, 4) {
                let a = si_direct(&e1, &lam).unwrap().poly;
                assert_eq!(a, si_direct(&e2, &lam).unwrap().poly, "{lam}");
                assert_eq!(a, fam.si(&lam).unwrap().poly, "{lam}");
            }
        }
    }

    #[test]
    fn excluded_parameters() {
        let fam = InfinityFamily::new(1);
        let lam = p(&[2]);
        assert!(fam.sj(&lam, &ExtendedScalar::Finite(int(0))).is_err());
        assert!(fam.sj(&lam, &ExtendedScalar::Finite(int(1))).is_ok());
        assert!(fam.sj(&lam, &ExtendedScalar::Finite(int(3))).is_err());
        assert_eq!(fam.sj(&Partition::empty(), &ExtendedScalar::Finite(int(3))).unwrap().poly, LaurentPoly::one(2));
    }
}
