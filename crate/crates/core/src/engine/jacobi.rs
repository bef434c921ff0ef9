use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::arith::ring::int;
use crate::arith::{LaurentPoly, Rational, Ring, UniPoly, UniRational};
use crate::error::{Error, Result};
use crate::partitions::{drop_first_row_box, eigenvalue, in_hook, s_set, tilde_c, Partition};
use crate::pieri::{a_coeff, b_coeff};

use super::cms::{k_p1_multiply, CmsOperator};
use super::sympoly::SymPoly;

/// `J_λ` on the line `p = t(k+1)` with the parameter `k` kept symbolic.
#[derive(Clone, Debug)]
pub struct JacobiPoly {
    pub lambda: Partition,
    pub t: Rational,
    pub poly: Arc<SymPoly>,
}

impl JacobiPoly {
    /// The polynomial with canonical `Q(k)` coefficients.
    pub fn coefficients(&self) -> LaurentPoly<UniRational> {
        self.poly.to_rational_coeffs()
    }
}

/// A finite linear combination `Σ c_λ J_λ` with coefficients in `Q(k)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct JBasisCombo {
    terms: BTreeMap<Partition, UniRational>,
}

impl JBasisCombo {
    pub fn new() -> Self {
        JBasisCombo::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut c = JBasisCombo::new();
        c.add_term(lambda, &UniRational::one());
        c
    }

    pub fn add_term(&mut self, lambda: Partition, c: &UniRational) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&lambda) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, v);
        }
    }

    pub fn get(&self, lambda: &Partition) -> UniRational {
        self.terms.get(lambda).cloned().unwrap_or_else(UniRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &UniRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &UniRational) -> JBasisCombo {
        let mut out = JBasisCombo::new();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &c.mul(s));
        }
        out
    }

    pub fn add(&self, other: &JBasisCombo) -> JBasisCombo {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }
}

/// Parameters tried, in order, when a construction degenerates at a given `t`.
pub const RETRY_T: [(i64, i64); 6] = [(1, 2), (5, 3), (7, 11), (13, 17), (19, 23), (29, 31)];

/// Builds and caches `J_λ` for one `n` and one rational `t`.
///
/// The cache is behind an `RwLock`, so one engine can serve several threads;
/// each individual construction runs sequentially.
pub struct JacobiEngine {
    n: usize,
    t: Rational,
    k: UniPoly,
    op: CmsOperator<UniPoly>,
    memo: RwLock<HashMap<Partition, Arc<SymPoly>>>,
    coeffs: RwLock<HashMap<(Partition, Partition), UniRational>>,
}

impl JacobiEngine {
    pub fn new(n: usize, t: Rational) -> Self {
        let k = UniPoly::k();
        let p = UniPoly::linear(t.clone(), t.clone());
        JacobiEngine {
            n,
            op: CmsOperator::new(n, k.clone(), p),
            k,
            t,
            memo: RwLock::new(HashMap::new()),
            coeffs: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    /// `c_λ` on the line, as a polynomial in `k`.
    pub fn eigenvalue(&self, lambda: &Partition) -> UniPoly {
        eigenvalue(lambda, self.n).substitute_blowup(&self.t)
    }

    /// `a_{λ,μ}` on the line.
    pub fn pieri(&self, lambda: &Partition, mu: &Partition) -> Result<UniRational> {
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.coeffs.read().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = a_coeff(lambda, mu, self.n)?.substitute_blowup(&self.t).map_err(|e| Error::DegenerateParameters {
            parent: lambda.clone(),
            target: mu.clone(),
            reason: format!("a_{{{lambda},{mu}}} has no value on the line t = {}: {e}", self.t),
        })?;
        self.coeffs.write().expect("cache lock").insert(key, v.clone());
        Ok(v)
    }

    pub fn apply_cms(&self, f: &SymPoly) -> Result<SymPoly> {
        Ok(SymPoly { num: self.op.apply(&f.num)?, den: f.den.clone() })
    }

    pub fn p1_multiply(&self, f: &SymPoly) -> SymPoly {
        SymPoly { num: k_p1_multiply(&f.num, &self.k), den: f.den.mul(&self.k) }.normalize()
    }

    /// Checks that the eigenvalues over `S(parent) ∩ H` are pairwise distinct.
    pub fn check_nondegenerate(&self, parent: &Partition, target: &Partition) -> Result<()> {
        let set = s_set(parent, self.n);
        let cs: Vec<UniPoly> = set.iter().map(|m| self.eigenvalue(m)).collect();
        for a in 0..set.len() {
            for b in a + 1..set.len() {
                if cs[a] == cs[b] {
                    return Err(Error::DegenerateParameters {
                        parent: parent.clone(),
                        target: target.clone(),
                        reason: format!("c_{} = c_{} at t = {}", set[a], set[b], self.t),
                    });
                }
            }
        }
        Ok(())
    }

    /// `J_λ`, built from `p_1 J_parent` by the spectral projector onto `c_λ`.
    pub fn jacobi(&self, lambda: &Partition) -> Result<Arc<SymPoly>> {
        if let Some(j) = self.memo.read().expect("cache lock").get(lambda) {
            return Ok(j.clone());
        }
        if !in_hook(lambda, 1, self.n) {
            return Err(Error::NotInHook { lambda: lambda.clone(), n: self.n });
        }
        let j = if lambda.is_empty() {
            SymPoly::one(self.nvars())
        } else {
            self.build(lambda)?
        };
        let j = Arc::new(j);
        self.memo.write().expect("cache lock").insert(lambda.clone(), j.clone());
        Ok(j)
    }

    fn build(&self, lambda: &Partition) -> Result<SymPoly> {
        let corner = *lambda.removable_cells().last().expect("nonempty diagram");
        let parent = lambda.remove_from_row(corner.row).expect("removable corner");
        self.check_nondegenerate(&parent, lambda)?;
        let a = self.pieri(&parent, lambda)?;
        if a.is_zero() {
            return Err(Error::DegenerateParameters {
                parent: parent.clone(),
                target: lambda.clone(),
                reason: format!("a_{{{parent},{lambda}}} vanishes at t = {}", self.t),
            });
        }
        let jp = self.jacobi(&parent)?;
        let mut num = k_p1_multiply(&jp.num, &self.k);
        let mut den = jp.den.mul(&self.k);
        let c_lambda = self.eigenvalue(lambda);
        for nu in s_set(&parent, self.n) {
            if &nu == lambda {
                continue;
            }
            let c_nu = self.eigenvalue(&nu);
            let mut next = self.op.apply(&num)?;
            next.sub_assign(&num.scale(&c_nu));
            num = next;
            den = den.mul(&c_lambda.sub(&c_nu));
        }
        num = num.scale(a.den());
        den = den.mul(a.num());
        Ok(SymPoly { num, den }.normalize())
    }

    pub fn jacobi_poly(&self, lambda: &Partition) -> Result<JacobiPoly> {
        Ok(JacobiPoly { lambda: lambda.clone(), t: self.t.clone(), poly: self.jacobi(lambda)? })
    }

    /// `ℒJ_λ = c_λ J_λ`.
    pub fn check_eigen(&self, lambda: &Partition) -> Result<bool> {
        let j = self.jacobi(lambda)?;
        let mut r = self.op.apply(&j.num)?;
        r.sub_assign(&j.num.scale(&self.eigenvalue(lambda)));
        Ok(r.is_zero())
    }

    /// `p_1 J_λ = Σ_{μ ∈ S(λ) ∩ H} a_{λ,μ} J_μ`.
    pub fn check_pieri(&self, lambda: &Partition) -> Result<bool> {
        let lhs = self.p1_multiply(&*self.jacobi(lambda)?);
        let mut rhs = SymPoly::zero(self.nvars());
        for mu in s_set(lambda, self.n) {
            let a = self.pieri(lambda, &mu)?;
            rhs = rhs.add(&self.jacobi(&mu)?.scale(&a));
        }
        Ok(lhs.sub(&rhs).is_zero())
    }

    /// `F_i(f) = P_i(p_1 f)`: Pieri-expand every term and keep the `J_μ` with
    /// `c̃_μ = target`.
    pub fn translation(&self, f: &JBasisCombo, target: i64) -> Result<JBasisCombo> {
        let mut out = JBasisCombo::new();
        for (lambda, c) in f.iter() {
            for mu in s_set(lambda, self.n) {
                if tilde_c(&mu, self.n) != target {
                    continue;
                }
                out.add_term(mu.clone(), &c.mul(&self.pieri(lambda, &mu)?));
            }
        }
        Ok(out)
    }

    /// `I_λ` in the `J` basis: `J_λ` for `λ_1 ≤ n`, otherwise the translation
    /// of `I_μ` with `μ` the diagram without the last first-row box.
    pub fn i_combo(&self, lambda: &Partition) -> Result<JBasisCombo> {
        if !in_hook(lambda, 1, self.n) {
            return Err(Error::NotInHook { lambda: lambda.clone(), n: self.n });
        }
        if lambda.part(1) <= self.n {
            return Ok(JBasisCombo::single(lambda.clone()));
        }
        let mu = drop_first_row_box(lambda).expect("nonempty first row");
        let base = self.i_combo(&mu)?;
        self.translation(&base, tilde_c(lambda, self.n))
    }

    /// `b_λ` on the line, from the chain product.
    pub fn b(&self, lambda: &Partition) -> Result<UniRational> {
        b_coeff(lambda, self.n)?.substitute_blowup(&self.t)
    }

    /// `Σ c_μ J_μ` as a polynomial.
    pub fn realize(&self, combo: &JBasisCombo) -> Result<SymPoly> {
        let mut acc = SymPoly::zero(self.nvars());
        for (mu, c) in combo.iter() {
            acc = acc.add(&self.jacobi(mu)?.scale(c));
        }
        Ok(acc)
    }

    pub fn i_poly(&self, lambda: &Partition) -> Result<SymPoly> {
        self.realize(&self.i_combo(lambda)?)
    }
}

/// Runs `f` on engines with `t` from [`RETRY_T`] until one does not degenerate.
pub fn with_retry<T>(n: usize, f: impl Fn(&JacobiEngine) -> Result<T>) -> Result<(Rational, T)> {
    let mut last = None;
    for (a, b) in RETRY_T {
        let t = int(a) / int(b);
        let engine = JacobiEngine::new(n, t.clone());
        match f(&engine) {
            Ok(v) => return Ok((t, v)),
            Err(e @ Error::DegenerateParameters { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("retry list is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rat;
    use crate::partitions::{hook_partitions_up_to, witness};
    use crate::pieri::is_singular;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn empty_and_one_box() {
        for n in 1..=2 {
            let e = JacobiEngine::new(n, rat(1, 2));
            assert_eq!(*e.jacobi(&Partition::empty()).unwrap(), SymPoly::one(n + 1));
            assert!(e.check_eigen(&Partition::empty()).unwrap());
            // J_(1) = p_1 - a_{∅,∅} since a_{∅,(1)} = 1
            assert_eq!(e.pieri(&Partition::empty(), &p(&[1])).unwrap(), UniRational::one());
            let a00 = e.pieri(&Partition::empty(), &Partition::empty()).unwrap();
            let expect = e.p1_multiply(&SymPoly::one(n + 1)).sub(&SymPoly::one(n + 1).scale(&a00));
            assert_eq!(*e.jacobi(&p(&[1])).unwrap(), expect);
            assert!(e.check_eigen(&p(&[1])).unwrap());
        }
    }

    #[test]
    fn eigen_and_pieri_small() {
        for n in 1..=2 {
            let e = JacobiEngine::new(n, rat(1, 2));
            for lam in hook_partitions_up_to(n, 3) {
                assert!(e.check_eigen(&lam).unwrap(), "eigen {lam} n={n}");
                if lam.size() < 3 {
                    assert!(e.check_pieri(&lam).unwrap(), "pieri {lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn hyperoctahedral_symmetry() {
        let e = JacobiEngine::new(2, rat(1, 2));
        for lam in hook_partitions_up_to(2, 3) {
            let j = e.jacobi(&lam).unwrap();
            let f = &j.num;
            assert_eq!(f.map_exponents(|v| vec![-v[0], v[1], v[2]]), *f);
            assert_eq!(f.map_exponents(|v| vec![v[0], -v[1], v[2]]), *f);
            assert_eq!(f.map_exponents(|v| vec![v[0], v[2], v[1]]), *f);
        }
    }

    #[test]
    fn translation_examples() {
        let e = JacobiEngine::new(1, rat(1, 2));
        let one = JBasisCombo::single(Partition::empty());
        let f = e.translation(&one, tilde_c(&p(&[1]), 1)).unwrap();
        assert_eq!(f, JBasisCombo::single(p(&[1])));
        assert!(e.translation(&one, 999).unwrap().is_empty());
        // c̃((2)) = c̃(∅) = 0 at n = 1: both survive
        let g = e.translation(&JBasisCombo::single(p(&[1])), 0).unwrap();
        let keys: Vec<_> = g.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(keys, vec![Partition::empty(), p(&[2])]);
    }

    #[test]
    fn i_combo_examples() {
        let e = JacobiEngine::new(2, rat(1, 2));
        assert_eq!(e.i_combo(&p(&[1])).unwrap(), JBasisCombo::single(p(&[1])));
        assert_eq!(e.i_combo(&p(&[4, 1])).unwrap(), JBasisCombo::single(p(&[4, 1])));
        let e = JacobiEngine::new(1, rat(1, 2));
        let i2 = e.i_combo(&p(&[2])).unwrap();
        assert_eq!(i2.get(&p(&[2])), UniRational::one());
        // b_(2)(t) = 2/t = 4 at t = 1/2, after k → -1
        let b = i2.get(&Partition::empty());
        assert_eq!(b, e.b(&p(&[2])).unwrap());
        assert_eq!(crate::arith::uni_limit(&b, &int(-1)), crate::arith::ExtendedScalar::Finite(int(4)));
    }

    #[test]
    fn i_combo_matches_projection_lemma() {
        for n in 1..=2 {
            let e = JacobiEngine::new(n, rat(5, 3));
            for lam in hook_partitions_up_to(n, 5) {
                let got = e.i_combo(&lam).unwrap();
                let mut expect = JBasisCombo::single(lam.clone());
                if lam.part(1) > n && is_singular(&lam, n) {
                    witness(&lam, n).unwrap();
                    let sharp = crate::partitions::sharp(&lam, n).unwrap();
                    expect.add_term(sharp, &e.b(&lam).unwrap());
                }
                assert_eq!(got, expect, "{lam} n={n}");
            }
        }
    }

    #[test]
    fn retry_skips_degenerate_parameters() {
        let (t, _) = with_retry(1, |e| {
            if e.t() == &rat(1, 2) {
                Err(Error::DegenerateParameters { parent: p(&[1]), target: p(&[2]), reason: "test".into() })
            } else {
                Ok(())
            }
        })
        .unwrap();
        assert_eq!(t, rat(5, 3));
    }
}
