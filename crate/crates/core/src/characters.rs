//! Supercharacters of `osp(2, 2n)` as Laurent polynomials in `x = e^ε` and
//! `y_j = e^{δ_j}`.
//!
//! Everything here is computed from weights and Weyl-group alternation
//! alone and never touches the polynomial engine, so it serves as an
//! independent check of the specializations.

use std::fmt;

use crate::arith::ring::int;
use crate::arith::{LaurentPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::partitions::{in_hook, s_set, sharp, sharp_chain, witness, Partition};
use crate::pieri::is_singular;

/// A Laurent polynomial with rational coefficients in `x, y_1, …, y_n`.
pub type CharElem = LaurentPoly<Rational>;

/// `e·ε + Σ d_j δ_j` in the integral weight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub e: i64,
    pub d: Vec<i64>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { e: 0, d: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// `ρ_0 = Σ (n + 1 - i) δ_i`.
    pub fn rho0(n: usize) -> Self {
        Weight { e: 0, d: (1..=n).map(|i| (n + 1 - i) as i64).collect() }
    }

    /// `ρ = ρ_0 - ρ_1` with `ρ_1 = nε`.
    pub fn rho(n: usize) -> Self {
        Weight { e: -(n as i64), ..Weight::rho0(n) }
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight { e: self.e + o.e, d: self.d.iter().zip(&o.d).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight { e: self.e - o.e, d: self.d.iter().zip(&o.d).map(|(a, b)| a - b).collect() }
    }

    /// `(ε, ε) = 1`, `(δ_j, δ_j) = -1`, all other pairings zero.
    pub fn form(&self, o: &Weight) -> i64 {
        self.e * o.e - self.d.iter().zip(&o.d).map(|(a, b)| a * b).sum::<i64>()
    }

    /// `ε + sign·δ_i` (1-based `i`).
    pub fn odd_root(n: usize, i: usize, sign: i64) -> Weight {
        let mut d = vec![0; n];
        d[i - 1] = sign;
        Weight { e: 1, d }
    }

    /// `R_1^+ = { ε ± δ_i }`.
    pub fn positive_odd_roots(n: usize) -> Vec<Weight> {
        (1..=n).flat_map(|i| [Weight::odd_root(n, i, 1), Weight::odd_root(n, i, -1)]).collect()
    }

    /// `e^{self}` as a monomial.
    pub fn exp(&self) -> CharElem {
        let mut e = vec![self.e as i32];
        e.extend(self.d.iter().map(|&v| v as i32));
        LaurentPoly::monomial(e, int(1))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e", self.e)?;
        for (j, d) in self.d.iter().enumerate() {
            write!(f, " {:+}d{}", d, j + 1)?;
        }
        Ok(())
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut sign = 1;
            for a in 0..n {
                for b in a + 1..n {
                    if prefix[a] > prefix[b] {
                        sign = -sign;
                    }
                }
            }
            out.push((prefix.clone(), sign));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `{f} = Σ_{w ∈ W_0} sign(w) w(f)` over `W_0 = S_n ⋉ Z_2^n` acting on the
/// `y` variables; the sign of a flip is `-1`.
pub fn alternate(f: &CharElem) -> CharElem {
    let n = f.nvars() - 1;
    let mut out = LaurentPoly::zero(n + 1);
    for (perm, psign) in permutations(n) {
        for mask in 0u32..(1 << n) {
            let sign = psign * if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            let img = f.map_exponents(|e| {
                let mut ne = vec![0; n + 1];
                ne[0] = e[0];
                for j in 0..n {
                    let flip = if mask >> j & 1 == 1 { -1 } else { 1 };
                    ne[1 + perm[j]] = flip * e[1 + j];
                }
                ne
            });
            out.add_assign(&img.scale(&int(sign)));
        }
    }
    out
}

/// `L_0 = Π_{α ∈ R_0^+} (e^{α/2} - e^{-α/2})`. The roots `2δ_i` give
/// `y_i - y_i⁻¹`; each pair `δ_i ± δ_j` multiplies to `v_i - v_j` with
/// `v = y + y⁻¹`.
pub fn weyl_denominator(n: usize) -> CharElem {
    let nv = n + 1;
    let y = |j: usize, p: i32| LaurentPoly::<Rational>::var(nv, j, p);
    let v = |j: usize| y(j, 1).add(&y(j, -1));
    let mut r = LaurentPoly::one(nv);
    for i in 1..=n {
        r = r.mul(&y(i, 1).sub(&y(i, -1)));
        for j in i + 1..=n {
            r = r.mul(&v(i).sub(&v(j)));
        }
    }
    r
}

/// The odd positive root `α` with `(χ + ρ, α) = 0`, if any.
pub fn atypical_root(chi: &Weight) -> Result<Option<Weight>> {
    let n = chi.n();
    let shifted = chi.add(&Weight::rho(n));
    let roots: Vec<Weight> = Weight::positive_odd_roots(n).into_iter().filter(|a| shifted.form(a) == 0).collect();
    match roots.len() {
        0 => Ok(None),
        1 => Ok(roots.into_iter().next()),
        _ => Err(Error::MultipleAtypicalRoots(chi.to_string())),
    }
}

/// `e^{χ+ρ_0} Π_{α ∈ R_1^+, α ≠ skip} (1 - e^{-α})`.
fn kac_numerator(chi: &Weight, skip: Option<&Weight>) -> CharElem {
    let n = chi.n();
    let mut r = chi.add(&Weight::rho0(n)).exp();
    let one = LaurentPoly::one(n + 1);
    for a in Weight::positive_odd_roots(n) {
        if Some(&a) == skip {
            continue;
        }
        r = r.mul(&one.sub(&Weight::zero(n).sub(&a).exp()));
    }
    r
}

/// `sch K(χ) = {K_χ} / L_0`.
pub fn kac_sch(chi: &Weight) -> Result<CharElem> {
    alternate(&kac_numerator(chi, None)).exact_div(&weyl_denominator(chi.n()))
}

/// `sch L(χ) = {K^α_χ} / L_0` with `α` the atypical root (none if typical).
pub fn irr_sch(chi: &Weight) -> Result<CharElem> {
    let alpha = atypical_root(chi)?;
    alternate(&kac_numerator(chi, alpha.as_ref())).exact_div(&weyl_denominator(chi.n()))
}

/// `θ(ε) = -ε`: exchanges `x` and `x⁻¹`.
pub fn theta(f: &CharElem) -> CharElem {
    f.map_exponents(|e| {
        let mut ne = e.to_vec();
        ne[0] = -ne[0];
        ne
    })
}

/// `χ_λ = λ_1 ε + Σ μ'_j δ_j`, with `μ` the diagram without its first row.
pub fn chi_of(lambda: &Partition, n: usize) -> Weight {
    let mu = Partition::new(lambda.parts().iter().skip(1).copied().collect()).expect("tail of a partition");
    Weight { e: lambda.part(1) as i64, d: (1..=n).map(|j| mu.column(j) as i64).collect() }
}

fn require_hook(lambda: &Partition, n: usize) -> Result<()> {
    if in_hook(lambda, 1, n) {
        Ok(())
    } else {
        Err(Error::NotInHook { lambda: lambda.clone(), n })
    }
}

/// `sch E(λ)`: `sch L(χ_λ)` for `λ_1 ≤ n`, else `sch K(χ_λ) + θ sch K(χ_λ)`.
pub fn e_sch(lambda: &Partition, n: usize) -> Result<CharElem> {
    require_hook(lambda, n)?;
    let chi = chi_of(lambda, n);
    if lambda.part(1) <= n {
        return irr_sch(&chi);
    }
    let k = kac_sch(&chi)?;
    Ok(k.add(&theta(&k)))
}

/// `sch L(λ)`: `sch L(χ_λ)` for `λ_1 ≤ n`, else `sch L(χ_λ) + θ sch L(χ_λ)`.
pub fn l_sch(lambda: &Partition, n: usize) -> Result<CharElem> {
    require_hook(lambda, n)?;
    let chi = chi_of(lambda, n);
    let l = irr_sch(&chi)?;
    if lambda.part(1) <= n {
        return Ok(l);
    }
    Ok(l.add(&theta(&l)))
}

/// `{ y_1^{μ'_1+n} ⋯ y_n^{μ'_n+1} Π_{i ≤ λ_1} (u - v_i) }`, divided by the full
/// Weyl denominator, for `λ_1 ≤ n`.
pub fn ls_formula(lambda: &Partition, n: usize) -> Result<CharElem> {
    require_hook(lambda, n)?;
    if lambda.part(1) > n {
        return Err(Error::Precondition(format!("{lambda} has more than {n} boxes in its first row")));
    }
    let nv = n + 1;
    let chi = chi_of(lambda, n);
    let mut e = vec![0i32; nv];
    for (j, ej) in e.iter_mut().enumerate().skip(1) {
        *ej = (chi.d[j - 1] + (n + 1 - j) as i64) as i32;
    }
    let var = |j: usize, p: i32| LaurentPoly::<Rational>::var(nv, j, p);
    let u = var(0, 1).add(&var(0, -1));
    let mut b = LaurentPoly::monomial(e, int(1));
    for i in 1..=lambda.part(1) {
        b = b.mul(&u.sub(&var(i, 1)).sub(&var(i, -1)));
    }
    alternate(&b).exact_div(&weyl_denominator(n))
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn sign_diff(a: usize, b: usize) -> Rational {
    sign(a.abs_diff(b))
}

/// The Euler Pieri coefficient `d_{λ,μ}`.
pub fn d_coeff(lambda: &Partition, mu: &Partition, n: usize) -> Rational {
    let (l1, m1) = (lambda.part(1), mu.part(1));
    if lambda == mu || (l1 == n && m1 + 1 == n) {
        int(0)
    } else if l1 == n + 1 && m1 == n {
        int(2)
    } else {
        sign_diff(lambda.s_stat(), mu.s_stat())
    }
}

/// `sch E(□) sch E(λ) = Σ_{μ ∈ S(λ) ∩ H} d_{λ,μ} sch E(μ)`.
pub fn euler_pieri_check(lambda: &Partition, n: usize) -> Result<bool> {
    let lhs = e_sch(&Partition::of(&[1]), n)?.mul(&e_sch(lambda, n)?);
    let mut rhs = LaurentPoly::zero(n + 1);
    for mu in s_set(lambda, n) {
        let d = d_coeff(lambda, &mu, n);
        if !d.is_zero() {
            rhs.add_assign(&e_sch(&mu, n)?.scale(&d));
        }
    }
    Ok(lhs == rhs)
}

/// `sch K(χ_λ) = sch L(χ_λ) + (-1)^{s(λ) - s(λ♯)} sch L(χ_{λ♯})` for singular λ.
pub fn kac_decomposition_check(lambda: &Partition, n: usize) -> Result<bool> {
    if !is_singular(lambda, n) {
        return Err(Error::NotSingular(lambda.clone()));
    }
    let sh = sharp(lambda, n)?;
    let lhs = kac_sch(&chi_of(lambda, n))?;
    let rhs = irr_sch(&chi_of(lambda, n))?
        .add(&irr_sch(&chi_of(&sh, n))?.scale(&sign_diff(lambda.s_stat(), sh.s_stat())));
    Ok(lhs == rhs)
}

/// The telescoped form over the sharp chain `[λ, λ♯, …, λ^{l♯}]`:
/// `(-1)^{s(λ)} sch L(χ_λ) = Σ_{s<l} (-1)^s (-1)^{s(λ^{s♯})} sch K(χ_{λ^{s♯}}) + (-1)^l (-1)^{s(λ^{l♯})} sch L(χ_{λ^{l♯}})`.
pub fn sing3_check(lambda: &Partition, n: usize) -> Result<bool> {
    let chain = sharp_chain(lambda, n)?;
    let l = lambda.column(witness(lambda, n)?);
    let lhs = irr_sch(&chi_of(lambda, n))?.scale(&sign(lambda.s_stat()));
    let mut rhs = LaurentPoly::zero(n + 1);
    for (s, mu) in chain.iter().enumerate() {
        let c = sign(s) * sign(mu.s_stat());
        let term = if s < l { kac_sch(&chi_of(mu, n))? } else { irr_sch(&chi_of(mu, n))? };
        rhs.add_assign(&term.scale(&c));
    }
    Ok(lhs == rhs)
}

/// For `λ_1 > n`: `χ_λ` is typical exactly when λ is regular.
///
/// Diagrams with `λ_1 ≤ n` are outside the statement and report `None`.
pub fn typicality_matches_regularity(lambda: &Partition, n: usize) -> Result<Option<bool>> {
    if lambda.part(1) <= n {
        return Ok(None);
    }
    let typical = atypical_root(&chi_of(lambda, n))?.is_none();
    Ok(Some(typical != is_singular(lambda, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::hook_partitions_up_to;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> CharElem {
        LaurentPoly::from_terms(n + 1, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))))
    }

    #[test]
    fn alternation_examples() {
        assert_eq!(alternate(&poly(1, &[(&[0, 1], 1)])), poly(1, &[(&[0, 1], 1), (&[0, -1], -1)]));
        let a = alternate(&poly(2, &[(&[0, 2, 1], 1)]));
        assert_eq!(a.len(), 8);
        assert_eq!(a.coeff(&[0, 1, 2]), Some(&int(-1)));
        assert_eq!(a.coeff(&[0, 2, -1]), Some(&int(-1)));
        // symmetric under the transposition
        assert!(alternate(&poly(2, &[(&[1, 1, 1], 1)])).is_zero());
    }

    #[test]
    fn weyl_denominator_is_alternated_rho0() {
        for n in 1..=3 {
            assert_eq!(weyl_denominator(n), alternate(&Weight::rho0(n).exp()), "n={n}");
            assert!(weyl_denominator(n).coeff(&vec![0; n + 1]).is_none());
        }
        assert_eq!(weyl_denominator(1), poly(1, &[(&[0, 1], 1), (&[0, -1], -1)]));
    }

    fn arb_elem(n: usize) -> impl Strategy<Value = CharElem> {
        proptest::collection::vec((proptest::collection::vec(-3i32..4, n + 1), -5i64..6), 1..5)
            .prop_map(move |ts| LaurentPoly::from_terms(n + 1, ts.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn alternation_is_antisymmetric(n in 1usize..4, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let terms: Vec<(Vec<i32>, Rational)> = (0..4)
                .map(|_| ((0..=n).map(|_| rng.gen_range(-3..4)).collect(), int(rng.gen_range(-5..6))))
                .collect();
            let f = LaurentPoly::from_terms(n + 1, terms);
            let a = alternate(&f);
            // last sign flip
            let flip = f.map_exponents(|e| { let mut v = e.to_vec(); v[n] = -v[n]; v });
            prop_assert_eq!(alternate(&flip), a.neg());
            for i in 1..n {
                let sw = f.map_exponents(|e| { let mut v = e.to_vec(); v.swap(i, i + 1); v });
                prop_assert_eq!(alternate(&sw), a.neg());
            }
        }

        #[test]
        fn theta_is_an_involution(f in arb_elem(2)) {
            prop_assert_eq!(theta(&theta(&f)), f);
        }
    }

    #[test]
    fn atypical_root_example() {
        let chi = Weight { e: 2, d: vec![0] };
        assert_eq!(atypical_root(&chi).unwrap(), Some(Weight::odd_root(1, 1, 1)));
        assert_eq!(atypical_root(&Weight { e: 9, d: vec![3, 1] }).unwrap(), None);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_of(&p(&[3, 1]), 2), Weight { e: 3, d: vec![1, 0] });
        assert_eq!(chi_of(&Partition::empty(), 2), Weight::zero(2));
        assert_eq!(chi_of(&p(&[2, 2, 1]), 2), Weight { e: 2, d: vec![2, 1] });
    }

    #[test]
    fn small_characters() {
        assert_eq!(irr_sch(&Weight::zero(1)).unwrap(), LaurentPoly::one(2));
        assert_eq!(e_sch(&Partition::empty(), 2).unwrap(), LaurentPoly::one(3));
        let standard = poly(1, &[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], -1), (&[0, -1], -1)]);
        assert_eq!(irr_sch(&Weight { e: 1, d: vec![0] }).unwrap(), standard);
        assert_eq!(ls_formula(&p(&[1]), 1).unwrap(), standard);
    }

    #[test]
    fn ls_formula_matches_irreducible_characters() {
        for n in 1..=2 {
            for lam in hook_partitions_up_to(n, 6) {
                if lam.part(1) <= n {
                    assert_eq!(ls_formula(&lam, n).unwrap(), irr_sch(&chi_of(&lam, n)).unwrap(), "{lam}");
                }
            }
        }
    }

    #[test]
    fn typical_kac_equals_irreducible() {
        for n in 1..=2 {
            for lam in hook_partitions_up_to(n, 6) {
                let chi = chi_of(&lam, n);
                if atypical_root(&chi).unwrap().is_none() {
                    assert_eq!(kac_sch(&chi).unwrap(), irr_sch(&chi).unwrap());
                }
                if lam.part(1) > n {
                    let e = e_sch(&lam, n).unwrap();
                    assert_eq!(theta(&e), e);
                    assert_eq!(theta(&l_sch(&lam, n).unwrap()), l_sch(&lam, n).unwrap());
                    if !is_singular(&lam, n) {
                        assert_eq!(e, l_sch(&lam, n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(d_coeff(&p(&[2]), &p(&[1]), 1), int(2));
        assert_eq!(d_coeff(&p(&[1]), &Partition::empty(), 1), int(0));
        assert_eq!(d_coeff(&Partition::empty(), &p(&[1]), 1), int(1));
        for lam in [Partition::empty(), p(&[1]), p(&[2]), p(&[2, 1])] {
            assert!(euler_pieri_check(&lam, 1).unwrap(), "{lam}");
        }
    }

    #[test]
    fn kac_examples() {
        assert!(kac_decomposition_check(&p(&[2]), 1).unwrap());
        assert!(kac_decomposition_check(&p(&[3, 1]), 2).unwrap());
        assert!(sing3_check(&p(&[4, 2, 1]), 2).unwrap());
        assert_eq!(sharp_chain(&p(&[4, 2, 1]), 2).unwrap().len(), 3);
        assert!(matches!(kac_decomposition_check(&p(&[3]), 1), Err(Error::NotSingular(_))));
    }
}
