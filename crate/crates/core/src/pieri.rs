//! Closed-form Pieri coefficients `a_{λ,μ}` of the expansion
//! `p_1 J_λ = Σ_{μ ∈ S(λ)} a_{λ,μ} J_μ`, with `m = 1`, `q = 0` and
//! `h = -k - n - p/2`.
//!
//! Off-diagonal coefficients are assembled factor by factor as
//! [`FactoredRational`] values so their blow-up limits can be read off exactly.
//! The diagonal coefficient is a genuine sum and is kept as one.

use crate::arith::blowup::{blowup_limit, uni_limit};
use crate::arith::ring::{int, rat, Rational, Ring};
use crate::arith::{AffineForm, ExtendedScalar, FactoredRational, UniPoly, UniRational};
use crate::error::{Error, Result};
use crate::partitions::{add_remove_sets, classify, in_hook, r_of, witness, DiagramClass, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookKind {
    /// `c⁰(□, x) = j - 1 + k(i - 1) + x`
    C0,
    /// `c⁻(□, x) = λ_i - j - k(λ'_j - i) + x`
    Minus,
    /// `c⁺(□, x) = λ_i + j + k(λ'_j + i) + x`
    Plus,
}

fn konst(c: i64) -> AffineForm {
    AffineForm::constant(int(c))
}

fn kform(a: i64, c: i64) -> AffineForm {
    AffineForm::new(int(a), int(0), int(c))
}

/// `h = -k - n - p/2`.
pub fn h_form(n: usize) -> AffineForm {
    AffineForm::new(int(-1), rat(-1, 2), int(-(n as i64)))
}

/// `a_i = λ_i + k i` (with `λ_i = 0` past the last row).
pub fn a_form(lambda: &Partition, i: usize) -> AffineForm {
    kform(i as i64, lambda.part(i) as i64)
}

/// Product over the boxes of `λ` of the chosen hook form at `x`.
pub fn hook_products(lambda: &Partition, x: &AffineForm, which: HookKind) -> FactoredRational {
    let mut acc = FactoredRational::one();
    for cell in lambda.cells() {
        let (i, j) = (cell.row as i64, cell.col as i64);
        let li = lambda.part(cell.row) as i64;
        let lj = lambda.column(cell.col) as i64;
        let form = match which {
            HookKind::C0 => kform(i - 1, j - 1),
            HookKind::Minus => kform(-(lj - i), li - j),
            HookKind::Plus => kform(lj + i, li + j),
        }
        .add(x);
        acc = acc.mul_form(&form, 1).expect("positive exponent");
    }
    acc
}

/// `J_λ(1) = 4^{|λ|} C⁰(h + p/2) / C⁻(-k) · C⁰(k + h - p/2 + 1/2) / C⁺(2h - 1)`.
pub fn j_norm(lambda: &Partition, n: usize) -> Result<FactoredRational> {
    let h = h_form(n);
    let half = rat(1, 2);
    let x1 = h.add(&AffineForm::p().scale(&half));
    let x2 = AffineForm::k().add(&h).sub(&AffineForm::p().scale(&half)).add_const(&half);
    let x3 = h.scale(&int(2)).add_const(&int(-1));
    let four = (0..lambda.size()).fold(int(1), |acc, _| acc * int(4));
    let num = hook_products(lambda, &x1, HookKind::C0).mul(&hook_products(lambda, &x2, HookKind::C0));
    let den = hook_products(lambda, &AffineForm::k().scale(&int(-1)), HookKind::Minus)
        .mul(&hook_products(lambda, &x3, HookKind::Plus));
    Ok(num.div(&den)?.scale(&four))
}

/// How `μ` differs from `λ` by one box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// `μ_i = λ_i + 1`, the added box is `(i, j)`.
    Add { i: usize, j: usize },
    /// `μ_i = λ_i - 1`, the deleted box is `(i, j)`.
    Remove { i: usize, j: usize },
}

pub fn step(lambda: &Partition, mu: &Partition) -> Result<Step> {
    let not_adj = || Error::NotAdjacent { lambda: lambda.clone(), mu: mu.clone() };
    let cell = lambda.difference_cell(mu).ok_or_else(not_adj)?;
    Ok(if mu.size() > lambda.size() {
        Step::Add { i: cell.row, j: cell.col }
    } else {
        Step::Remove { i: cell.row, j: cell.col }
    })
}

/// Accumulates numerator and denominator forms, then builds the product.
struct Product {
    prefactor: Rational,
    num: Vec<AffineForm>,
    den: Vec<AffineForm>,
}

impl Product {
    fn new(prefactor: Rational) -> Self {
        Product { prefactor, num: Vec::new(), den: Vec::new() }
    }

    fn frac(&mut self, num: AffineForm, den: AffineForm) {
        self.num.push(num);
        self.den.push(den);
    }

    fn finish(self) -> Result<FactoredRational> {
        Ok(FactoredRational::ratio(&self.num, &self.den)?.scale(&self.prefactor))
    }
}

/// `V_μ(λ)` for `μ ∈ S^±(λ)`. All `a_r` are read from `λ`.
pub fn v_coeff(lambda: &Partition, mu: &Partition, n: usize) -> Result<FactoredRational> {
    let h = h_form(n);
    let h2 = h.scale(&int(2));
    let k = AffineForm::k();
    let half = rat(1, 2);
    let p_half = AffineForm::p().scale(&half);
    let l = lambda.len();
    let mut prod = Product::new(int(1));
    match step(lambda, mu)? {
        Step::Add { i, .. } => {
            let ai = a_form(lambda, i);
            for j in (1..=l + 1).filter(|&j| j != i) {
                let aj = a_form(lambda, j);
                let d = ai.sub(&aj);
                prod.frac(d.sub(&k), d.clone());
                let s = ai.add(&aj).add(&h2);
                prod.frac(s.sub(&k), s);
            }
            prod.frac(ai.sub(&k).add(&h).add(&p_half), ai.sub(&k.scale(&int(l as i64 + 2))));
            prod.frac(ai.add(&k.scale(&int(l as i64 + 1))).add(&h2), ai.add(&h));
            prod.frac(ai.add(&h).sub(&p_half).add_const(&half), ai.add(&h).add_const(&half));
        }
        Step::Remove { i, .. } => {
            let ai = a_form(lambda, i);
            for j in (1..=l).filter(|&j| j != i) {
                let aj = a_form(lambda, j);
                let d = ai.sub(&aj);
                prod.frac(d.add(&k), d.clone());
                let s = ai.add(&aj).add(&h2);
                prod.frac(s.add(&k), s);
            }
            prod.frac(ai.add(&k).add(&h).sub(&p_half), ai.add(&k.scale(&int(l as i64 + 1))).add(&h2));
            prod.frac(ai.sub(&k.scale(&int(l as i64))), ai.add(&h));
            prod.frac(ai.add(&h).add(&p_half).add_const(&-&half), ai.add(&h).add_const(&-&half));
        }
    }
    prod.finish()
}

/// A sum of factored rationals; the diagonal Pieri coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredSum {
    pub terms: Vec<FactoredRational>,
}

impl FactoredSum {
    /// Value at a point. Individual terms may have cancelling poles, so the
    /// sum is formed as a rational function of `k` first.
    pub fn eval(&self, k: &Rational, p: &Rational) -> Option<Rational> {
        self.substitute_p(p).ok()?.eval(k)
    }

    pub fn substitute_blowup(&self, t: &Rational) -> Result<UniRational> {
        self.terms.iter().try_fold(UniRational::zero(), |acc, term| Ok(acc.add(&term.substitute_blowup(t)?)))
    }

    pub fn substitute_p(&self, p: &Rational) -> Result<UniRational> {
        self.terms.iter().try_fold(UniRational::zero(), |acc, term| Ok(acc.add(&term.substitute_p(p)?)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PieriCoeff {
    OffDiagonal(FactoredRational),
    Diagonal(FactoredSum),
}

impl PieriCoeff {
    pub fn eval(&self, k: &Rational, p: &Rational) -> Option<Rational> {
        match self {
            PieriCoeff::OffDiagonal(f) => f.eval(k, p),
            PieriCoeff::Diagonal(s) => s.eval(k, p),
        }
    }

    /// The coefficient on the line `p = t(k+1)`, as a function of `k`.
    pub fn substitute_blowup(&self, t: &Rational) -> Result<UniRational> {
        match self {
            PieriCoeff::OffDiagonal(f) => f.substitute_blowup(t),
            PieriCoeff::Diagonal(s) => s.substitute_blowup(t),
        }
    }

    pub fn substitute_p(&self, p: &Rational) -> Result<UniRational> {
        match self {
            PieriCoeff::OffDiagonal(f) => f.substitute_p(p),
            PieriCoeff::Diagonal(s) => s.substitute_p(p),
        }
    }
}

/// `a_{λ,μ}` for `μ ∈ S(λ)`.
///
/// For an added box that leaves `H(1, n)` the factor `V_μ(λ)` vanishes
/// identically while `J_μ(1)` is not defined; the coefficient is zero.
pub fn a_coeff(lambda: &Partition, mu: &Partition, n: usize) -> Result<PieriCoeff> {
    if !in_hook(lambda, 1, n) {
        return Err(Error::NotInHook { lambda: lambda.clone(), n });
    }
    if lambda == mu {
        let two_h_p = h_form(n).scale(&int(2)).add(&AffineForm::p());
        let lead = FactoredRational::ratio(&[two_h_p], &[AffineForm::k()])?.scale(&int(-1));
        let sets = add_remove_sets(lambda, 1, n);
        let mut terms = vec![lead];
        for nu in sets.plus_all.iter().chain(&sets.minus_all) {
            let v = v_coeff(lambda, nu, n)?;
            if !v.is_zero() {
                terms.push(v.scale(&int(-1)));
            }
        }
        return Ok(PieriCoeff::Diagonal(FactoredSum { terms }));
    }
    step(lambda, mu).map_err(|_| Error::NotInS { lambda: lambda.clone(), mu: mu.clone() })?;
    let v = v_coeff(lambda, mu, n)?;
    if !in_hook(mu, 1, n) {
        if !v.is_zero() {
            return Err(Error::Precondition(format!("V_{mu}({lambda}) does not vanish outside the hook")));
        }
        return Ok(PieriCoeff::OffDiagonal(FactoredRational::zero()));
    }
    Ok(PieriCoeff::OffDiagonal(v.mul(&j_norm(lambda, n)?).div(&j_norm(mu, n)?)?))
}

/// Off-diagonal `a_{λ,μ}` as a factored rational.
pub fn a_factored(lambda: &Partition, mu: &Partition, n: usize) -> Result<FactoredRational> {
    match a_coeff(lambda, mu, n)? {
        PieriCoeff::OffDiagonal(f) => Ok(f),
        PieriCoeff::Diagonal(_) => Err(Error::Precondition("diagonal coefficient is not a product".into())),
    }
}

/// The factor `a^{(2)}_{λ,μ}` carrying all `p`-dependence of `a_{λ,μ}`.
pub fn a2_factored(lambda: &Partition, mu: &Partition, n: usize) -> Result<FactoredRational> {
    let h = h_form(n);
    let h2 = h.scale(&int(2));
    let k = AffineForm::k();
    let half = rat(1, 2);
    let p_half = AffineForm::p().scale(&half);
    let l = lambda.len();
    let col = |s: usize| lambda.column(s) as i64;
    match step(lambda, mu)? {
        Step::Add { i, j } => {
            let mut prod = Product::new(rat(1, 4));
            let ai = a_form(lambda, i);
            for r in (1..=l + 1).filter(|&r| r != i) {
                let s = ai.add(&a_form(lambda, r)).add(&h2);
                prod.frac(s.sub(&k), s);
            }
            prod.frac(ai.add(&k.scale(&int(l as i64 + 1))).add(&h2), ai.add(&h));
            prod.frac(ai.add(&h).sub(&p_half).add_const(&half), ai.add(&h).add_const(&half));
            let (ii, jj) = (i as i64, j as i64);
            prod.frac(
                kform(2 * ii, 2 * jj - 1).add(&h2),
                kform(ii, jj - 1).add(&h).sub(&p_half).add_const(&half),
            );
            for s in 1..j {
                let base = ai.add(&kform(col(s), s as i64)).add(&h2);
                prod.frac(base.clone(), base.add_const(&int(-1)));
            }
            for r in 1..i {
                let base = a_form(lambda, r).add(&kform(col(j), jj)).add(&h2).add_const(&int(-1));
                prod.frac(base.add(&k), base);
            }
            prod.finish()
        }
        Step::Remove { i, j } => {
            let mut prod = Product::new(int(4));
            let ai = a_form(lambda, i);
            for r in (1..=l).filter(|&r| r != i) {
                let s = ai.add(&a_form(lambda, r)).add(&h2);
                prod.frac(s.add(&k), s);
            }
            prod.frac(ai.add(&k).add(&h).sub(&p_half), ai.add(&k.scale(&int(l as i64 + 1))).add(&h2));
            prod.frac(konst(1), ai.add(&h));
            // the same `a_i + h - 1/2` as in V; with `+ 1/2` the quotient
            // a / a2 would depend on p
            prod.frac(ai.add(&h).add(&p_half).add_const(&-&half), ai.add(&h).add_const(&-&half));
            let (ii, jj) = (i as i64, j as i64);
            prod.frac(kform(ii - 1, jj - 1).add(&h).add(&p_half), kform(2 * ii, 2 * jj - 1).add(&h2));
            prod.frac(kform(ii, jj - 1).add(&h).sub(&p_half).add_const(&half), konst(1));
            for s in 1..j {
                let base = ai.add(&kform(col(s), s as i64)).add(&h2);
                prod.frac(base.add_const(&int(-2)), base.add_const(&int(-1)));
            }
            for r in 1..i {
                let base = a_form(lambda, r).add(&kform(col(j), jj)).add(&h2).add_const(&int(-1));
                prod.frac(base.sub(&k), base);
            }
            prod.finish()
        }
    }
}

/// `lim_{k→-1} a_{λ,μ}` as a rational function of `p` (stored in the
/// variable of [`UniPoly`]), from the closed formulas of the limit theorem.
pub fn a_limit(lambda: &Partition, mu: &Partition, n: usize) -> Result<UniRational> {
    let p = UniRational::from_poly(UniPoly::k());
    let c = |x: i64| UniRational::constant(int(x));
    // 2h̃ = 2 - 2n - p
    let two_h = c(2 - 2 * n as i64).sub(&p);
    if lambda == mu {
        let l = lambda.len() as i64;
        let pp1 = p.mul(&p.add(&c(1)));
        let mut acc = pp1.div(&two_h.sub(&c(2 * l + 1))).add(&p);
        for i in 1..=lambda.len() {
            let a = c(2 * (lambda.part(i) as i64 - i as i64)).add(&two_h);
            let den = a.sub(&c(1)).mul(&a.add(&c(1)));
            acc = acc.sub(&pp1.scale(&int(2)).div(&den));
        }
        return Ok(acc);
    }
    match step(lambda, mu).map_err(|_| Error::NotInS { lambda: lambda.clone(), mu: mu.clone() })? {
        Step::Add { .. } => Ok(c(1)),
        Step::Remove { i, .. } => {
            let a = c(2 * (lambda.part(i) as i64 - i as i64)).add(&two_h);
            let num = a
                .add(&p)
                .mul(&a.sub(&p).sub(&c(2)))
                .mul(&a.add(&p).sub(&c(1)))
                .mul(&a.sub(&p).sub(&c(1)));
            let am1 = a.sub(&c(1));
            let den = am1.mul(&am1).mul(&a).mul(&a.sub(&c(2)));
            Ok(num.div(&den))
        }
    }
}

trait UniRationalExt {
    fn div(&self, o: &UniRational) -> UniRational;
    fn scale(&self, s: &Rational) -> UniRational;
}

impl UniRationalExt for UniRational {
    fn div(&self, o: &UniRational) -> UniRational {
        crate::arith::Field::div(self, o)
    }

    fn scale(&self, s: &Rational) -> UniRational {
        self.mul(&UniRational::constant(s.clone()))
    }
}

/// The limit-Pieri table at `(k, p) = (-1, 0)`: adds give 1, the diagonal 0,
/// a first-row removal `1 - δ(λ_1 = n) + δ(λ_1 = n + 1)`, other removals 1.
pub fn a_limit_table(lambda: &Partition, mu: &Partition, n: usize) -> Result<Rational> {
    if lambda == mu {
        return Ok(int(0));
    }
    if !in_hook(mu, 1, n) {
        return Ok(int(0));
    }
    match step(lambda, mu)? {
        Step::Add { .. } => Ok(int(1)),
        Step::Remove { i: 1, .. } => {
            let l1 = lambda.part(1);
            Ok(int(1 - i64::from(l1 == n) + i64::from(l1 == n + 1)))
        }
        Step::Remove { .. } => Ok(int(1)),
    }
}

/// `lim_{k→-1} a_{λ,μ}(k, t(k+1))`.
///
/// Off-diagonal coefficients go through [`blowup_limit`]. The diagonal is
/// expanded on the line for finite `t`; at `t = ∞` it is the `p → 0` value
/// of [`a_limit`].
pub fn a_blowup(lambda: &Partition, mu: &Partition, t: &ExtendedScalar, n: usize) -> Result<ExtendedScalar> {
    match a_coeff(lambda, mu, n)? {
        PieriCoeff::OffDiagonal(f) => Ok(blowup_limit(&f, t)),
        PieriCoeff::Diagonal(s) => match t {
            ExtendedScalar::Finite(t) => Ok(uni_limit(&s.substitute_blowup(t)?, &int(-1))),
            ExtendedScalar::Infinity => Ok(uni_limit(&a_limit(lambda, mu, n)?, &int(0))),
            ExtendedScalar::Undefined => Ok(ExtendedScalar::Undefined),
        },
    }
}

/// `(t - c + 2) / (t - c + 1)` style ratios, extended to `t = ∞`.
fn ratio_in_t(t: &ExtendedScalar, num_shift: i64, den_shift: i64) -> ExtendedScalar {
    match t {
        ExtendedScalar::Finite(t) => {
            let den = t + int(den_shift);
            if den.is_zero() {
                ExtendedScalar::Infinity
            } else {
                ExtendedScalar::Finite((t + int(num_shift)) / den)
            }
        }
        ExtendedScalar::Infinity => ExtendedScalar::Finite(int(1)),
        ExtendedScalar::Undefined => ExtendedScalar::Undefined,
    }
}

/// `2 / t`, extended to `t = ∞`.
fn two_over(t: &ExtendedScalar) -> ExtendedScalar {
    match t {
        ExtendedScalar::Finite(t) if t.is_zero() => ExtendedScalar::Infinity,
        ExtendedScalar::Finite(t) => ExtendedScalar::Finite(int(2) / t),
        ExtendedScalar::Infinity => ExtendedScalar::Finite(int(0)),
        ExtendedScalar::Undefined => ExtendedScalar::Undefined,
    }
}

/// Closed forms of `a_{λ,μ}(t)` for a removed box `(i, j)` with `j ≤ n`, when
/// one of the two hypotheses below holds; `None` otherwise.
///
/// 1. `λ_1 > n`, `μ` singular with witness `r` and `λ'_r > 1`:
///    `(t - λ'_j + 2)/(t - λ'_j + 1)` if `r = j`, `1` if `r > j`.
/// 2. `λ_1 ≤ n`, `i = 1`: `2/t` if `j = n`, `1` if `j < n`.
pub fn a_blowup_closed_form(
    lambda: &Partition,
    mu: &Partition,
    t: &ExtendedScalar,
    n: usize,
) -> Option<ExtendedScalar> {
    let Ok(Step::Remove { i, j }) = step(lambda, mu) else {
        return None;
    };
    if j > n {
        return None;
    }
    if lambda.part(1) > n {
        let r = witness(mu, n).ok()?;
        if lambda.column(r) <= 1 {
            return None;
        }
        let lj = lambda.column(j) as i64;
        if r == j {
            return Some(ratio_in_t(t, 2 - lj, 1 - lj));
        }
        if r > j {
            return Some(ExtendedScalar::Finite(int(1)));
        }
        return None;
    }
    if i == 1 {
        return Some(if j == n { two_over(t) } else { ExtendedScalar::Finite(int(1)) });
    }
    None
}

/// The pairs `(λ^{(s-1)}, λ^{(s)})` whose coefficients multiply to `b_λ`:
/// `λ^{(0)}` drops `r(λ)` boxes from the first row, then each step drops one
/// box from row `λ'_j`.
pub fn b_chain(lambda: &Partition, n: usize) -> Result<Vec<(Partition, Partition)>> {
    let j = witness(lambda, n)?;
    let r = r_of(lambda, n)?;
    let row = lambda.column(j);
    let mut cur = lambda.clone();
    for _ in 0..r {
        cur = cur
            .remove_from_row(1)
            .ok_or_else(|| Error::Precondition(format!("cannot shorten the first row of {cur}")))?;
    }
    let mut pairs = Vec::with_capacity(r);
    for _ in 0..r {
        let next = cur
            .remove_from_row(row)
            .ok_or_else(|| Error::Precondition(format!("cannot shorten row {row} of {cur}")))?;
        pairs.push((cur, next.clone()));
        cur = next;
    }
    Ok(pairs)
}

/// `b_λ = Π a_{λ^{(s-1)}, λ^{(s)}}` as a factored rational.
pub fn b_coeff(lambda: &Partition, n: usize) -> Result<FactoredRational> {
    b_chain(lambda, n)?
        .iter()
        .try_fold(FactoredRational::one(), |acc, (a, b)| Ok(acc.mul(&a_factored(a, b, n)?)))
}

/// Closed form of `b_λ(t)`: `2/t` if `λ'_j = 1`, else `(t - λ'_j + 2)/(t - λ'_j + 1)`.
pub fn b_coeff_blowup(lambda: &Partition, t: &ExtendedScalar, n: usize) -> Result<ExtendedScalar> {
    let j = witness(lambda, n)?;
    let l = lambda.column(j) as i64;
    Ok(if l == 1 { two_over(t) } else { ratio_in_t(t, 2 - l, 1 - l) })
}

/// `b_λ(t)` from the blow-up limit of the chain product.
pub fn b_coeff_blowup_by_chain(lambda: &Partition, t: &ExtendedScalar, n: usize) -> Result<ExtendedScalar> {
    Ok(blowup_limit(&b_coeff(lambda, n)?, t))
}

/// Whether `λ` is singular; convenience for callers that only need the flag.
pub fn is_singular(lambda: &Partition, n: usize) -> bool {
    matches!(classify(lambda, n), DiagramClass::Singular { .. })
}
