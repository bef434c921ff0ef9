//! Verification suites shared by the command line and the acceptance target.
//!
//! Each suite runs over every diagram of `H(1, n)` up to a size bound and
//! reports how many checks ran and which ones failed.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;

use crate::arith::blowup::{blowup_limit_by_substitution, random_factored, random_t};
use crate::arith::ring::{int, rat};
use crate::arith::{blowup_limit, uni_limit, ExtendedScalar, LaurentPoly, Rational};
use crate::characters::{
    chi_of, e_sch, euler_pieri_check, kac_decomposition_check, l_sch, sing3_check,
    typicality_matches_regularity,
};
use crate::engine::{limit_at_minus_one, si_direct, sj_direct, sj_infinity_by_si, InfinityFamily, JacobiEngine};
use crate::error::{Error, Result};
use crate::partitions::{
    classify, collision_predicted, f_set, f_set_closed_form, hook_partitions_up_to, pi_set, pi_set_closed_form,
    s_set, sharp, sharp_chain, tilde_c, witness, Partition,
};
use crate::pieri::is_singular;

/// Outcome of one suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    /// Checks that could not run because every parameter degenerated.
    pub degenerate: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), ..SuiteReport::default() }
    }

    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty() && self.degenerate.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn record_result(&mut self, r: Result<bool>, what: impl Fn() -> String) {
        match r {
            Ok(ok) => self.record(ok, what),
            Err(e @ Error::DegenerateParameters { .. }) => {
                self.checked += 1;
                self.degenerate.push(format!("{}: {e}", what()));
            }
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", what()));
            }
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.degenerate.extend(other.degenerate);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checked, {} failed, {} degenerate",
            self.name,
            self.checked,
            self.failures.len(),
            self.degenerate.len()
        )
    }
}

/// Engines and the `SJ(∞)` family for one `n`, shared between suites.
pub struct Workspace {
    n: usize,
    engines: Mutex<HashMap<Rational, Arc<JacobiEngine>>>,
    family: InfinityFamily,
}

impl Workspace {
    pub fn new(n: usize) -> Self {
        Workspace { n, engines: Mutex::new(HashMap::new()), family: InfinityFamily::new(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn engine(&self, t: &Rational) -> Arc<JacobiEngine> {
        self.engines
            .lock()
            .expect("engine table lock")
            .entry(t.clone())
            .or_insert_with(|| Arc::new(JacobiEngine::new(self.n, t.clone())))
            .clone()
    }

    pub fn family(&self) -> &InfinityFamily {
        &self.family
    }

    /// Runs `f` with the first engine in `ts` that does not degenerate.
    fn with_engines<T>(&self, ts: &[Rational], f: impl Fn(&JacobiEngine) -> Result<T>) -> Result<T> {
        let mut last = None;
        for t in ts {
            match f(&self.engine(t)) {
                Err(e @ Error::DegenerateParameters { .. }) => last = Some(e),
                other => return other,
            }
        }
        Err(last.unwrap_or_else(|| Error::Precondition("no parameter values given".into())))
    }
}

fn diagrams(n: usize, max_size: usize) -> Vec<Partition> {
    hook_partitions_up_to(n, max_size)
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `ℒJ_λ = c_λ J_λ` with `k` symbolic.
pub fn eigen_suite(ws: &Workspace, max_size: usize, ts: &[Rational]) -> SuiteReport {
    let mut rep = SuiteReport::new("eigen");
    for lam in diagrams(ws.n, max_size) {
        rep.record_result(ws.with_engines(ts, |e| e.check_eigen(&lam)), || format!("n={} λ={lam}", ws.n));
    }
    rep
}

/// `p_1 J_λ = Σ a_{λ,μ} J_μ` for every λ up to `max_size` (builds `J_μ` one
/// size further).
pub fn pieri_suite(ws: &Workspace, max_size: usize, ts: &[Rational]) -> SuiteReport {
    let mut rep = SuiteReport::new("pieri");
    for lam in diagrams(ws.n, max_size) {
        rep.record_result(ws.with_engines(ts, |e| e.check_pieri(&lam)), || format!("n={} λ={lam}", ws.n));
    }
    rep
}

/// Hyperoctahedral symmetry of each `J_λ`.
pub fn symmetry_suite(ws: &Workspace, max_size: usize, ts: &[Rational]) -> SuiteReport {
    let mut rep = SuiteReport::new("symmetry");
    let n = ws.n;
    for lam in diagrams(n, max_size) {
        let r = ws.with_engines(ts, |e| {
            let f = &e.jacobi(&lam)?.num;
            let mut ok = f.map_exponents(|v| {
                let mut w = v.to_vec();
                w[0] = -w[0];
                w
            }) == *f;
            for j in 1..=n {
                ok &= f.map_exponents(|v| {
                    let mut w = v.to_vec();
                    w[j] = -w[j];
                    w
                }) == *f;
                if j < n {
                    ok &= f.map_exponents(|v| {
                        let mut w = v.to_vec();
                        w.swap(j, j + 1);
                        w
                    }) == *f;
                }
            }
            Ok(ok)
        });
        rep.record_result(r, || format!("n={n} λ={lam}"));
    }
    rep
}

/// Filtering versus closed forms for `F_λ(μ)`, chain lengths, `π_λ`, and
/// the eigenvalue collision law.
pub fn comb_suite(n: usize, max_size: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("comb");
    let all = diagrams(n, max_size);
    for lam in &all {
        for mu in &all {
            if mu.size() + 1 != lam.size() {
                continue;
            }
            if let Some(mut expect) = f_set_closed_form(lam, mu, n) {
                expect.sort();
                let mut got = f_set(lam, mu, n);
                got.sort();
                rep.record(got == expect, || format!("F_{lam}({mu}) = {got:?}, closed form {expect:?}"));
            }
        }
        if is_singular(lam, n) {
            let r = sharp_chain(lam, n).map(|c| c.len() == lam.column(witness(lam, n).unwrap_or(1)) + 1);
            rep.record_result(r, || format!("sharp chain of {lam}"));
        }
        let got = pi_set(lam, n);
        let expect = pi_set_closed_form(lam, n);
        rep.record(got == expect, || format!("π_{lam} = {got:?}, closed form {expect:?}"));
        let set = s_set(lam, n);
        for (a, mu) in set.iter().enumerate() {
            for nu in &set[a + 1..] {
                let equal = tilde_c(mu, n) == tilde_c(nu, n);
                let predicted = collision_predicted(lam, mu, nu, n);
                rep.record(equal == predicted, || format!("collision law at λ={lam}: {mu} vs {nu}"));
            }
        }
    }
    rep
}

/// The factor-structure limit against substitution on random inputs.
pub fn blowup_suite(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("blowup");
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut done = 0;
    while done < cases {
        let phi = random_factored(&mut rng);
        let t = random_t(&mut rng);
        let Some(oracle) = blowup_limit_by_substitution(&phi, &t) else {
            continue;
        };
        done += 1;
        let got = blowup_limit(&phi, &ExtendedScalar::Finite(t.clone()));
        rep.record(got == oracle, || format!("{phi} at t={t}: {got} vs {oracle}"));
    }
    rep
}

/// `I_λ` has no poles at `k = -1` (combination coefficients and polynomial
/// coefficients), and `SI_λ` is the same at every `t` in `ts`.
pub fn regularity_suite(ws: &Workspace, max_size: usize, ts: &[Rational]) -> SuiteReport {
    let mut rep = SuiteReport::new("regularity");
    let n = ws.n;
    for lam in diagrams(n, max_size) {
        let mut values: Vec<LaurentPoly<Rational>> = Vec::new();
        for t in ts {
            let e = ws.engine(t);
            let r = (|| -> Result<bool> {
                let combo = e.i_combo(&lam)?;
                let finite = combo.iter().all(|(_, c)| !uni_limit(c, &int(-1)).is_infinite());
                let poly = limit_at_minus_one(&e.i_poly(&lam)?, &lam)?;
                values.push(poly);
                Ok(finite)
            })();
            rep.record_result(r, || format!("I_{lam} at t={t}"));
        }
        if values.len() == ts.len() {
            let same = values.windows(2).all(|w| w[0] == w[1]);
            rep.record(same, || format!("SI_{lam} depends on t"));
        }
    }
    rep
}

/// `SJ_λ(∞) = (-1)^{s(λ)} sch E(λ)`; with `ts` nonempty, also compares the
/// limit-Pieri family against the alternating `SI` sums built at `ts[0]`.
pub fn infinity_suite(ws: &Workspace, max_size: usize, ts: &[Rational]) -> SuiteReport {
    let mut rep = SuiteReport::new("infinity");
    let n = ws.n;
    for lam in diagrams(n, max_size) {
        let r = (|| -> Result<bool> {
            let sj = ws.family.get(&lam)?;
            Ok(*sj == e_sch(&lam, n)?.scale(&sign(lam.s_stat())))
        })();
        rep.record_result(r, || format!("SJ_{lam}(inf) vs sch E"));
        if let Some(t) = ts.first() {
            let r = (|| -> Result<bool> {
                Ok(sj_infinity_by_si(&ws.engine(t), &lam)?.poly == *ws.family.get(&lam)?)
            })();
            rep.record_result(r, || format!("SJ_{lam}(inf) by SI sums"));
        }
    }
    rep
}

/// For singular λ with `l = λ'_j`: `SJ_λ(l) = (-1)^{s(λ)} sch L(λ)`.
pub fn special_point_suite(ws: &Workspace, max_size: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("special");
    let n = ws.n;
    for lam in diagrams(n, max_size).into_iter().filter(|l| is_singular(l, n)) {
        let r = (|| -> Result<bool> {
            let l = lam.column(witness(&lam, n)?);
            let sj = ws.family.sj(&lam, &ExtendedScalar::Finite(int(l as i64)))?;
            Ok(sj.poly == l_sch(&lam, n)?.scale(&sign(lam.s_stat())))
        })();
        rep.record_result(r, || format!("SJ_{lam}(l) vs sch L"));
    }
    rep
}

/// For singular λ with `select(λ'_j)`:
/// `SI_λ = (-1)^{s(λ)} sch E(λ) + (-1)^{s(λ♯)} sch E(λ♯)`, with `SI_λ` the
/// direct limit of `I_λ` built at `t`.
pub fn projective_suite(ws: &Workspace, max_size: usize, t: &Rational, select: impl Fn(usize) -> bool) -> SuiteReport {
    projective_check(ws, max_size, t, select, |_| true, "projective")
}

/// The case split that follows from `SI_λ = SJ_λ(∞)` (`λ'_j = 1`) or
/// `SJ_λ(∞) + SJ_{λ♯}(∞)` (`λ'_j > 1`): the `sch E(λ♯)` term is present
/// only when `λ'_j > 1`.
pub fn projective_split_suite(ws: &Workspace, max_size: usize, t: &Rational) -> SuiteReport {
    projective_check(ws, max_size, t, |_| true, |l| l > 1, "projective split")
}

fn projective_check(
    ws: &Workspace,
    max_size: usize,
    t: &Rational,
    select: impl Fn(usize) -> bool,
    with_sharp: impl Fn(usize) -> bool,
    name: &str,
) -> SuiteReport {
    let mut rep = SuiteReport::new(name);
    let n = ws.n;
    for lam in diagrams(n, max_size).into_iter().filter(|l| is_singular(l, n)) {
        let l = lam.column(witness(&lam, n).unwrap_or(1));
        if !select(l) {
            continue;
        }
        let r = (|| -> Result<bool> {
            let si = si_direct(&ws.engine(t), &lam)?.poly;
            let mut rhs = e_sch(&lam, n)?.scale(&sign(lam.s_stat()));
            if with_sharp(l) {
                let sh = sharp(&lam, n)?;
                rhs.add_assign(&e_sch(&sh, n)?.scale(&sign(sh.s_stat())));
            }
            Ok(si == rhs)
        })();
        rep.record_result(r, || format!("SI_{lam} (λ'_j = {l})"));
    }
    rep
}

/// Euler Pieri rule for every λ in range.
pub fn euler_suite(n: usize, max_size: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("euler");
    for lam in diagrams(n, max_size) {
        rep.record_result(euler_pieri_check(&lam, n), || format!("Euler Pieri at {lam}"));
    }
    rep
}

/// Kac decomposition and its telescoped form for singular λ.
pub fn kac_suite(n: usize, max_size: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("kac");
    for lam in diagrams(n, max_size).into_iter().filter(|l| is_singular(l, n)) {
        rep.record_result(kac_decomposition_check(&lam, n), || format!("Kac decomposition at {lam}"));
        rep.record_result(sing3_check(&lam, n), || format!("alternating Kac expansion at {lam}"));
    }
    rep
}

/// Typicality of `χ_λ` against regularity of λ, for `λ_1 > n`.
pub fn typicality_suite(n: usize, max_size: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("typicality");
    for lam in diagrams(n, max_size) {
        match typicality_matches_regularity(&lam, n) {
            Ok(Some(ok)) => rep.record(ok, || {
                format!("typicality of {} vs class {:?} for {lam}", chi_of(&lam, n), classify(&lam, n))
            }),
            Ok(None) => {}
            Err(e) => rep.record_result(Err(e), || format!("atypical roots of {lam}")),
        }
    }
    rep
}

/// Euler, Kac and typicality suites together.
pub fn character_suite(n: usize, max_size: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("characters");
    rep.merge(euler_suite(n, max_size));
    rep.merge(kac_suite(n, max_size));
    rep.merge(typicality_suite(n, max_size));
    rep
}

/// Regular λ: `SJ_λ(t)` agrees at the finite `ts` (direct limits) and at `∞`.
/// Singular λ: the formula route at `t_sing` agrees with the direct limit.
pub fn t_independence_suite(ws: &Workspace, max_size: usize, ts: &[Rational], t_sing: &Rational) -> SuiteReport {
    let mut rep = SuiteReport::new("t-independence");
    let n = ws.n;
    for lam in diagrams(n, max_size) {
        if is_singular(&lam, n) {
            let r = (|| -> Result<bool> {
                let a = sj_direct(&ws.engine(t_sing), &lam)?.poly;
                let b = ws.family.sj(&lam, &ExtendedScalar::Finite(t_sing.clone()))?.poly;
                Ok(a == b)
            })();
            rep.record_result(r, || format!("SJ_{lam}({t_sing}) direct vs formula"));
        } else {
            let r = (|| -> Result<bool> {
                let inf = ws.family.get(&lam)?;
                for t in ts {
                    if sj_direct(&ws.engine(t), &lam)?.poly != *inf {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            rep.record_result(r, || format!("SJ_{lam}(t) for regular λ"));
        }
    }
    rep
}

/// Default parameter values used by the suites.
pub fn default_ts() -> Vec<Rational> {
    vec![rat(1, 2), rat(5, 3)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for n in 1..=2 {
            let ws = Workspace::new(n);
            let ts = default_ts();
            for rep in [
                eigen_suite(&ws, 3, &ts),
                pieri_suite(&ws, 3, &ts),
                symmetry_suite(&ws, 3, &ts),
                comb_suite(n, 5),
                regularity_suite(&ws, 3, &ts),
                infinity_suite(&ws, 3, &ts),
                special_point_suite(&ws, 3),
                character_suite(n, 4),
                t_independence_suite(&ws, 3, &[rat(1, 2), int(7)], &rat(7, 3)),
            ] {
                assert!(rep.passed(), "{rep}: {:?} {:?}", rep.failures, rep.degenerate);
            }
        }
        assert!(blowup_suite(100, 1).passed());
    }

    #[test]
    fn report_counts_failures() {
        let mut r = SuiteReport::new("x");
        r.record(true, String::new);
        r.record(false, || "bad".into());
        assert_eq!(r.checked, 2);
        assert!(!r.passed());
        assert_eq!(r.to_string(), "x: 2 checked, 1 failed, 0 degenerate");
    }
}
