//! Limits at the blow-up centre `(k, p) = (-1, 0)`.
//!
//! Along the line `p = t(k+1)`, a form `a·k + b·p + c` that vanishes at the
//! centre (that is, `c = a`) becomes `(k+1)(a + b t)`. Such forms contribute a
//! power of `(k+1)` and a `t`-dependent value; all other forms contribute
//! their (nonzero) value at the centre. Counting the `(k+1)` powers decides
//! between zero, a finite value and a pole.

use num_traits::{One, Zero};

use super::affine::{pow_rational, AffineForm, FactoredRational};
use super::extended::ExtendedScalar;
use super::ring::{int, Rational};
use super::unirational::UniRational;
use crate::error::Result;

/// Limit of a univariate rational function as `k → point`.
pub fn uni_limit(f: &UniRational, point: &Rational) -> ExtendedScalar {
    let (zn, num) = f.num().split_root(point);
    if zn == usize::MAX {
        return ExtendedScalar::Finite(Rational::zero());
    }
    let (zd, den) = f.den().split_root(point);
    // canonical form: num and den coprime, so at most one of them vanishes
    assert!(zn == 0 || zd == 0, "non-canonical UniRational {f:?}");
    if zd > 0 {
        ExtendedScalar::Infinity
    } else if zn > 0 {
        ExtendedScalar::Finite(Rational::zero())
    } else {
        ExtendedScalar::Finite(num.eval(point) / den.eval(point))
    }
}

/// Expands `φ(k, t(k+1))` as a rational function of `k`.
pub fn substitute_blowup(phi: &FactoredRational, t: &Rational) -> Result<UniRational> {
    phi.substitute_blowup(t)
}

/// `lim_{k→-1} φ(k, t(k+1))`, computed from the factor structure alone.
///
/// For finite `t`: with `z` the net multiplicity of forms vanishing at the
/// centre, the limit is `0` for `z > 0`, `∞` for `z < 0`, and
/// `φ₁(-1,0)·Π(a+bt)^e` for `z = 0`, where `φ₁` collects the non-vanishing
/// forms. Forms that become identically zero after substitution give `0`
/// (numerator), `∞` (denominator) or `Undefined` (both).
///
/// For `t = ∞` the value is the limit of the finite-`t` answer as `t → ∞`.
pub fn blowup_limit(phi: &FactoredRational, t: &ExtendedScalar) -> ExtendedScalar {
    if phi.is_zero() {
        return ExtendedScalar::Finite(Rational::zero());
    }
    let mut regular = phi.prefactor().clone();
    let mut centre: Vec<(&AffineForm, i32)> = Vec::new();
    for (f, e) in phi.factors() {
        let v = f.at_center();
        if v.is_zero() {
            centre.push((f, e));
        } else {
            regular *= pow_rational(&v, e);
        }
    }
    let order: i32 = centre.iter().map(|(_, e)| e).sum();

    match t {
        ExtendedScalar::Undefined => ExtendedScalar::Undefined,
        ExtendedScalar::Finite(t) => {
            let mut zero_num = false;
            let mut zero_den = false;
            let mut value = regular;
            for (f, e) in &centre {
                let w = &f.a + &f.b * t;
                if w.is_zero() {
                    if *e > 0 {
                        zero_num = true;
                    } else {
                        zero_den = true;
                    }
                } else {
                    value *= pow_rational(&w, *e);
                }
            }
            match (zero_num, zero_den) {
                (true, true) => ExtendedScalar::Undefined,
                (true, false) => ExtendedScalar::Finite(Rational::zero()),
                (false, true) => ExtendedScalar::Infinity,
                (false, false) => match order.signum() {
                    1 => ExtendedScalar::Finite(Rational::zero()),
                    -1 => ExtendedScalar::Infinity,
                    _ => ExtendedScalar::Finite(value),
                },
            }
        }
        ExtendedScalar::Infinity => match order.signum() {
            1 => ExtendedScalar::Finite(Rational::zero()),
            -1 => ExtendedScalar::Infinity,
            _ => {
                // each centre form behaves like b·t (b ≠ 0) or the constant a
                let growth: i32 = centre.iter().filter(|(f, _)| !f.b.is_zero()).map(|(_, e)| e).sum();
                match growth.signum() {
                    1 => ExtendedScalar::Infinity,
                    -1 => ExtendedScalar::Finite(Rational::zero()),
                    _ => {
                        let mut value = regular;
                        for (f, e) in &centre {
                            let lead = if f.b.is_zero() { &f.a } else { &f.b };
                            value *= pow_rational(lead, *e);
                        }
                        ExtendedScalar::Finite(value)
                    }
                }
            }
        },
    }
}

/// Random factored rational mixing blow-up factors `p - d(k+1)` with
/// `p`-free affine forms; used by the randomized equivalence suite.
pub fn random_factored<R: rand::Rng>(rng: &mut R) -> FactoredRational {
    let mut phi = FactoredRational::constant(int(rng.gen_range(1..6)) * int(if rng.gen_bool(0.5) { 1 } else { -1 }));
    let nfactors = rng.gen_range(0..6);
    for _ in 0..nfactors {
        let form = if rng.gen_bool(0.5) {
            // p - d(k+1)
            let d = int(rng.gen_range(-3..4));
            AffineForm::new(-&d, Rational::one(), -d)
        } else {
            // p-free: a k + c, occasionally a multiple of (k+1)
            let a = int(rng.gen_range(1..4));
            let c = if rng.gen_bool(0.3) { a.clone() } else { int(rng.gen_range(-4..5)) };
            AffineForm::new(a, Rational::zero(), c)
        };
        let e = if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..3);
        phi = phi.mul_form(&form, e).expect("forms are nonzero");
    }
    phi
}

/// Random blow-up parameter: a small rational, sometimes an integer.
pub fn random_t<R: rand::Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-6..7);
    let den = if rng.gen_bool(0.4) { 1 } else { rng.gen_range(1..5) };
    Rational::new(num.into(), i64::from(den).into())
}

/// Oracle route: substitute, then take the univariate limit. `None` when the
/// substitution makes a denominator identically zero.
pub fn blowup_limit_by_substitution(phi: &FactoredRational, t: &Rational) -> Option<ExtendedScalar> {
    let f = substitute_blowup(phi, t).ok()?;
    Some(uni_limit(&f, &-Rational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::Ring;
    use crate::arith::ring::rat;
    use crate::arith::unipoly::UniPoly;

    fn form(a: i64, b: i64, c: i64) -> AffineForm {
        AffineForm::new(int(a), int(b), int(c))
    }

    #[test]
    fn uni_limit_examples() {
        let kp1 = UniPoly::linear(int(1), int(1));
        // (k+1)^2/(k+1) → 0
        let f = UniRational::new(kp1.mul(&kp1), kp1.clone());
        assert_eq!(uni_limit(&f, &int(-1)), ExtendedScalar::Finite(int(0)));
        // (k+3)/(k+1) → ∞
        let g = UniRational::new(UniPoly::linear(int(1), int(3)), kp1.clone());
        assert_eq!(uni_limit(&g, &int(-1)), ExtendedScalar::Infinity);
        // (k²-1)/(k+1) → -2
        let h = UniRational::new(UniPoly::new(vec![int(-1), int(0), int(1)]), kp1);
        assert_eq!(uni_limit(&h, &int(-1)), ExtendedScalar::Finite(int(-2)));
    }

    #[test]
    fn blowup_limit_examples() {
        // (p - 2(k+1)) / (p - 3(k+1)) at t = 5 → 3/2
        let phi = FactoredRational::ratio(&[form(-2, 1, -2)], &[form(-3, 1, -3)]).unwrap();
        assert_eq!(
            blowup_limit(&phi, &ExtendedScalar::Finite(int(5))),
            ExtendedScalar::Finite(rat(3, 2))
        );
        // (k+2)/(p - (k+1)) at t = 7 → ∞  (|I0| = 0 < |J0| = 1)
        let phi = FactoredRational::ratio(&[form(1, 0, 2)], &[form(-1, 1, -1)]).unwrap();
        assert_eq!(blowup_limit(&phi, &ExtendedScalar::Finite(int(7))), ExtendedScalar::Infinity);
        // (p - (k+1))(k+3) at t = 4 → 0
        let phi = FactoredRational::ratio(&[form(-1, 1, -1), form(1, 0, 3)], &[]).unwrap();
        assert_eq!(
            blowup_limit(&phi, &ExtendedScalar::Finite(int(4))),
            ExtendedScalar::Finite(int(0))
        );
    }

    #[test]
    fn limit_at_infinity_of_balanced_ratio() {
        // (p - 2(k+1))/(p - 3(k+1)) → (t-2)/(t-3) → 1 as t → ∞
        let phi = FactoredRational::ratio(&[form(-2, 1, -2)], &[form(-3, 1, -3)]).unwrap();
        assert_eq!(
            blowup_limit(&phi, &ExtendedScalar::Infinity),
            ExtendedScalar::Finite(int(1))
        );
        // 2(k+1)/p → 2/t → 0
        let phi = FactoredRational::ratio(&[form(2, 0, 2)], &[AffineForm::p()]).unwrap();
        assert_eq!(
            blowup_limit(&phi, &ExtendedScalar::Infinity),
            ExtendedScalar::Finite(int(0))
        );
    }

    #[test]
    fn random_factored_agrees_with_substitution() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let phi = random_factored(&mut rng);
            let t = random_t(&mut rng);
            if let Some(oracle) = blowup_limit_by_substitution(&phi, &t) {
                assert_eq!(blowup_limit(&phi, &ExtendedScalar::Finite(t)), oracle, "{phi}");
            }
        }
    }
}
