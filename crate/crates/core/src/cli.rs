//! Command-line front end: compute, tabulate and verify, with stable text
//! and JSON output.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arith::ring::{int, parse_rational};
use crate::arith::{monomial_name, ExtendedScalar, LaurentPoly, Rational};
use crate::characters::{chi_of, e_sch, kac_sch, l_sch};
use crate::engine::{si_direct, sj_direct, with_retry, InfinityFamily, JacobiEngine, RETRY_T};
use crate::error::{Error, Result};
use crate::partitions::{classify, hook_partitions_up_to, in_hook, sharp_chain, tilde_c, DiagramClass, Partition};
use crate::pieri::b_coeff_blowup;
use crate::verify::{
    blowup_suite, comb_suite, default_ts, eigen_suite, euler_suite, infinity_suite, kac_suite, pieri_suite,
    projective_split_suite, regularity_suite, special_point_suite, symmetry_suite, t_independence_suite,
    typicality_suite, SuiteReport, Workspace,
};

const AFTER_HELP: &str = "\
Partitions are written as comma-separated parts (\"3,1\"); \"-\" is the empty partition.
t is a rational \"a/b\" or \"inf\".

J polynomials are built with k symbolic on the line p = t(k+1). When a build at
some t hits coinciding eigenvalues or a vanishing Pieri coefficient, routes whose
result does not depend on t retry with t = 1/2, 5/3, 7/11, 13/17, 19/23, 29/31
in that order. Exhausting the list exits with status 2.

Exit status: 0 success, 1 verification failure or error, 2 degenerate parameters.";

#[derive(Parser, Debug)]
#[command(name = "superjacobi", version, about = "Super Jacobi polynomials of type BC(1,n) and osp(2,2n) supercharacters", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Number of even variables y_1..y_n.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Limit-Pieri recursion at k = -1, p = 0.
    Family,
    /// Limit k -> -1 of polynomials built with symbolic k.
    Direct,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Eigen,
    Pieri,
    Symmetry,
    Euler,
    Kac,
    Typicality,
    Special,
    Infinity,
    Projective,
    Regularity,
    TIndependence,
    Comb,
    Blowup,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Specialization SJ_λ(t).
    ComputeSj {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "inf")]
        t: String,
        #[arg(long, value_enum, default_value_t = Route::Family)]
        route: Route,
    },
    /// Nonsingular specialization SI_λ.
    ComputeSi {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Route::Family)]
        route: Route,
    },
    /// sch E(λ), sch L(λ) and sch K(χ_λ).
    ComputeSch {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Runs a verification suite over all λ in H(1,n) up to --max-size.
    Verify {
        suite: SuiteName,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Seed for the randomized blow-up suite.
        #[arg(long, default_value_t = 20240917)]
        seed: u64,
    },
    /// Per-λ summary: class, witness column, sharp chain, c̃, b_λ(t).
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value = "inf")]
        t: String,
    },
}

/// One monomial of an emitted polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<i32>,
    pub coeff: String,
}

/// An emitted polynomial with its labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub t: String,
    pub terms: Vec<TermDoc>,
}

impl PolyDoc {
    pub fn new(n: usize, lambda: &Partition, t: &str, poly: &LaurentPoly<Rational>) -> Self {
        PolyDoc { n, lambda: lambda.parts().to_vec(), t: t.to_string(), terms: term_docs(poly) }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly<Rational>> {
        parse_terms(self.n + 1, &self.terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedTerms {
    pub name: String,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchDoc {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub characters: Vec<NamedTerms>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub suite: String,
    pub n: usize,
    pub max_size: usize,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<String>,
    pub degenerate: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub lambda: Vec<usize>,
    pub class: String,
    pub j: Option<usize>,
    pub sharp_chain: Vec<Vec<usize>>,
    pub tilde_c: i64,
    pub b: Option<String>,
}

/// Exact `num/den` form used in JSON.
pub fn coeff_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn term_docs(poly: &LaurentPoly<Rational>) -> Vec<TermDoc> {
    poly.graded_lex_terms()
        .into_iter()
        .map(|(e, c)| TermDoc { exp: e.clone(), coeff: coeff_string(c) })
        .collect()
}

pub fn parse_terms(nvars: usize, terms: &[TermDoc]) -> Result<LaurentPoly<Rational>> {
    let mut out = LaurentPoly::zero(nvars);
    for t in terms {
        if t.exp.len() != nvars {
            return Err(Error::Parse(format!("exponent {:?} has {} entries, expected {nvars}", t.exp, t.exp.len())));
        }
        let c = parse_rational(&t.coeff).ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
        out.add_term(t.exp.clone(), &c);
    }
    Ok(out)
}

/// One line per monomial, `coeff * x^a y1^b`, graded-lex order.
pub fn text_terms(poly: &LaurentPoly<Rational>) -> String {
    if poly.is_zero() {
        return "0\n".to_string();
    }
    let mut s = String::new();
    for (e, c) in poly.graded_lex_terms() {
        let c = if c.is_integer() { c.numer().to_string() } else { coeff_string(c) };
        if e.iter().all(|&x| x == 0) {
            let _ = writeln!(s, "{c}");
        } else {
            let _ = writeln!(s, "{c} * {}", monomial_name(e));
        }
    }
    s
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

/// Result of a run: exit status and the document for stdout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Runs a parsed command. Errors map to exit status 2 for degenerate
/// parameters and 1 otherwise.
pub fn run(cli: &Cli) -> std::result::Result<Outcome, (i32, Error)> {
    execute(cli).map_err(|e| {
        let code = if matches!(e, Error::DegenerateParameters { .. }) { 2 } else { 1 };
        (code, e)
    })
}

fn hook_lambda(s: &str, n: usize) -> Result<Partition> {
    let lam: Partition = s.parse()?;
    if !in_hook(&lam, 1, n) {
        return Err(Error::NotInHook { lambda: lam, n });
    }
    Ok(lam)
}

fn emit_poly(format: Format, doc: &PolyDoc, poly: &LaurentPoly<Rational>) -> String {
    match format {
        Format::Json => json(doc),
        Format::Text => text_terms(poly),
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let ok = |stdout: String| Ok(Outcome { code: 0, stdout });
    match &cli.command {
        Command::ComputeSj { common, lambda, t, route } => {
            let n = common.n as usize;
            let lam = hook_lambda(lambda, n)?;
            let t: ExtendedScalar = t.parse()?;
            let poly = match (route, &t) {
                (Route::Direct, ExtendedScalar::Finite(tv)) => sj_direct(&JacobiEngine::new(n, tv.clone()), &lam)?.poly,
                (Route::Direct, _) => {
                    return Err(Error::Precondition("the direct route needs a finite t".into()));
                }
                (Route::Family, _) => InfinityFamily::new(n).sj(&lam, &t)?.poly,
            };
            let doc = PolyDoc::new(n, &lam, &t.to_string(), &poly);
            ok(emit_poly(common.format, &doc, &poly))
        }
        Command::ComputeSi { common, lambda, route } => {
            let n = common.n as usize;
            let lam = hook_lambda(lambda, n)?;
            let poly = match route {
                Route::Family => InfinityFamily::new(n).si(&lam)?.poly,
                Route::Direct => with_retry(n, |e| si_direct(e, &lam))?.1.poly,
            };
            let doc = PolyDoc::new(n, &lam, "inf", &poly);
            ok(emit_poly(common.format, &doc, &poly))
        }
        Command::ComputeSch { common, lambda } => {
            let n = common.n as usize;
            let lam = hook_lambda(lambda, n)?;
            let chars = [
                ("E", e_sch(&lam, n)?),
                ("L", l_sch(&lam, n)?),
                ("K", kac_sch(&chi_of(&lam, n))?),
            ];
            let out = match common.format {
                Format::Json => json(&SchDoc {
                    n,
                    lambda: lam.parts().to_vec(),
                    characters: chars
                        .iter()
                        .map(|(name, p)| NamedTerms { name: name.to_string(), terms: term_docs(p) })
                        .collect(),
                }),
                Format::Text => {
                    let mut s = String::new();
                    for (name, p) in &chars {
                        let _ = writeln!(s, "# sch {name} {lam}");
                        s.push_str(&text_terms(p));
                    }
                    s
                }
            };
            ok(out)
        }
        Command::Verify { suite, common, max_size, seed } => {
            let n = common.n as usize;
            let rep = run_suite(*suite, n, *max_size, *seed);
            let code = if !rep.failures.is_empty() {
                1
            } else if !rep.degenerate.is_empty() {
                2
            } else if rep.checked == 0 {
                1
            } else {
                0
            };
            let out = match common.format {
                Format::Json => json(&VerifyDoc {
                    suite: rep.name.clone(),
                    n,
                    max_size: *max_size,
                    checked: rep.checked,
                    passed: rep.passed(),
                    failures: rep.failures.clone(),
                    degenerate: rep.degenerate.clone(),
                }),
                Format::Text => {
                    let mut s = format!("{rep} [n={n}, max-size={max_size}]\n");
                    for f in rep.failures.iter().chain(&rep.degenerate) {
                        let _ = writeln!(s, "  {f}");
                    }
                    s.push_str(if rep.passed() { "PASS\n" } else { "FAIL\n" });
                    s
                }
            };
            Ok(Outcome { code, stdout: out })
        }
        Command::Table { common, max_size, t } => {
            let n = common.n as usize;
            let t: ExtendedScalar = t.parse()?;
            let rows = table(n, *max_size, &t)?;
            let out = match common.format {
                Format::Json => json(&rows),
                Format::Text => {
                    let mut s = format!("# n={n} t={t}\nlambda\tclass\tj\tsharp chain\ttilde c\tb(t)\n");
                    for r in &rows {
                        let chain: Vec<String> = r.sharp_chain.iter().map(|p| parts_string(p)).collect();
                        let _ = writeln!(
                            s,
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            parts_string(&r.lambda),
                            r.class,
                            r.j.map_or("-".to_string(), |j| j.to_string()),
                            if chain.is_empty() { "-".to_string() } else { chain.join(" > ") },
                            r.tilde_c,
                            r.b.as_deref().unwrap_or("-")
                        );
                    }
                    s
                }
            };
            ok(out)
        }
    }
}

fn parts_string(p: &[usize]) -> String {
    if p.is_empty() {
        "-".to_string()
    } else {
        p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Rows of the `table` command, in the order of `hook_partitions_up_to`.
pub fn table(n: usize, max_size: usize, t: &ExtendedScalar) -> Result<Vec<TableRow>> {
    hook_partitions_up_to(n, max_size)
        .into_iter()
        .map(|lam| {
            let (class, j, chain, b) = match classify(&lam, n) {
                DiagramClass::Regular => ("regular".to_string(), None, Vec::new(), None),
                DiagramClass::Singular { j } => {
                    let chain = sharp_chain(&lam, n)?.iter().map(|p| p.parts().to_vec()).collect();
                    let b = match b_coeff_blowup(&lam, t, n) {
                        Ok(b) => b.to_string(),
                        Err(Error::DivisionByZero) => ExtendedScalar::Infinity.to_string(),
                        Err(e) => return Err(e),
                    };
                    ("singular".to_string(), Some(j), chain, Some(b))
                }
            };
            Ok(TableRow { lambda: lam.parts().to_vec(), class, j, sharp_chain: chain, tilde_c: tilde_c(&lam, n), b })
        })
        .collect()
}

fn retry_ts() -> Vec<Rational> {
    RETRY_T.iter().map(|&(a, b)| int(a) / int(b)).collect()
}

/// Runs one named suite at the given range.
pub fn run_suite(suite: SuiteName, n: usize, max_size: usize, seed: u64) -> SuiteReport {
    let ws = Workspace::new(n);
    let ts = retry_ts();
    match suite {
        SuiteName::Eigen => eigen_suite(&ws, max_size, &ts),
        SuiteName::Pieri => pieri_suite(&ws, max_size, &ts),
        SuiteName::Symmetry => symmetry_suite(&ws, max_size, &ts),
        SuiteName::Euler => euler_suite(n, max_size),
        SuiteName::Kac => kac_suite(n, max_size),
        SuiteName::Typicality => typicality_suite(n, max_size),
        SuiteName::Special => special_point_suite(&ws, max_size),
        SuiteName::Infinity => infinity_suite(&ws, max_size, &ts[..1]),
        SuiteName::Projective => projective_split_suite(&ws, max_size, &ts[0]),
        SuiteName::Regularity => regularity_suite(&ws, max_size, &default_ts()),
        SuiteName::TIndependence => t_independence_suite(&ws, max_size, &[ts[0].clone(), int(7)], &(int(7) / int(3))),
        SuiteName::Comb => comb_suite(n, max_size),
        SuiteName::Blowup => blowup_suite(1000, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rat;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("superjacobi").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn empty_lambda_is_one() {
        let out = run(&parse(&["compute-sj", "--n", "1", "--lambda", "-"])).unwrap();
        assert_eq!(out, Outcome { code: 0, stdout: "1\n".into() });
    }

    #[test]
    fn poly_doc_round_trip() {
        let p = LaurentPoly::from_terms(3, [(vec![1, -2, 0], rat(-3, 4)), (vec![0, 0, 0], int(5))]);
        let doc = PolyDoc::new(2, &Partition::of(&[2, 1]), "1/2", &p);
        let back: PolyDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back.to_poly().unwrap(), p);
        assert_eq!(doc.terms[0].exp, vec![1, -2, 0]);
        assert_eq!(doc.terms[1].coeff, "5/1");
    }

    #[test]
    fn outside_hook_rejected() {
        let err = run(&parse(&["compute-si", "--n", "1", "--lambda", "2,2"])).unwrap_err();
        assert_eq!(err.0, 1);
        assert!(matches!(err.1, Error::NotInHook { .. }));
    }

    #[test]
    fn table_rows() {
        let rows = table(1, 3, &ExtendedScalar::Infinity).unwrap();
        let two = rows.iter().find(|r| r.lambda == vec![2]).unwrap();
        assert_eq!(two.class, "singular");
        assert_eq!(two.sharp_chain, vec![vec![2], vec![]]);
        assert!(rows.iter().any(|r| r.class == "regular"));
    }
}
