//! Acceptance suite: every criterion runs at zero tolerance over
//! `n = 1, |λ| ≤ 7` and `n = 2, |λ| ≤ 6`, and prints one PASS/FAIL line.
//!
//! Criterion 8 is known to fail for singular λ whose witness column has
//! height one: there `SI_λ = (-1)^s sch E(λ)` with no `λ♯` term. The process
//! exit status tolerates exactly that failure and nothing else. The
//! `λ'_j > 1` cases must pass, every `λ'_j = 1` case must fail, and the
//! split identity must hold everywhere.

use std::time::{Duration, Instant};

use superjacobi::arith::ring::{int, rat};
use superjacobi::verify::{
    blowup_suite, character_suite, comb_suite, eigen_suite, infinity_suite, pieri_suite, projective_split_suite,
    projective_suite,
    regularity_suite, special_point_suite, t_independence_suite, SuiteReport, Workspace,
};

/// Criteria whose failure is documented as unattainable.
const KNOWN_UNATTAINABLE: [u32; 1] = [8];

const RANGES: [(usize, usize); 2] = [(1, 7), (2, 6)];

type Suite = fn(&Workspace, usize) -> SuiteReport;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    suite: Suite,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "eigenfunction suite at t = 1/2, symbolic k",
            budget: secs(120),
            suite: |ws, m| eigen_suite(ws, m, &[rat(1, 2)]),
        },
        Criterion {
            id: 2,
            title: "Pieri suite at t = 1/2, symbolic k",
            budget: secs(120),
            suite: |ws, m| pieri_suite(ws, m, &[rat(1, 2)]),
        },
        Criterion {
            id: 3,
            title: "combinatorics: F sets, sharp chains, pi sets, collision law",
            budget: secs(10),
            suite: |ws, m| comb_suite(ws.n(), m),
        },
        Criterion {
            id: 4,
            title: "blow-up evaluator against substitution, 1000 random cases",
            budget: secs(10),
            suite: |ws, _| if ws.n() == 1 { blowup_suite(1000, 20240917) } else { SuiteReport::new("blowup") },
        },
        Criterion {
            id: 5,
            title: "I_lambda pole-free at k = -1 for t = 1/2, 5/3; SI independent of t",
            budget: secs(60),
            suite: |ws, m| regularity_suite(ws, m, &[rat(1, 2), rat(5, 3)]),
        },
        Criterion {
            id: 6,
            title: "SJ(inf) = (-1)^s sch E",
            budget: secs(120),
            suite: |ws, m| infinity_suite(ws, m, &[rat(1, 2)]),
        },
        Criterion {
            id: 7,
            title: "singular SJ(l) = (-1)^s sch L",
            budget: secs(120),
            suite: special_point_suite,
        },
        Criterion {
            id: 8,
            title: "singular SI = (-1)^s sch E(lambda) + (-1)^s# sch E(lambda#)",
            budget: secs(60),
            suite: |ws, m| projective_suite(ws, m, &rat(1, 2), |_| true),
        },
        Criterion {
            id: 9,
            title: "Euler Pieri rule, Kac decomposition, alternating expansion, typicality",
            budget: secs(60),
            suite: |ws, m| character_suite(ws.n(), m),
        },
        Criterion {
            id: 10,
            title: "t-independence (1/2, 7, inf) and formula route at t = 7/3",
            budget: secs(60),
            suite: |ws, m| t_independence_suite(ws, m, &[rat(1, 2), int(7)], &rat(7, 3)),
        },
    ]
}

fn run(workspaces: &[(Workspace, usize)], suite: impl Fn(&Workspace, usize) -> SuiteReport + Sync) -> SuiteReport {
    let (a, b) = rayon::join(
        || suite(&workspaces[0].0, workspaces[0].1),
        || suite(&workspaces[1].0, workspaces[1].1),
    );
    let mut rep = a;
    rep.merge(b);
    rep
}

/// Pins down the shape of the criterion 8 failure. Returns false if anything
/// differs from the documented conflict.
fn criterion_8_conflict(workspaces: &[(Workspace, usize)]) -> bool {
    let t = rat(1, 2);
    let tall = run(workspaces, |ws, m| projective_suite(ws, m, &t, |l| l > 1));
    let short = run(workspaces, |ws, m| projective_suite(ws, m, &t, |l| l == 1));
    let split = run(workspaces, |ws, m| projective_split_suite(ws, m, &t));
    let tall_ok = tall.passed() && tall.checked > 0;
    let short_ok = short.degenerate.is_empty() && short.checked > 0 && short.failures.len() == short.checked;
    let split_ok = split.passed() && split.checked > 0;
    println!(
        "    lambda'_j > 1, two-term identity: {} [{} checks, {} failed]",
        if tall_ok { "holds" } else { "BROKEN" },
        tall.checked,
        tall.failures.len()
    );
    println!(
        "    lambda'_j = 1, two-term identity: {} [{} checks, {} failed]",
        if short_ok { "fails on every case (documented)" } else { "UNEXPECTED" },
        short.checked,
        short.failures.len()
    );
    println!(
        "    split identity (E(lambda#) term only when lambda'_j > 1): {} [{} checks, {} failed]",
        if split_ok { "holds" } else { "BROKEN" },
        split.checked,
        split.failures.len()
    );
    tall_ok && short_ok && split_ok
}

fn main() {
    let workspaces: Vec<(Workspace, usize)> = RANGES.iter().map(|&(n, m)| (Workspace::new(n), m)).collect();
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let rep = run(&workspaces, c.suite);
        let elapsed = start.elapsed();
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        let over = if elapsed > c.budget { " (over budget)" } else { "" };
        println!(
            "criterion {:>2} {status}: {} [{} checks, {} failed, {} degenerate, {:.1?}{over}]",
            c.id,
            c.title,
            rep.checked,
            rep.failures.len(),
            rep.degenerate.len(),
            elapsed
        );
        for f in rep.failures.iter().chain(&rep.degenerate).take(12) {
            println!("    {f}");
        }
        if !rep.passed() {
            failed.push(c.id);
        }
    }
    println!("failed criteria: {failed:?}");
    let conflict_ok = !failed.contains(&8) || criterion_8_conflict(&workspaces);
    let unexpected: Vec<u32> = failed.iter().copied().filter(|id| !KNOWN_UNATTAINABLE.contains(id)).collect();
    let vanished: Vec<u32> = KNOWN_UNATTAINABLE.iter().copied().filter(|id| !failed.contains(id)).collect();
    if !vanished.is_empty() {
        println!("documented failures now pass, update the ledger: {vanished:?}");
    }
    if !unexpected.is_empty() || !vanished.is_empty() || !conflict_ok {
        println!("acceptance: unexpected outcome");
        std::process::exit(1);
    }
    println!("acceptance: only documented failures {KNOWN_UNATTAINABLE:?}");
}
