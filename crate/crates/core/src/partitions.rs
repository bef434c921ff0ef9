//! Young diagrams in the hook `H(1, n)` and the combinatorics of translation
//! functors: eigenvalues, singular diagrams, the sharp operation and the sets
//! `F_λ(μ)` and `π_λ`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::ring::{int, rat, Rational};
use crate::arith::AffineForm;
use crate::error::{Error, Result};

/// A partition, stored as its nonzero parts in weakly decreasing order.
///
/// The derived order is lexicographic on the parts, which gives the canonical
/// order for every set of diagrams printed by the crate.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// The box in row `row` and column `col`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    /// Validates and builds a partition; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a literal; panics if the parts are invalid.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("rows are 1-based");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `λ'_j`, the height of column `j`.
    pub fn column(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= j).count()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell { row: i + 1, col: j }))
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Boxes that can be added, top to bottom.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell { row: i, col: self.part(i) + 1 })
            .collect()
    }

    /// Boxes that can be removed, top to bottom.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell { row: i, col: self.part(i) })
            .collect()
    }

    /// Adds a box at the end of row `row`; `None` if the result is not a partition.
    pub fn add_to_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.part(row - 1) == self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last box of row `row`; `None` if the result is not a partition.
    pub fn remove_from_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) == self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// The single box by which `self` and `other` differ, if they differ by one.
    pub fn difference_cell(&self, other: &Partition) -> Option<Cell> {
        let (big, small) = if self.size() == other.size() + 1 {
            (self, other)
        } else if other.size() == self.size() + 1 {
            (other, self)
        } else {
            return None;
        };
        let rows = big.len().max(small.len());
        let mut cell = None;
        for i in 1..=rows {
            match big.part(i) as isize - small.part(i) as isize {
                0 => {}
                1 if cell.is_none() => cell = Some(Cell { row: i, col: big.part(i) }),
                _ => return None,
            }
        }
        cell
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `s(λ) = λ_2 + λ_3 + …`.
    pub fn s_stat(&self) -> usize {
        self.parts.iter().skip(1).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{}` in partition", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Parameters of the deformed operator: `m`, `n`, with `q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamCtx {
    pub m: usize,
    pub n: usize,
}

impl ParamCtx {
    pub fn new(m: usize, n: usize) -> Self {
        ParamCtx { m, n }
    }

    /// `h = -k m - n - p/2`, always derived, never stored.
    pub fn h(&self) -> AffineForm {
        AffineForm::new(-int(self.m as i64), rat(-1, 2), -int(self.n as i64))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramClass {
    Regular,
    Singular { j: usize },
}

impl DiagramClass {
    pub fn is_singular(&self) -> bool {
        matches!(self, DiagramClass::Singular { .. })
    }
}

/// `λ_{m+1} ≤ n`.
pub fn in_hook(lambda: &Partition, m: usize, n: usize) -> bool {
    lambda.part(m + 1) <= n
}

/// The sets `S⁺(λ)` and `S⁻(λ)`, unrestricted and intersected with `H(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddRemove {
    pub plus: Vec<Partition>,
    pub minus: Vec<Partition>,
    pub plus_all: Vec<Partition>,
    pub minus_all: Vec<Partition>,
}

pub fn add_remove_sets(lambda: &Partition, m: usize, n: usize) -> AddRemove {
    let mut plus_all: Vec<Partition> = lambda
        .addable_cells()
        .into_iter()
        .filter_map(|c| lambda.add_to_row(c.row))
        .collect();
    let mut minus_all: Vec<Partition> = lambda
        .removable_cells()
        .into_iter()
        .filter_map(|c| lambda.remove_from_row(c.row))
        .collect();
    plus_all.sort();
    minus_all.sort();
    let plus = plus_all.iter().filter(|mu| in_hook(mu, m, n)).cloned().collect();
    let minus = minus_all.iter().filter(|mu| in_hook(mu, m, n)).cloned().collect();
    AddRemove { plus, minus, plus_all, minus_all }
}

/// `S(λ) ∩ H(1, n)`, including `λ` itself, sorted.
pub fn s_set(lambda: &Partition, n: usize) -> Vec<Partition> {
    let sets = add_remove_sets(lambda, 1, n);
    let mut out: Vec<Partition> = sets.plus.into_iter().chain(sets.minus).collect();
    if in_hook(lambda, 1, n) {
        out.push(lambda.clone());
    }
    out.sort();
    out
}

/// `c_λ` as an affine form in `(k, p)`, summed over boxes (`m = 1` form).
pub fn eigenvalue(lambda: &Partition, n: usize) -> AffineForm {
    let mut c = AffineForm::zero();
    for cell in lambda.cells() {
        let box_term = AffineForm::new(
            int(2 * (cell.row as i64 - 1)),
            int(-1),
            int(2 * (cell.col as i64 - 1) + 1 - 2 * n as i64),
        );
        c = c.add(&box_term);
    }
    c
}

/// `c_λ = 2n(λ') + 2k n(λ) + |λ|(2h + 2k + 1)` for general `m`.
pub fn eigenvalue_general(lambda: &Partition, ctx: &ParamCtx) -> AffineForm {
    let two_h_2k_1 = ctx.h().scale(&int(2)).add(&AffineForm::k().scale(&int(2))).add_const(&int(1));
    two_h_2k_1
        .scale(&int(lambda.size() as i64))
        .add(&AffineForm::k().scale(&int(2 * lambda.n_stat() as i64)))
        .add_const(&int(2 * lambda.conjugate().n_stat() as i64))
}

/// `c̃_λ = Σ (2j - 2i + 1 - 2n)`, the value of `c_λ` at `k = -1, p = 0`.
pub fn tilde_c(lambda: &Partition, n: usize) -> i64 {
    lambda
        .cells()
        .map(|c| 2 * c.col as i64 - 2 * c.row as i64 + 1 - 2 * n as i64)
        .sum()
}

/// Every `1 ≤ j ≤ n` with `λ_1 - n = λ'_j + n - j`.
pub fn singular_witnesses(lambda: &Partition, n: usize) -> Vec<usize> {
    let lhs = lambda.part(1) as i64 - n as i64;
    (1..=n)
        .filter(|&j| lhs == lambda.column(j) as i64 + n as i64 - j as i64)
        .collect()
}

/// Regular, or singular with the smallest witness `j`.
///
/// `λ'_j - j` is strictly decreasing in `j`, so there is never more than one
/// witness; [`witness`] still checks.
pub fn classify(lambda: &Partition, n: usize) -> DiagramClass {
    match singular_witnesses(lambda, n).first() {
        Some(&j) => DiagramClass::Singular { j },
        None => DiagramClass::Regular,
    }
}

/// The unique witness of a singular diagram.
pub fn witness(lambda: &Partition, n: usize) -> Result<usize> {
    let ws = singular_witnesses(lambda, n);
    match ws.as_slice() {
        [] => Err(Error::NotSingular(lambda.clone())),
        [j] => Ok(*j),
        _ => Err(Error::AmbiguousWitness { lambda: lambda.clone(), witnesses: ws }),
    }
}

/// `r(λ) = |{ r : j ≤ r ≤ n, λ'_r = λ'_j }|`.
pub fn r_of(lambda: &Partition, n: usize) -> Result<usize> {
    let j = witness(lambda, n)?;
    let h = lambda.column(j);
    Ok((j..=n).filter(|&r| lambda.column(r) == h).count())
}

/// `λ♯`: delete `r(λ)` boxes from the first row and `r(λ)` boxes from row `λ'_j`.
pub fn sharp(lambda: &Partition, n: usize) -> Result<Partition> {
    let j = witness(lambda, n)?;
    let r = r_of(lambda, n)?;
    let row = lambda.column(j);
    let mut parts = lambda.parts().to_vec();
    for i in [1, row] {
        parts[i - 1] = parts[i - 1]
            .checked_sub(r)
            .ok_or_else(|| Error::Precondition(format!("sharp of {lambda} underflows row {i}")))?;
    }
    let mu = Partition::new(parts)
        .map_err(|_| Error::Precondition(format!("sharp of {lambda} is not a partition")))?;
    debug_assert_eq!(tilde_c(&mu, n), tilde_c(lambda, n));
    Ok(mu)
}

/// `X_λ = [λ, λ♯, λ♯♯, …]`, stopping at the first regular diagram.
pub fn sharp_chain(lambda: &Partition, n: usize) -> Result<Vec<Partition>> {
    let j = witness(lambda, n)?;
    let expected = lambda.column(j) + 1;
    let mut chain = vec![lambda.clone()];
    let mut cur = lambda.clone();
    while classify(&cur, n).is_singular() {
        cur = sharp(&cur, n)?;
        chain.push(cur.clone());
        if chain.len() > expected {
            break;
        }
    }
    if chain.len() != expected {
        return Err(Error::LengthMismatch { partition: lambda.clone(), expected, found: chain.len() });
    }
    Ok(chain)
}

/// `F_λ(μ) = { ν ∈ S(μ) : c̃_ν = c̃_λ }`, by filtering `S(μ) ∩ H(1, n)`.
pub fn f_set(lambda: &Partition, mu: &Partition, n: usize) -> Vec<Partition> {
    let target = tilde_c(lambda, n);
    s_set(mu, n).into_iter().filter(|nu| tilde_c(nu, n) == target).collect()
}

/// The first row shortened by one box, if that is a partition.
pub fn drop_first_row_box(lambda: &Partition) -> Option<Partition> {
    lambda.remove_from_row(1)
}

/// Column height in the `n` columns of the hook; column `n + 1` and beyond
/// only meet the first row and count as empty.
fn hook_column(lambda: &Partition, j: usize, n: usize) -> usize {
    if j > n {
        0
    } else {
        lambda.column(j)
    }
}

/// Closed forms for `F_λ(μ)` from the combinatorial theorem, when one of its
/// four hypotheses applies to the pair; `None` otherwise.
pub fn f_set_closed_form(lambda: &Partition, mu: &Partition, n: usize) -> Option<Vec<Partition>> {
    // 1) λ_1, μ_1 ≤ n and μ ∈ S⁻(λ)
    if lambda.part(1) <= n && mu.part(1) <= n && lambda.difference_cell(mu).is_some() && lambda.size() == mu.size() + 1
    {
        return Some(vec![lambda.clone()]);
    }
    let first_row_minus = drop_first_row_box(lambda);
    if lambda.part(1) > n && first_row_minus.as_ref() == Some(mu) {
        return Some(match classify(lambda, n) {
            // 2)
            DiagramClass::Regular => vec![lambda.clone()],
            // 3)
            DiagramClass::Singular { j } => {
                if hook_column(lambda, j + 1, n) == lambda.column(j) {
                    vec![lambda.clone()]
                } else {
                    let nu = mu.remove_from_row(mu.column(j))?;
                    let mut out = vec![lambda.clone(), nu];
                    out.sort();
                    out
                }
            }
        });
    }
    // 4) the argument is μ♯ for the singular diagram μ = λ minus a first-row box
    if let Some(parent) = first_row_minus {
        if classify(&parent, n).is_singular() && sharp(&parent, n).ok().as_ref() == Some(mu) {
            return Some(match classify(lambda, n) {
                DiagramClass::Regular => vec![],
                DiagramClass::Singular { .. } => vec![sharp(lambda, n).ok()?],
            });
        }
    }
    None
}

/// `π_λ`, evaluated from its recursive definition.
pub fn pi_set(lambda: &Partition, n: usize) -> Vec<Partition> {
    if lambda.part(1) <= n {
        return vec![lambda.clone()];
    }
    let mu = drop_first_row_box(lambda).expect("λ_1 > n ≥ λ_2 in the hook");
    let mut out: Vec<Partition> = pi_set(&mu, n).iter().flat_map(|nu| f_set(lambda, nu, n)).collect();
    out.sort();
    out.dedup();
    out
}

/// `π_λ` from its closed form: `{λ}` or `{λ, λ♯}`.
pub fn pi_set_closed_form(lambda: &Partition, n: usize) -> Vec<Partition> {
    let mut out = vec![lambda.clone()];
    if lambda.part(1) > n && classify(lambda, n).is_singular() {
        out.push(sharp(lambda, n).expect("singular"));
    }
    out.sort();
    out
}

/// Whether `μ ≠ ν` in `S(λ)` are predicted to share `c̃`: one adds a box
/// `(i, j)`, the other removes `(ĩ, j̃)`, and `j - i + j̃ - ĩ = 2n - 1`.
pub fn collision_predicted(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> bool {
    let (add, rem) = if mu.size() == lambda.size() + 1 && nu.size() + 1 == lambda.size() {
        (mu, nu)
    } else if nu.size() == lambda.size() + 1 && mu.size() + 1 == lambda.size() {
        (nu, mu)
    } else {
        return false;
    };
    let (Some(a), Some(r)) = (add.difference_cell(lambda), rem.difference_cell(lambda)) else {
        return false;
    };
    a.col as i64 - a.row as i64 + r.col as i64 - r.row as i64 == 2 * n as i64 - 1
}

/// All partitions of `size`, in decreasing lexicographic order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

/// Diagrams of `H(1, n)` with exactly `size` boxes.
pub fn hook_partitions(n: usize, size: usize) -> Vec<Partition> {
    partitions_of(size).into_iter().filter(|l| in_hook(l, 1, n)).collect()
}

/// Diagrams of `H(1, n)` with at most `max_size` boxes, by size.
pub fn hook_partitions_up_to(n: usize, max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| hook_partitions(n, s)).collect()
}

/// `c̃` of an affine eigenvalue, used to cross-check the integer formula.
pub fn affine_at_center(form: &AffineForm) -> i64 {
    let v = form.eval(&int(-1), &Rational::zero());
    assert!(v.is_integer());
    v.to_integer().try_into().expect("small eigenvalue")
}
