//! Deciding whether a triangulation is regular (induced by a strictly
//! convex lift) by exact linear feasibility.
//!
//! Every interior edge gives one homogeneous strict inequality `c·h > 0`
//! in the heights. By scaling, the strict system is feasible iff `c·h ≥ 1`
//! is. Adding an affine function to `h` changes no fold, so the three
//! vertices of the first triangle are pinned at height 0. The reduced
//! system is solved by Fourier–Motzkin elimination with Chernikov's
//! redundancy rule; if the intermediate systems grow past a fixed budget
//! the same system is handed to an exact simplex method instead.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{fold_form, Triangulation};
use crate::exact::Rat;

/// Outcome of the regularity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    /// Heights (one per vertex) that bend strictly upward across every
    /// interior edge.
    Regular(Vec<Rat>),
    NotRegular,
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }
}

const CONSTRAINT_BUDGET: usize = 4000;

/// `Σ coeffs[j]·x_j ≥ rhs` over the rationals, with the set of original
/// constraints it was derived from.
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
    history: Vec<u64>,
}

impl Ineq {
    fn normalize(&mut self) {
        let mut g = self.rhs.abs();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.rhs /= &g;
        }
    }

    fn history_len(&self) -> u32 {
        self.history.iter().map(|w| w.count_ones()).sum()
    }
}

fn union(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

pub fn is_regular(tri: &Triangulation) -> Regularity {
    let (rows, n) = constraint_rows(tri);
    let pinned = tri.triangles()[0];
    let free: Vec<usize> = (0..n).filter(|v| !pinned.contains(v)).collect();
    let witness = match fourier_motzkin(&rows, &free) {
        FmOutcome::Feasible(x) => Some(expand(&x, &free, n)),
        FmOutcome::Infeasible => None,
        FmOutcome::TooLarge => simplex_feasible(&rows, n),
    };
    match witness {
        Some(h) if tri.heights_are_convex(&h) => Regularity::Regular(h),
        Some(_) => panic!("regularity witness failed exact verification"),
        None => Regularity::NotRegular,
    }
}

/// One row per interior edge over all `n` vertex heights.
fn constraint_rows(tri: &Triangulation) -> (Vec<Vec<BigInt>>, usize) {
    let n = tri.vertices().len();
    let rows = tri
        .interior_edges()
        .iter()
        .map(|e| {
            let mut row = vec![BigInt::zero(); n];
            for (c, v) in fold_form(tri.vertices(), e) {
                row[v] += BigInt::from(c);
            }
            row
        })
        .collect();
    (rows, n)
}

fn expand(x: &[Rat], free: &[usize], n: usize) -> Vec<Rat> {
    let mut h = vec![Rat::zero(); n];
    for (value, &v) in x.iter().zip(free) {
        h[v] = value.clone();
    }
    h
}

enum FmOutcome {
    Feasible(Vec<Rat>),
    Infeasible,
    TooLarge,
}

/// Solves `rows|free · x ≥ 1`.
fn fourier_motzkin(rows: &[Vec<BigInt>], free: &[usize]) -> FmOutcome {
    let words = rows.len().div_ceil(64).max(1);
    let mut system: Vec<Ineq> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut history = vec![0u64; words];
            history[i / 64] |= 1 << (i % 64);
            let mut q = Ineq {
                coeffs: free.iter().map(|&v| row[v].clone()).collect(),
                rhs: BigInt::one(),
                history,
            };
            q.normalize();
            q
        })
        .collect();
    let nvars = free.len();
    let mut remaining: Vec<usize> = (0..nvars).collect();
    // Systems before each elimination, for back-substitution.
    let mut stages: Vec<(usize, Vec<Ineq>)> = Vec::new();
    let mut eliminated = 0u32;
    while let Some(pos) = pick_variable(&system, &remaining) {
        let var = remaining.remove(pos);
        eliminated += 1;
        let (mut lower, mut upper, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for q in &system {
            match q.coeffs[var].sign() {
                num_bigint::Sign::Plus => lower.push(q),
                num_bigint::Sign::Minus => upper.push(q),
                num_bigint::Sign::NoSign => keep.push(q.clone()),
            }
        }
        for p in &lower {
            for q in &upper {
                let history = union(&p.history, &q.history);
                let mut combo = Ineq {
                    coeffs: Vec::new(),
                    rhs: BigInt::zero(),
                    history,
                };
                // Chernikov: a combination of more than (eliminated + 1)
                // originals is implied by the others.
                if combo.history_len() > eliminated + 1 {
                    continue;
                }
                let (a, b) = (&p.coeffs[var], -&q.coeffs[var]);
                combo.coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x * &b + y * a)
                    .collect();
                combo.rhs = &p.rhs * &b + &q.rhs * a;
                combo.normalize();
                keep.push(combo);
            }
        }
        let next = dedupe(keep);
        if next.len() > CONSTRAINT_BUDGET {
            return FmOutcome::TooLarge;
        }
        stages.push((var, std::mem::replace(&mut system, next)));
    }
    if system.iter().any(|q| q.rhs.is_positive()) {
        return FmOutcome::Infeasible;
    }
    let mut x: Vec<Option<Rat>> = vec![None; nvars];
    for (var, sys) in stages.into_iter().rev() {
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for q in &sys {
            let c = &q.coeffs[var];
            if c.is_zero() {
                continue;
            }
            // c·x_var ≥ rhs − Σ_{other} coeffs·x
            let mut rest = BigRational::from_integer(q.rhs.clone());
            for (j, cj) in q.coeffs.iter().enumerate() {
                if j != var && !cj.is_zero() {
                    let xj = x[j].as_ref().expect("later variables are already fixed");
                    rest -= BigRational::from_integer(cj.clone()) * xj;
                }
            }
            let bound = rest / BigRational::from_integer(c.clone());
            if c.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        x[var] = Some(lo.or(hi).unwrap_or_else(Rat::zero));
    }
    FmOutcome::Feasible(x.into_iter().map(|v| v.unwrap_or_else(Rat::zero)).collect())
}

/// Variable with the fewest new combinations; `None` when every remaining
/// variable is absent from the system.
fn pick_variable(system: &[Ineq], remaining: &[usize]) -> Option<usize> {
    remaining
        .iter()
        .enumerate()
        .map(|(pos, &var)| {
            let p = system.iter().filter(|q| q.coeffs[var].is_positive()).count();
            let m = system.iter().filter(|q| q.coeffs[var].is_negative()).count();
            (p * m, pos)
        })
        .min()
        .map(|(_, pos)| pos)
}

/// Drops trivially satisfied rows and, among rows with the same left-hand
/// side, keeps the one with the largest right-hand side.
fn dedupe(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut best: HashMap<Vec<BigInt>, Ineq> = HashMap::new();
    let mut order = Vec::new();
    for q in rows {
        if q.coeffs.iter().all(Zero::is_zero) && !q.rhs.is_positive() {
            continue;
        }
        match best.get_mut(&q.coeffs) {
            Some(existing) => {
                if q.rhs > existing.rhs {
                    *existing = q;
                }
            }
            None => {
                order.push(q.coeffs.clone());
                best.insert(q.coeffs.clone(), q);
            }
        }
    }
    order.into_iter().map(|k| best.remove(&k).unwrap()).collect()
}

/// Phase-one simplex for `rows · h ≥ 1, h ≥ 0` (a constant may be added
/// to any solution, so the sign restriction loses nothing). Bland's rule
/// guarantees termination.
fn simplex_feasible(rows: &[Vec<BigInt>], n: usize) -> Option<Vec<Rat>> {
    let m = rows.len();
    // Columns: h (n), surplus s (m), artificial a (m); rhs last.
    let cols = n + 2 * m;
    let mut t: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = vec![Rat::zero(); cols + 1];
            for (j, c) in row.iter().enumerate() {
                r[j] = BigRational::from_integer(c.clone());
            }
            r[n + i] = -Rat::one();
            r[n + m + i] = Rat::one();
            r[cols] = Rat::one();
            r
        })
        .collect();
    let mut basis: Vec<usize> = (0..m).map(|i| n + m + i).collect();
    // Objective: minimize Σ a. Reduced costs for the non-artificial
    // columns are −Σ rows.
    let mut cost = vec![Rat::zero(); cols + 1];
    for row in &t {
        for j in 0..n + m {
            cost[j] -= &row[j];
        }
        cost[cols] -= &row[cols];
    }
    loop {
        let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<(Rat, usize, usize)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((r, _, b)) => ratio < *r || (ratio == *r && basis[i] < *b),
                };
                if better {
                    leave = Some((ratio, i, basis[i]));
                }
            }
        }
        let (_, pr, _) = leave?;
        let pivot = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v /= &pivot;
        }
        let prow = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&prow) {
            *v -= &f * p;
        }
        basis[pr] = enter;
    }
    if !cost[cols].is_zero() {
        return None;
    }
    let mut h = vec![Rat::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            h[b] = t[i][cols].clone();
        }
    }
    Some(h)
}
