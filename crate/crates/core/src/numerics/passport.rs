//! Passports: the ramification partitions of `p` over its finite critical
//! values, all-ones partitions omitted.

use serde::{Deserialize, Serialize};

use super::laurent::{all_critical_points, CriticalDatum, LaurentPoly};
use super::roots::union_find_groups;
use super::{NumericsError, Tolerances};
use crate::lattice::KiteSpec;

/// A multiset of partitions of `degree`, each sorted in decreasing order,
/// the list itself sorted in decreasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Passport {
    pub degree: u64,
    pub partitions: Vec<Vec<u64>>,
}

impl Passport {
    fn from_parts(degree: u64, parts: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut partitions: Vec<Vec<u64>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable_by(|a, b| b.cmp(a));
                p
            })
            .filter(|p| p.iter().any(|&x| x > 1))
            .collect();
        partitions.sort_unstable_by(|a, b| b.cmp(a));
        Passport { degree, partitions }
    }

    /// `Σ (degree − number of parts)` over all listed partitions; omitted
    /// all-ones partitions contribute nothing.
    pub fn ramification_total(&self) -> u64 {
        self.partitions
            .iter()
            .map(|p| self.degree - p.len() as u64)
            .sum()
    }
}

/// Total finite ramification of a degree-`k + k'` Laurent polynomial:
/// `k + k'` when `k ≥ 1` (the two poles absorb `k + k' − 2`), and
/// `k' − 1` for a polynomial (the pole at ∞ absorbs `k' − 1`).
pub fn expected_ramification(k: u64, k_prime: u64) -> u64 {
    if k >= 1 {
        k + k_prime
    } else {
        k_prime - 1
    }
}

fn block(degree: u64, twos: u64) -> Vec<u64> {
    let mut v = vec![2; twos as usize];
    v.resize((degree - twos) as usize, 1);
    v
}

fn group_values(crit: &[CriticalDatum], tau: f64) -> Vec<Vec<usize>> {
    union_find_groups(crit.len(), |i, j| {
        let (u, v) = (crit[i].value, crit[j].value);
        (u - v).norm() <= tau * u.norm().max(v.norm()).max(1.0)
    })
}

/// Passport of `p`.
///
/// Two critical values `u, v` are grouped when
/// `|u − v| ≤ τ_val · max(1, |u|, |v|)`; the grouping is recomputed at ten
/// times that width and any difference is reported as
/// [`NumericsError::ToleranceConflict`].
pub fn passport(p: &LaurentPoly, tol: &Tolerances) -> Result<Passport, NumericsError> {
    let crit = all_critical_points(p, tol)?;
    let d = p.degree();
    let groups = group_values(&crit, tol.val);
    let wide = group_values(&crit, 10.0 * tol.val);
    if groups.len() != wide.len() {
        return Err(NumericsError::ToleranceConflict { at_tol: groups.len(), at_ten: wide.len() });
    }
    let mut parts = Vec::new();
    for g in &groups {
        let mut fiber: Vec<u64> = g.iter().map(|&i| crit[i].multiplicity + 1).collect();
        let used: u64 = fiber.iter().sum();
        if used > d {
            return Err(NumericsError::ToleranceConflict { at_tol: groups.len(), at_ten: wide.len() });
        }
        fiber.resize(fiber.len() + (d - used) as usize, 1);
        parts.push(fiber);
    }
    let passport = Passport::from_parts(d, parts);
    assert_eq!(
        passport.ramification_total(),
        expected_ramification(p.k(), p.k_prime()),
        "ramification bookkeeping failed for {p:?}"
    );
    Ok(passport)
}

/// Passport of the Laurent polynomial of a generic curve with nodal
/// partition `(δ₁, δ₂)` on the given kite: one partition with `δ₁` twos,
/// one with `δ₂` twos, and one `{2, 1, …}` for every remaining simple
/// critical value.
pub fn expected_passport(delta1: u64, delta2: u64, kite: &KiteSpec) -> Result<Passport, NumericsError> {
    let d = kite.height();
    let total = expected_ramification(kite.k, kite.k_prime);
    let delta = delta1 + delta2;
    if delta > d - 1 || delta > total {
        return Err(NumericsError::InvalidPartition(format!(
            "δ₁ + δ₂ = {delta} exceeds k + k' − 1 = {}",
            d - 1
        )));
    }
    for b in [delta1, delta2] {
        if 2 * b > d {
            return Err(NumericsError::InvalidPartition(format!(
                "a block of {b} twos does not fit in a partition of {d}"
            )));
        }
    }
    let singles = (0..total - delta).map(|_| block(d, 1));
    Ok(Passport::from_parts(
        d,
        [block(d, delta1), block(d, delta2)].into_iter().chain(singles),
    ))
}
