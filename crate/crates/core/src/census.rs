//! Sublattice censuses: the lattices `M` with `∂Δ ∩ M = ∂Δ ∩ ℤ²`, the
//! lower bounds they give on the number of components of Severi
//! varieties, and the multiplicity-weighted kite count `#_{k,k',g}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{divisors, gcd, num_divisors};
use crate::lattice::{
    delta_m, smith_2x2, IntPoint, KiteSpec, LatticeError, LatticePolygon, Region, Sublattice,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("genus {g} is out of range (allowed {min}..={max})")]
    GenusOutOfRange { g: u64, min: u64, max: u64 },
    #[error("even-index sublattice {lattice} admitted although δ(Δ, g) < g + 1")]
    EvenIndexInconsistent { lattice: Sublattice },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl CensusError {
    pub fn code(&self) -> &'static str {
        match self {
            CensusError::GenusOutOfRange { .. } => "GenusOutOfRange",
            CensusError::EvenIndexInconsistent { .. } => "EvenIndexInconsistent",
            CensusError::Lattice(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    #[serde(flatten)]
    pub lattice: Sublattice,
    #[serde(rename = "delta_M")]
    pub delta_m: i64,
    pub kappas: Vec<u64>,
    pub multiplicity: u64,
}

impl CensusEntry {
    pub fn index(&self) -> u64 {
        self.lattice.index()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub polygon: LatticePolygon,
    pub genus: u64,
    pub entries: Vec<CensusEntry>,
    pub total: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const IRREDUCIBLE_NOTE: &str = "genus 0: the Severi variety is irreducible";

fn irreducible_report(poly: &LatticePolygon) -> Census {
    Census {
        polygon: poly.clone(),
        genus: 0,
        entries: vec![CensusEntry {
            lattice: Sublattice::FULL,
            delta_m: delta_m(poly, &Sublattice::FULL, 0),
            kappas: Vec::new(),
            multiplicity: 1,
        }],
        total: 1,
        note: Some(IRREDUCIBLE_NOTE.to_string()),
    }
}

/// The lattice generated by the boundary lattice points of `poly`.
pub fn boundary_lattice(poly: &LatticePolygon) -> Sublattice {
    Sublattice::from_generators(&poly.boundary_cycle())
        .expect("boundary of a two-dimensional polygon spans the plane")
}

/// All lattices between the boundary lattice `L_∂` and ℤ², sorted by
/// index and then by normal form.
///
/// The quotient `ℤ²/L_∂` is brought to Smith form `ℤ/s₁ × ℤ/s₂`; every
/// subgroup is generated by at most two elements, so running over all
/// pairs of elements and lifting back finds every intermediate lattice.
pub fn intermediate_lattices(poly: &LatticePolygon) -> Vec<Sublattice> {
    let l = boundary_lattice(poly);
    let (u, [s1, s2]) = smith_2x2(l.basis_columns());
    // u is unimodular; u⁻¹ is its adjugate divided by det u = ±1.
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    let lift = |a: i128, b: i128| -> IntPoint {
        let x = det * (u[1][1] * a - u[0][1] * b);
        let y = det * (-u[1][0] * a + u[0][0] * b);
        IntPoint::new(x as i64, y as i64)
    };
    let base = [lift(s1, 0), lift(0, s2)];
    let elements: Vec<(i128, i128)> =
        (0..s1).flat_map(|a| (0..s2).map(move |b| (a, b))).collect();
    let mut found = BTreeSet::new();
    let mut add = |extra: &[(i128, i128)]| {
        let mut gens = base.to_vec();
        gens.extend(extra.iter().map(|&(a, b)| lift(a, b)));
        found.insert(Sublattice::from_generators(&gens).expect("contains L_∂"));
    };
    if s1 == 1 {
        for &e in &elements {
            add(&[e]);
        }
    } else {
        for (i, &e) in elements.iter().enumerate() {
            for &f in &elements[i..] {
                add(&[e, f]);
            }
        }
    }
    found.into_iter().collect()
}

/// Lower bound from the census of intermediate lattices `M` with at least
/// `g` interior points: every such lattice contributes one component.
pub fn general_lower_bound(poly: &LatticePolygon, g: u64) -> Result<Census, CensusError> {
    if g == 0 {
        return Ok(irreducible_report(poly));
    }
    let max = poly.interior_count();
    if g > max {
        return Err(CensusError::GenusOutOfRange { g, min: 1, max });
    }
    let entries: Vec<CensusEntry> = intermediate_lattices(poly)
        .into_iter()
        .filter_map(|lattice| {
            let delta = delta_m(poly, &lattice, g);
            (delta >= 0).then(|| CensusEntry {
                lattice,
                delta_m: delta,
                kappas: Vec::new(),
                multiplicity: 1,
            })
        })
        .collect();
    let total = entries.len() as u64;
    Ok(Census { polygon: poly.clone(), genus: g, entries, total, note: None })
}

fn kite_divisor_bound(kite: &KiteSpec) -> u64 {
    gcd(kite.height() as i128, 2 * kite.k as i128) as u64
}

/// The lattices `⟨(1, k), (0, r)⟩` for the common divisors `r` of
/// `k + k'` and `2k`, in increasing order of `r`.
pub fn kite_sublattices(kite: &KiteSpec) -> Vec<(u64, Sublattice)> {
    divisors(kite_divisor_bound(kite))
        .into_iter()
        .map(|r| {
            let lat = Sublattice::from_generators(&[
                IntPoint::new(1, kite.k as i64),
                IntPoint::new(0, r as i64),
            ])
            .expect("independent generators");
            (r, lat)
        })
        .collect()
}

fn check_kite_genus(kite: &KiteSpec, g: u64, min: u64) -> Result<(), CensusError> {
    let max = kite.height() - 1;
    if g < min || g > max {
        return Err(CensusError::GenusOutOfRange { g, min, max });
    }
    Ok(())
}

/// Signature values allowed for a kite lattice of index `r` with
/// deficiency `delta`.
fn admissible_kappas(r: u64, delta: i64, g: u64) -> Vec<u64> {
    if delta < 0 {
        return Vec::new();
    }
    if r.is_multiple_of(2) {
        return vec![g + 1];
    }
    let delta = delta as u64;
    (0..=delta.min(g)).filter(|kappa| kappa % 2 == delta % 2).collect()
}

/// Admissible pairs `(r, κ)` in increasing order.
pub fn admissible_pairs(kite: &KiteSpec, g: u64) -> Result<Vec<(u64, u64)>, CensusError> {
    check_kite_genus(kite, g, 0)?;
    let poly = kite.polygon();
    let mut out = Vec::new();
    for (r, lat) in kite_sublattices(kite) {
        let delta = delta_m(&poly, &lat, g);
        out.extend(admissible_kappas(r, delta, g).into_iter().map(|kappa| (r, kappa)));
    }
    Ok(out)
}

/// The multiplicity-weighted count `#_{k,k',g}`.
pub fn kite_count(kite: &KiteSpec, g: u64) -> Result<Census, CensusError> {
    let poly = kite.polygon();
    if g == 0 {
        return Ok(irreducible_report(&poly));
    }
    check_kite_genus(kite, g, 1)?;
    let delta_full = delta_m(&poly, &Sublattice::FULL, g);
    let mut entries = Vec::new();
    for (r, lattice) in kite_sublattices(kite) {
        let delta = delta_m(&poly, &lattice, g);
        if delta < 0 {
            continue;
        }
        if r % 2 == 0 && delta_full < g as i64 + 1 {
            return Err(CensusError::EvenIndexInconsistent { lattice });
        }
        let kappas = admissible_kappas(r, delta, g);
        let multiplicity = if r % 2 == 0 { 1 } else { kappas.len() as u64 };
        entries.push(CensusEntry { lattice, delta_m: delta, kappas, multiplicity });
    }
    entries.sort_by_key(|a| a.lattice);
    let total = entries.iter().map(|e| e.multiplicity).sum();
    Ok(Census { polygon: poly, genus: g, entries, total, note: None })
}

/// Closed form for `#_{k,k',1}`: the number of divisors of
/// `gcd(k + k', 2k)`, less one when `k = k'` or `k = 0`.
pub fn genus1_closed_form(kite: &KiteSpec) -> u64 {
    let sigma = num_divisors(kite_divisor_bound(kite));
    if kite.k == kite.k_prime || kite.k == 0 {
        sigma - 1
    } else {
        sigma
    }
}

/// Number of interior points of `poly` lying in `lat`.
pub fn interior_count_in(poly: &LatticePolygon, lat: &Sublattice) -> u64 {
    poly.lattice_points(Region::Interior)
        .into_iter()
        .filter(|&p| lat.contains(p))
        .count() as u64
}
