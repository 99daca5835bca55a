//! Complex numerics for kite curves `a/z + p(w) + b·z = 0`: polynomial
//! roots, critical points and values of the Laurent polynomial `p`, its
//! passport, the nodal partition of the curve, and amoeba samples.
//!
//! Nothing here is certified. Every result carries a residual-based
//! contract controlled by [`Tolerances`].

mod amoeba;
mod laurent;
mod nodal;
mod passport;
mod roots;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use amoeba::{amoeba_sample, AmoebaPoint, LogGrid};
pub use laurent::{chebyshev, critical_data, CriticalDatum, LaurentPoly};
pub use nodal::{nodal_partition, NodalData};
pub use passport::{expected_passport, passport, Passport};
pub use roots::{poly_roots, Root};

pub use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("root iteration did not converge within {iterations} steps")]
    NonConvergence { iterations: usize },
    #[error("invalid Laurent polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("critical values cluster differently at τ_val and 10·τ_val ({at_tol} vs {at_ten} groups)")]
    ToleranceConflict { at_tol: usize, at_ten: usize },
    #[error("critical point {point} with value matching ±2√(ab) has multiplicity {multiplicity}")]
    DegenerateNode { point: String, multiplicity: u64 },
    #[error("critical value {value} is within tolerance of both +2√(ab) and −2√(ab)")]
    AmbiguousMatch { value: String },
    #[error("invalid partition request: {0}")]
    InvalidPartition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl NumericsError {
    pub fn code(&self) -> &'static str {
        match self {
            NumericsError::ZeroPolynomial => "ZeroPolynomial",
            NumericsError::NonConvergence { .. } => "NonConvergence",
            NumericsError::InvalidPolynomial(_) => "InvalidPolynomial",
            NumericsError::ToleranceConflict { .. } => "ToleranceConflict",
            NumericsError::DegenerateNode { .. } => "DegenerateNode",
            NumericsError::AmbiguousMatch { .. } => "AmbiguousMatch",
            NumericsError::InvalidPartition(_) => "InvalidPartition",
            NumericsError::InvalidInput(_) => "InvalidInput",
        }
    }
}

/// Numerical tolerances.
///
/// * `res`: relative residual a computed root must satisfy,
///   `|p(z)| ≤ res · max|cᵢ| · max(1, |z|)^deg`.
/// * `val`: critical values `u, v` with `|u − v| ≤ val · max(1, |u|, |v|)`
///   are treated as equal.
/// * `cluster`: root approximations closer than `cluster · max(1, |z|)`
///   are merged into one multiple root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub res: f64,
    pub val: f64,
    pub cluster: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { res: 1e-10, val: 1e-8, cluster: 1e-7 }
    }
}

pub(crate) fn fmt_complex(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}
