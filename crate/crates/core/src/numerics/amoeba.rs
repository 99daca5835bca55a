//! Amoeba samples of the kite curve `a/z + p(w) + b·z = 0`: points
//! `(log|z|, log|w|)` over a grid of `w` values.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmoebaPoint {
    pub u: f64,
    pub v: f64,
}

/// Range of `log|w|` covered by the sampling grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogGrid {
    pub log_min: f64,
    pub log_max: f64,
}

impl Default for LogGrid {
    fn default() -> Self {
        LogGrid { log_min: -2.0, log_max: 2.0 }
    }
}

/// Samples `n` values of `w` on concentric rings (radii evenly spaced in
/// `log|w|`, angles offset by half a step so the grid is symmetric under
/// `w ↦ 1/w` and complex conjugation), solves the quadratic in `z`, and
/// keeps every root whose residual is within `τ_res` of the natural scale
/// `|a/z| + Σ|c_e||w|ᵉ + |b·z|`.
pub fn amoeba_sample(
    p: &LaurentPoly,
    a: Complex64,
    b: Complex64,
    n: usize,
    grid: &LogGrid,
    tol: &Tolerances,
) -> Vec<AmoebaPoint> {
    let zero = Complex64::new(0.0, 0.0);
    if n == 0 || a == zero || b == zero {
        return Vec::new();
    }
    let rings = (n as f64).sqrt().ceil() as usize;
    let per_ring = n.div_ceil(rings);
    let mut out = Vec::new();
    let mut taken = 0;
    'rings: for i in 0..rings {
        let t = if rings == 1 { 0.5 } else { i as f64 / (rings - 1) as f64 };
        let log_r = grid.log_min + t * (grid.log_max - grid.log_min);
        for j in 0..per_ring {
            if taken == n {
                break 'rings;
            }
            taken += 1;
            let theta = std::f64::consts::TAU * (j as f64 + 0.5) / per_ring as f64;
            let w = Complex64::from_polar(log_r.exp(), theta);
            let pw = p.eval(w);
            let disc = (pw * pw - 4.0 * a * b).sqrt();
            // Cancellation-free pair of roots of b z² + p z + a.
            let s = if (pw + disc).norm() >= (pw - disc).norm() { pw + disc } else { pw - disc };
            if s == zero {
                continue;
            }
            let q = -0.5 * s;
            for z in [q / b, a / q] {
                if z == zero || !z.re.is_finite() || !z.im.is_finite() {
                    continue;
                }
                let resid = (a / z + pw + b * z).norm();
                let scale = (a / z).norm() + p.abs_scale(w) + (b * z).norm();
                if resid <= tol.res * scale {
                    out.push(AmoebaPoint { u: z.norm().ln(), v: log_r });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    fn joukowski() -> LaurentPoly {
        LaurentPoly::new(1, 1, vec![one(), Complex64::new(0.0, 0.0), one()]).unwrap()
    }

    #[test]
    fn empty_request() {
        assert!(amoeba_sample(&joukowski(), one(), one(), 0, &LogGrid::default(), &Tolerances::default()).is_empty());
    }

    #[test]
    fn residual_contract() {
        let p = joukowski();
        let tol = Tolerances::default();
        let pts = amoeba_sample(&p, one(), one(), 400, &LogGrid::default(), &tol);
        assert!(!pts.is_empty());
        assert!(pts.len() <= 800);
    }

    #[test]
    fn joukowski_cloud_is_symmetric() {
        let pts = amoeba_sample(&joukowski(), one(), one(), 400, &LogGrid::default(), &Tolerances::default());
        let near = |u: f64, v: f64| pts.iter().any(|q| (q.u - u).abs() < 1e-6 && (q.v - v).abs() < 1e-6);
        for q in &pts {
            assert!(near(q.u, -q.v), "missing mirror of {q:?}");
            assert!(near(-q.u, q.v), "missing mirror of {q:?}");
        }
    }
}
