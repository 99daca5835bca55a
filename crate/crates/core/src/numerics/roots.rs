//! Roots of complex polynomials by Aberth–Ehrlich simultaneous iteration.
//!
//! Each approximation is frozen once its backward error reaches a few ulps
//! of the coefficient scale. Approximations of a multiple root then form a
//! tight cloud; clouds are merged when their points are within
//! `τ_cluster` of each other or when their Newton inclusion disks
//! (radius `n·|p/p'|`, each guaranteed to contain a root) overlap. A merged
//! cloud is replaced by its centroid, which is far more accurate than any
//! single member.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{NumericsError, Tolerances};

const MAX_ITERATIONS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: u64,
}

/// `(p(z), p'(z), Σ|cᵢ||z|ⁱ)` by Horner's rule; `coeffs` ascending.
pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let az = z.norm();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * az + c.norm();
    }
    (p, dp, scale)
}

fn max_norm(coeffs: &[Complex64]) -> f64 {
    coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Roots with multiplicities of `Σ coeffs[i]·wⁱ`.
///
/// Exact zero constant terms are factored out first and reported as the
/// root 0. Roots are returned sorted by real part, then imaginary part.
pub fn poly_roots(coeffs: &[Complex64], tol: &Tolerances) -> Result<Vec<Root>, NumericsError> {
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(NumericsError::InvalidInput("non-finite coefficient".into()));
    }
    let Some(top) = coeffs.iter().rposition(|c| *c != Complex64::new(0.0, 0.0)) else {
        return Err(NumericsError::ZeroPolynomial);
    };
    let coeffs = &coeffs[..=top];
    let zeros = coeffs.iter().position(|c| *c != Complex64::new(0.0, 0.0)).unwrap();
    let reduced = &coeffs[zeros..];
    let mut out = Vec::new();
    if zeros > 0 {
        out.push(Root { value: Complex64::new(0.0, 0.0), multiplicity: zeros as u64 });
    }
    let n = reduced.len() - 1;
    if n > 0 {
        let approx = aberth(reduced)?;
        out.extend(cluster(reduced, &approx, tol));
    }
    // Residual contract on the original polynomial.
    let deg = coeffs.len() - 1;
    let cmax = max_norm(coeffs);
    for r in &out {
        let (p, _, _) = horner(coeffs, r.value);
        let bound = tol.res * cmax * r.value.norm().max(1.0).powi(deg as i32);
        if p.norm() > bound {
            return Err(NumericsError::NonConvergence { iterations: MAX_ITERATIONS });
        }
    }
    out.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(out)
}

/// Initial points on a circle whose radius is the geometric mean of the
/// root moduli, rotated off the real axis.
fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let radius = (coeffs[0].norm() / coeffs[n].norm()).powf(1.0 / n as f64);
    let radius = if radius.is_finite() && radius > 0.0 { radius } else { 1.0 };
    (0..n)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

fn aberth(coeffs: &[Complex64]) -> Result<Vec<Complex64>, NumericsError> {
    let n = coeffs.len() - 1;
    if n == 1 {
        return Ok(vec![-coeffs[0] / coeffs[1]]);
    }
    let mut z = initial_guesses(coeffs);
    let mut done = vec![false; n];
    let eps = f64::EPSILON;
    for _ in 0..MAX_ITERATIONS {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp, scale) = horner(coeffs, z[i]);
            if p.norm() <= 4.0 * eps * scale {
                done[i] = true;
                continue;
            }
            all_done = false;
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = if dp.norm() == 0.0 || !ratio.re.is_finite() {
                // Stationary point: nudge off it.
                Complex64::new(1e-3 * (1.0 + z[i].norm()), 1e-3)
            } else {
                ratio / (Complex64::new(1.0, 0.0) - ratio * sum)
            };
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
            }
        }
        if all_done {
            return Ok(z);
        }
    }
    // Accept stragglers if they already satisfy a slightly looser test.
    if z.iter().all(|&zi| {
        let (p, _, scale) = horner(coeffs, zi);
        p.norm() <= 64.0 * eps * scale
    }) {
        return Ok(z);
    }
    Err(NumericsError::NonConvergence { iterations: MAX_ITERATIONS })
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut j = i;
    while parent[j] != r {
        let next = parent[j];
        parent[j] = r;
        j = next;
    }
    r
}

pub(crate) fn union_find_groups(n: usize, mut linked: impl FnMut(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if linked(i, j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups
}

fn cluster(coeffs: &[Complex64], z: &[Complex64], tol: &Tolerances) -> Vec<Root> {
    let n = coeffs.len() - 1;
    let radii: Vec<f64> = z
        .iter()
        .map(|&zi| {
            let (p, dp, _) = horner(coeffs, zi);
            let r = n as f64 * p.norm() / dp.norm();
            if r.is_finite() {
                r
            } else {
                0.0
            }
        })
        .collect();
    let groups = union_find_groups(z.len(), |i, j| {
        let d = (z[i] - z[j]).norm();
        let scale = z[i].norm().max(z[j].norm()).max(1.0);
        d <= tol.cluster * scale || d <= radii[i] + radii[j]
    });
    groups
        .into_iter()
        .map(|g| {
            let sum: Complex64 = g.iter().map(|&i| z[i]).sum();
            let centroid = sum / g.len() as f64;
            let value = if g.len() > 1 { polish_multiple(coeffs, centroid, g.len()) } else { centroid };
            Root { value, multiplicity: g.len() as u64 }
        })
        .collect()
}

/// A root of multiplicity `m` of `p` is a simple root of `p^(m−1)`; a few
/// Newton steps there sharpen the centroid. The result is kept only if it
/// lowers `|p|`.
fn polish_multiple(coeffs: &[Complex64], start: Complex64, m: usize) -> Complex64 {
    let mut d: Vec<Complex64> = coeffs.to_vec();
    for _ in 1..m {
        d = d.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    }
    let mut z = start;
    for _ in 0..8 {
        let (q, dq, _) = horner(&d, z);
        if dq.norm() == 0.0 {
            break;
        }
        let step = q / dq;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    if horner(coeffs, z).0.norm() <= horner(coeffs, start).0.norm() {
        z
    } else {
        start
    }
}
