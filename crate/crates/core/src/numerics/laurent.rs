//! Laurent polynomials `p(w) = Σ_{e=−k}^{k'} c_e wᵉ` and their critical
//! data.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::roots::{horner, poly_roots};
use super::{NumericsError, Tolerances};

/// A Laurent polynomial with tight exponent window `[−k, k']`.
///
/// `coeffs[i]` is the coefficient of `w^(i − k)`. As a map
/// `ℂ* → ℂ` it has degree `k + k'`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LaurentRepr", into = "LaurentRepr")]
pub struct LaurentPoly {
    k: u64,
    k_prime: u64,
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    k: u64,
    k_prime: u64,
    coeffs: Vec<[f64; 2]>,
}

impl TryFrom<LaurentRepr> for LaurentPoly {
    type Error = NumericsError;
    fn try_from(r: LaurentRepr) -> Result<Self, Self::Error> {
        LaurentPoly::new(r.k, r.k_prime, r.coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect())
    }
}

impl From<LaurentPoly> for LaurentRepr {
    fn from(p: LaurentPoly) -> Self {
        LaurentRepr {
            k: p.k,
            k_prime: p.k_prime,
            coeffs: p.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl LaurentPoly {
    pub fn new(k: u64, k_prime: u64, coeffs: Vec<Complex64>) -> Result<Self, NumericsError> {
        let bad = |m: String| Err(NumericsError::InvalidPolynomial(m));
        if k_prime == 0 {
            return bad("k' must be positive".into());
        }
        if coeffs.len() as u64 != k + k_prime + 1 {
            return bad(format!(
                "expected {} coefficients for exponents −{k}..{k_prime}, got {}",
                k + k_prime + 1,
                coeffs.len()
            ));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return bad("non-finite coefficient".into());
        }
        let zero = Complex64::new(0.0, 0.0);
        if *coeffs.last().unwrap() == zero {
            return bad(format!("coefficient of w^{k_prime} must be nonzero"));
        }
        // For k = 0 the window starts at the constant term, which may vanish.
        if k > 0 && coeffs[0] == zero {
            return bad(format!("coefficient of w^-{k} must be nonzero"));
        }
        Ok(LaurentPoly { k, k_prime, coeffs })
    }

    /// A polynomial `Σ coeffs[i] wⁱ` (so `k = 0`).
    pub fn polynomial(coeffs: Vec<Complex64>) -> Result<Self, NumericsError> {
        let kp = coeffs.len().saturating_sub(1) as u64;
        LaurentPoly::new(0, kp, coeffs)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn k_prime(&self) -> u64 {
        self.k_prime
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `wᵉ` (zero outside the window).
    pub fn coeff(&self, e: i64) -> Complex64 {
        let i = e + self.k as i64;
        if i < 0 || i as usize >= self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[i as usize]
        }
    }

    /// Degree as a branched cover, `k + k'`.
    pub fn degree(&self) -> u64 {
        self.k + self.k_prime
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let (num, _, _) = horner(&self.coeffs, w);
        num / w.powu(self.k as u32)
    }

    /// `Σ |c_e| |w|ᵉ`, the natural scale for residuals at `w`.
    pub fn abs_scale(&self, w: Complex64) -> f64 {
        let (_, _, s) = horner(&self.coeffs, w);
        s / w.norm().powi(self.k as i32)
    }

    /// `α·p + β`.
    pub fn affine(&self, alpha: Complex64, beta: Complex64) -> Result<Self, NumericsError> {
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().map(|c| c * alpha).collect();
        coeffs[self.k as usize] += beta;
        LaurentPoly::new(self.k, self.k_prime, coeffs)
    }

    /// Polynomial whose roots in ℂ* are the critical points of `p`:
    /// `w^(k+1)·p'(w)` when `k ≥ 1` (degree `k + k'`, nonzero constant
    /// term), and `p'(w)` itself when `k = 0`.
    pub fn derivative_numerator(&self) -> Vec<Complex64> {
        if self.k == 0 {
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i as f64)
                .collect()
        } else {
            let k = self.k as i64;
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * (i as i64 - k) as f64)
                .collect()
        }
    }
}

/// A critical point `w` of `p` in ℂ*, its multiplicity as a root of `p'`,
/// and the critical value `p(w)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalDatum {
    pub point: Complex64,
    pub multiplicity: u64,
    pub value: Complex64,
}

/// All critical points in ℂ* including the critical point `w = 0` of a
/// polynomial (`k = 0`); used by the passport, which sees `p` as a map of
/// the whole affine line in that case.
pub(crate) fn all_critical_points(
    p: &LaurentPoly,
    tol: &Tolerances,
) -> Result<Vec<CriticalDatum>, NumericsError> {
    let num = p.derivative_numerator();
    if num.iter().all(|c| *c == Complex64::new(0.0, 0.0)) {
        return Ok(Vec::new());
    }
    Ok(poly_roots(&num, tol)?
        .into_iter()
        .map(|r| {
            let value = if r.value == Complex64::new(0.0, 0.0) {
                p.coeffs[0]
            } else {
                p.eval(r.value)
            };
            CriticalDatum { point: r.value, multiplicity: r.multiplicity, value }
        })
        .collect())
}

/// Critical points of `p` in ℂ* with multiplicities and critical values.
/// With multiplicity they number `k + k'` when `k ≥ 1`; for a polynomial
/// they number `k' − 1` minus the order of vanishing of `p'` at 0.
pub fn critical_data(p: &LaurentPoly, tol: &Tolerances) -> Result<Vec<CriticalDatum>, NumericsError> {
    Ok(all_critical_points(p, tol)?
        .into_iter()
        .filter(|d| d.point != Complex64::new(0.0, 0.0))
        .collect())
}

/// Chebyshev polynomial `T_n` from `T₀ = 1`, `T₁ = w`,
/// `T_{n+1} = 2w·T_n − T_{n−1}`.
pub fn chebyshev(n: u64) -> Result<LaurentPoly, NumericsError> {
    if n == 0 {
        return Err(NumericsError::InvalidInput("Chebyshev degree must be positive".into()));
    }
    let mut prev = vec![1.0f64];
    let mut cur = vec![0.0, 1.0];
    for _ in 1..n {
        let mut next = vec![0.0; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    LaurentPoly::polynomial(cur.into_iter().map(|c| Complex64::new(c, 0.0)).collect())
}
