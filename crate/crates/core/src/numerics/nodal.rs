//! Nodal partition and signature of the kite curve `a/z + p(w) + b·z = 0`.
//!
//! Solving `∂f/∂z = 0` gives `z² = a/b`, and then `f = 0` forces
//! `p(w) = ∓2√(ab)` with `p'(w) = 0`. The nodes therefore split into two
//! blocks according to which of the two values the critical value hits.
//!
//! For a polynomial (`k = 0`) the line `w = 0` is a boundary curve of the
//! toric surface rather than a missing point, so a critical point at
//! `w = 0` is a legitimate node position and is counted.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::laurent::{all_critical_points, LaurentPoly};
use super::{fmt_complex, NumericsError, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalData {
    pub delta1: u64,
    pub delta2: u64,
    pub kappa: u64,
    pub genus: i64,
}

impl NodalData {
    pub fn delta(&self) -> u64 {
        self.delta1 + self.delta2
    }
}

pub fn nodal_partition(
    p: &LaurentPoly,
    a: Complex64,
    b: Complex64,
    tol: &Tolerances,
) -> Result<NodalData, NumericsError> {
    let zero = Complex64::new(0.0, 0.0);
    if a == zero || b == zero {
        return Err(NumericsError::InvalidInput("a and b must be nonzero".into()));
    }
    let target = 2.0 * (a * b).sqrt();
    let crit = all_critical_points(p, tol)?;
    let (mut plus, mut minus) = (0u64, 0u64);
    for c in &crit {
        let tau = tol.val * c.value.norm().max(target.norm()).max(1.0);
        let hit_plus = (c.value - target).norm() <= tau;
        let hit_minus = (c.value + target).norm() <= tau;
        if hit_plus && hit_minus {
            return Err(NumericsError::AmbiguousMatch { value: fmt_complex(c.value) });
        }
        if (hit_plus || hit_minus) && c.multiplicity > 1 {
            return Err(NumericsError::DegenerateNode {
                point: fmt_complex(c.point),
                multiplicity: c.multiplicity,
            });
        }
        plus += hit_plus as u64;
        minus += hit_minus as u64;
    }
    let (delta1, delta2) = (plus.max(minus), plus.min(minus));
    Ok(NodalData {
        delta1,
        delta2,
        kappa: delta1 - delta2,
        genus: p.degree() as i64 - 1 - (delta1 + delta2) as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::chebyshev;

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn cubic_two_nodes() {
        let p = LaurentPoly::polynomial(real(&[0.0, -3.0, 0.0, 1.0])).unwrap();
        let n = nodal_partition(&p, c(1.0), c(1.0), &Tolerances::default()).unwrap();
        assert_eq!(n, NodalData { delta1: 1, delta2: 1, kappa: 0, genus: 0 });
    }

    #[test]
    fn quartic_unbalanced() {
        let p = LaurentPoly::polynomial(real(&[0.5, 0.0, -2.0, 0.0, 1.0])).unwrap();
        let n = nodal_partition(&p, c(0.25), c(0.25), &Tolerances::default()).unwrap();
        assert_eq!(n, NodalData { delta1: 2, delta2: 1, kappa: 1, genus: 0 });
    }

    #[test]
    fn smooth_curve() {
        let p = LaurentPoly::polynomial(real(&[0.0, -3.0, 0.0, 1.0])).unwrap();
        let n = nodal_partition(&p, c(4.0), c(4.0), &Tolerances::default()).unwrap();
        assert_eq!(n, NodalData { delta1: 0, delta2: 0, kappa: 0, genus: 2 });
    }

    #[test]
    fn degenerate_node_is_reported() {
        // (w − 1)³ + 2: double critical point w = 1 with value 2 = 2√(ab).
        let p = LaurentPoly::polynomial(real(&[1.0, 3.0, -3.0, 1.0])).unwrap();
        assert!(matches!(
            nodal_partition(&p, c(1.0), c(1.0), &Tolerances::default()),
            Err(NumericsError::DegenerateNode { multiplicity: 2, .. })
        ));
    }

    #[test]
    fn chebyshev_is_balanced() {
        for n in [3u64, 5, 7, 9, 11, 13, 15] {
            let t = chebyshev(n).unwrap();
            let d = nodal_partition(&t, c(0.5), c(0.5), &Tolerances::default()).unwrap();
            assert_eq!(d.kappa, 0, "T_{n}");
            assert_eq!(d.delta(), n - 1);
        }
    }

    #[test]
    fn zero_coefficient_rejected() {
        let p = LaurentPoly::polynomial(real(&[0.0, 1.0])).unwrap();
        assert!(nodal_partition(&p, c(0.0), c(1.0), &Tolerances::default()).is_err());
    }
}
