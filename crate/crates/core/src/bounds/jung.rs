//! Jung-type constants relating diameter and circumradius under an upper
//! curvature bound.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::CMP_SLACK;

fn jung_ratio(n: usize) -> f64 {
    assert!(n >= 1, "manifold dimension must be positive");
    ((n as f64 + 1.0) / (2.0 * n as f64)).sqrt()
}

/// `alpha(n, kappa)`: the factor with `diam(A) >= 2 alpha R(A)` for sets of
/// diameter below `tau`.
///
/// `sqrt((n+1)/(2n))` for `kappa <= 0`, damped by `sin(x)/x` with
/// `x = (pi/2) sqrt(kappa/(kappa+1))` for positive curvature.
pub fn alpha(n: usize, kappa: f64) -> f64 {
    let base = jung_ratio(n);
    if kappa <= 0.0 {
        return base;
    }
    let x = PI / 2.0 * (kappa / (kappa + 1.0)).sqrt();
    base * x.sin() / x
}

/// `tau = rho` for `kappa <= 0`, else `min(rho, pi / (2 sqrt(kappa + 1)))`.
pub fn tau(rho: f64, kappa: f64) -> f64 {
    if kappa <= 0.0 {
        rho
    } else {
        rho.min(PI / (2.0 * (kappa + 1.0).sqrt()))
    }
}

/// Lower bound on `diam(A)` from its circumradius `R` in an `n`-manifold with
/// sectional curvature at most `kappa`.
pub fn jung_diameter_lower(radius: f64, n: usize, kappa: f64) -> Result<f64> {
    if !(radius >= 0.0) {
        return Err(Error::OutOfDomain(format!("circumradius must be nonnegative, got {radius}")));
    }
    let c = jung_ratio(n);
    if kappa < 0.0 {
        let s = (-kappa).sqrt();
        Ok(2.0 / s * (c * (s * radius).sinh()).asinh())
    } else if kappa == 0.0 {
        Ok(2.0 * radius * c)
    } else {
        let s = kappa.sqrt();
        let limit = PI / (2.0 * s);
        if radius > limit + CMP_SLACK {
            return Err(Error::OutOfDomain(format!(
                "circumradius {radius} exceeds pi/(2 sqrt(kappa)) = {limit}"
            )));
        }
        let arg = (c * (s * radius.min(limit)).sin()).min(1.0);
        Ok(2.0 / s * arg.asin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(1, 0.0), 1.0);
        assert_abs_diff_eq!(alpha(2, -3.0), 0.75f64.sqrt());
        let floor = 2f64.sqrt() / PI;
        for n in 1..=10 {
            for &k in &[-10.0, -1.0, 0.0, 1e-9, 0.5, 1.0, 10.0, 1e3, 1e6] {
                let a = alpha(n, k);
                assert!(a >= floor && a <= 1.0, "alpha({n}, {k}) = {a}");
            }
            assert_abs_diff_eq!(alpha(n, 1e-9), jung_ratio(n), epsilon = 1e-6);
        }
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(PI / 2.0, 0.0), PI / 2.0);
        assert_abs_diff_eq!(tau(10.0, 3.0), PI / 4.0);
        assert_eq!(tau(0.1, 3.0), 0.1);
    }

    #[test]
    fn jung_flat_and_limits() {
        assert_abs_diff_eq!(jung_diameter_lower(1.0, 2, 0.0).unwrap(), 3f64.sqrt());
        let flat = jung_diameter_lower(1.0, 3, 0.0).unwrap();
        assert_abs_diff_eq!(jung_diameter_lower(1.0, 3, 1e-9).unwrap(), flat, epsilon = 1e-6);
        assert_abs_diff_eq!(jung_diameter_lower(1.0, 3, -1e-9).unwrap(), flat, epsilon = 1e-6);
        assert!(jung_diameter_lower(2.0, 2, 1.0).is_err());
        assert!(jung_diameter_lower(-1.0, 2, 0.0).is_err());
    }

    #[test]
    fn jung_dominates_alpha_bound() {
        for n in 1..=6 {
            for &k in &[0.01, 0.5, 1.0, 4.0, 100.0] {
                let top = PI / (2.0 * (k + 1.0f64).sqrt());
                for i in 0..=200 {
                    let r = top * i as f64 / 200.0;
                    let lhs = jung_diameter_lower(r, n, k).unwrap();
                    assert!(lhs >= 2.0 * alpha(n, k) * r - 1e-12, "n={n} k={k} r={r}");
                }
            }
            for &k in &[-5.0, -1.0, 0.0] {
                for i in 0..=200 {
                    let r = 3.0 * i as f64 / 200.0;
                    let lhs = jung_diameter_lower(r, n, k).unwrap();
                    assert!(lhs >= 2.0 * alpha(n, k) * r - 1e-12);
                }
            }
        }
    }
}
