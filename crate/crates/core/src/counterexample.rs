//! A family of finite subsets of `R^n` whose Gromov–Hausdorff distance is
//! a vanishing fraction of their Hausdorff distance.
//!
//! With `x_j = sum_{i <= j} i e_i`, `Z = {x_1, .., x_n}` and `X = Z \ {x_n}`,
//! the Hausdorff distance is `n` while the cyclic coordinate shift moves `X`
//! to within `sqrt(n)` of `Z`. So `d_GH(X, Z) / d_H(X, Z) <= 1 / sqrt(n)`.
//!
//! The same numbers hold for the convex hulls of `X` and `Z`; that variant
//! needs a continuum Hausdorff engine and is not implemented here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{hausdorff_subsets, AmbientManifold, FiniteSubset, Point};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioInstance {
    pub n: usize,
    pub z: FiniteSubset,
    pub x: FiniteSubset,
    /// `permutation[i]` is the coordinate that `e_i` is sent to.
    pub permutation: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: usize,
    pub dh: f64,
    pub dh_after_isometry: f64,
    pub gh_upper: f64,
    pub ratio_upper: f64,
    pub dh_squared: u64,
    pub dh_after_isometry_squared: u64,
}

/// Integer coordinates of `x_j`, 1-based `j`.
fn staircase(n: usize, j: usize) -> Vec<i64> {
    (1..=n).map(|i| if i <= j { i as i64 } else { 0 }).collect()
}

fn shift(v: &[i64], permutation: &[usize]) -> Vec<i64> {
    let mut w = vec![0; v.len()];
    for (i, &c) in v.iter().enumerate() {
        w[permutation[i]] = c;
    }
    w
}

fn sq_dist(a: &[i64], b: &[i64]) -> u64 {
    a.iter().zip(b).map(|(p, q)| ((p - q) * (p - q)) as u64).sum()
}

fn directed_sq(a: &[Vec<i64>], b: &[Vec<i64>]) -> u64 {
    a.iter()
        .map(|p| b.iter().map(|q| sq_dist(p, q)).min().expect("nonempty"))
        .max()
        .expect("nonempty")
}

fn hausdorff_sq(a: &[Vec<i64>], b: &[Vec<i64>]) -> u64 {
    directed_sq(a, b).max(directed_sq(b, a))
}

fn to_subset(m: &AmbientManifold, pts: &[Vec<i64>]) -> Result<FiniteSubset> {
    let points = pts.iter().map(|p| Point::new(p.iter().map(|&c| c as f64).collect())).collect();
    FiniteSubset::new(m.clone(), points)
}

pub fn build_instance(n: usize) -> Result<RatioInstance> {
    if n < 2 {
        return Err(Error::OutOfDomain(format!("the ratio family needs n >= 2, got {n}")));
    }
    let m = AmbientManifold::euclidean(n)?;
    let z: Vec<Vec<i64>> = (1..=n).map(|j| staircase(n, j)).collect();
    Ok(RatioInstance {
        n,
        x: to_subset(&m, &z[..n - 1])?,
        z: to_subset(&m, &z)?,
        permutation: (0..n).map(|i| (i + 1) % n).collect(),
    })
}

impl RatioInstance {
    fn integer_points(s: &FiniteSubset) -> Vec<Vec<i64>> {
        s.points().iter().map(|p| p.coords.iter().map(|&c| c as i64).collect()).collect()
    }

    /// `f(X)` where `f` permutes coordinates.
    pub fn shifted_x(&self) -> Result<FiniteSubset> {
        let pts: Vec<Vec<i64>> = Self::integer_points(&self.x)
            .iter()
            .map(|v| shift(v, &self.permutation))
            .collect();
        to_subset(self.z.manifold(), &pts)
    }
}

/// Recomputes both Hausdorff distances from the points. Squared distances
/// are exact integers; the float path through [`hausdorff_subsets`] must
/// agree with them.
pub fn verify_instance(inst: &RatioInstance) -> Result<RatioReport> {
    let z = RatioInstance::integer_points(&inst.z);
    let x = RatioInstance::integer_points(&inst.x);
    let fx: Vec<Vec<i64>> = x.iter().map(|v| shift(v, &inst.permutation)).collect();

    let dh_squared = hausdorff_sq(&x, &z);
    let after_squared = hausdorff_sq(&fx, &z);
    let dh = (dh_squared as f64).sqrt();
    let dh_after_isometry = (after_squared as f64).sqrt();

    let float_dh = hausdorff_subsets(&inst.x, &inst.z)?;
    let float_after = hausdorff_subsets(&inst.shifted_x()?, &inst.z)?;
    for (exact, float) in [(dh, float_dh), (dh_after_isometry, float_after)] {
        if (exact - float).abs() > 1e-9 * exact.max(1.0) {
            return Err(Error::InvalidMetric(format!(
                "integer and float Hausdorff paths disagree: {exact} vs {float}"
            )));
        }
    }
    Ok(RatioReport {
        n: inst.n,
        dh,
        dh_after_isometry,
        gh_upper: dh_after_isometry,
        ratio_upper: dh_after_isometry / dh,
        dh_squared,
        dh_after_isometry_squared: after_squared,
    })
}
