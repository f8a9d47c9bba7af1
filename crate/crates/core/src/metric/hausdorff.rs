//! Hausdorff distances between finite subsets and covering radii.

use super::space::{FiniteMetricSpace, FiniteSubset};
use crate::error::{Error, Result};

/// `max_{a in A} min_{b in B} d(a, b)`.
fn directed(a: &FiniteSubset, b: &FiniteSubset) -> f64 {
    let m = a.manifold();
    a.points()
        .iter()
        .map(|p| {
            b.points()
                .iter()
                .map(|q| m.distance_unchecked(&p.coords, &q.coords))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Hausdorff distance between two finite subsets of the same manifold.
pub fn hausdorff_subsets(x: &FiniteSubset, y: &FiniteSubset) -> Result<f64> {
    if x.manifold() != y.manifold() {
        return Err(Error::ManifoldMismatch);
    }
    if x.is_empty() || y.is_empty() {
        return Err(Error::Empty);
    }
    Ok(directed(x, y).max(directed(y, x)))
}

/// Exact `d_H(X, S^1)`: half of the largest gap between cyclically
/// consecutive points.
pub fn covering_radius_circle(x: &FiniteSubset) -> Result<f64> {
    let c = x
        .manifold()
        .circumference()
        .ok_or(Error::UnsupportedManifold("exact circle covering radius"))?;
    if x.is_empty() {
        return Err(Error::Empty);
    }
    Ok(largest_gap(x, c).0 / 2.0)
}

/// Largest cyclic gap and the angle where it starts.
pub(crate) fn largest_gap(x: &FiniteSubset, circumference: f64) -> (f64, f64) {
    let mut angles: Vec<f64> = x.points().iter().map(|p| p.coords[0]).collect();
    angles.sort_by(f64::total_cmp);
    let last = *angles.last().expect("nonempty");
    let mut best = (angles[0] + circumference - last, last);
    for w in angles.windows(2) {
        let gap = w[1] - w[0];
        if gap > best.0 {
            best = (gap, w[0]);
        }
    }
    best
}

/// `max_{w in W} min_{x in X} d(w, x)`: a lower estimate of `d_H(X, M)`
/// whose error is at most the covering radius of the witness set itself.
pub fn covering_radius_witness(x: &FiniteSubset, witnesses: &FiniteSubset) -> Result<f64> {
    if x.manifold() != witnesses.manifold() {
        return Err(Error::ManifoldMismatch);
    }
    if x.is_empty() || witnesses.is_empty() {
        return Err(Error::Empty);
    }
    Ok(directed(witnesses, x))
}

/// `d_H(Y, Z)` for `Y` a subset of a finite metric space `Z`, given by indices.
pub fn hausdorff_within(z: &FiniteMetricSpace, y: &[usize]) -> Result<f64> {
    if y.is_empty() || z.is_empty() {
        return Err(Error::Empty);
    }
    for &i in y {
        if i >= z.len() {
            return Err(Error::VertexOutOfRange { index: i, count: z.len() });
        }
    }
    Ok((0..z.len())
        .map(|p| y.iter().map(|&q| z.d(p, q)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max))
}
