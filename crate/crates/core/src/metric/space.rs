//! Finite metric spaces and finite subsets of model manifolds.

use serde::{Deserialize, Serialize};

use super::manifold::{AmbientManifold, Point};
use crate::error::{Error, Result};

/// Absolute slack used when validating metric axioms.
pub const METRIC_TOLERANCE: f64 = 1e-9;

/// A finite metric space given by labels and a dense distance matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MetricSpaceSpec", into = "MetricSpaceSpec")]
pub struct FiniteMetricSpace {
    labels: Vec<String>,
    n: usize,
    dist: Vec<f64>,
}

impl FiniteMetricSpace {
    /// Build from a full matrix, checking zero diagonal, symmetry and the
    /// triangle inequality up to [`METRIC_TOLERANCE`]. Entries within the
    /// tolerance of their transpose are averaged.
    pub fn new(labels: Vec<String>, matrix: Vec<Vec<f64>>) -> Result<Self> {
        let n = matrix.len();
        if labels.len() != n {
            return Err(Error::InvalidMetric(format!(
                "{} labels for a {n}x{n} matrix",
                labels.len()
            )));
        }
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMetric(format!("row {i} has length {}, expected {n}", row.len())));
            }
            dist.extend_from_slice(row);
        }
        for i in 0..n {
            for j in 0..n {
                let d = dist[i * n + j];
                if !d.is_finite() || d < 0.0 {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) = {d} is not a nonnegative real")));
                }
            }
            if dist[i * n + i] != 0.0 {
                return Err(Error::InvalidMetric(format!("nonzero diagonal at {i}")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (dist[i * n + j], dist[j * n + i]);
                if (a - b).abs() > METRIC_TOLERANCE {
                    return Err(Error::InvalidMetric(format!("asymmetric at ({i},{j}): {a} vs {b}")));
                }
                let m = if a == b { a } else { 0.5 * (a + b) };
                dist[i * n + j] = m;
                dist[j * n + i] = m;
            }
        }
        let space = Self { labels, n, dist };
        space.check_triangle()?;
        Ok(space)
    }

    /// Build with labels `"0"`, `"1"`, ...
    pub fn from_matrix(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let labels = (0..matrix.len()).map(|i| i.to_string()).collect();
        Self::new(labels, matrix)
    }

    fn check_triangle(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let dij = self.dist[i * n + j];
                for k in 0..n {
                    if dij > self.dist[i * n + k] + self.dist[k * n + j] + METRIC_TOLERANCE {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails for ({i},{k},{j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    pub fn matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Result<f64> {
        if self.n == 0 {
            return Err(Error::Empty);
        }
        Ok(self.dist.iter().copied().fold(0.0, f64::max))
    }

    /// Largest distance from point `i` to any other point.
    pub fn eccentricity(&self, i: usize) -> f64 {
        self.row(i).iter().copied().fold(0.0, f64::max)
    }

    /// Metric subspace on the given indices, in the given order.
    pub fn subspace(&self, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= self.n {
                return Err(Error::VertexOutOfRange { index: i, count: self.n });
            }
        }
        let n = indices.len();
        let mut dist = Vec::with_capacity(n * n);
        for &i in indices {
            for &j in indices {
                dist.push(self.d(i, j));
            }
        }
        Ok(Self {
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
            n,
            dist,
        })
    }
}

/// Free function form of [`FiniteMetricSpace::diameter`].
pub fn diameter(a: &FiniteMetricSpace) -> Result<f64> {
    a.diameter()
}

#[derive(Serialize, Deserialize)]
struct MetricSpaceSpec {
    #[serde(default)]
    labels: Option<Vec<String>>,
    dist: Vec<Vec<f64>>,
}

impl TryFrom<MetricSpaceSpec> for FiniteMetricSpace {
    type Error = Error;

    fn try_from(spec: MetricSpaceSpec) -> Result<Self> {
        match spec.labels {
            Some(labels) => Self::new(labels, spec.dist),
            None => Self::from_matrix(spec.dist),
        }
    }
}

impl From<FiniteMetricSpace> for MetricSpaceSpec {
    fn from(s: FiniteMetricSpace) -> Self {
        let dist = s.matrix();
        MetricSpaceSpec { labels: Some(s.labels), dist }
    }
}

/// A finite subset of a model manifold; points are kept normalized to the
/// fundamental domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SubsetSpec", into = "SubsetSpec")]
pub struct FiniteSubset {
    manifold: AmbientManifold,
    points: Vec<Point>,
}

impl FiniteSubset {
    pub fn new(manifold: AmbientManifold, points: Vec<Point>) -> Result<Self> {
        let points = points
            .iter()
            .map(|p| manifold.normalize(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { manifold, points })
    }

    /// Subset of a circle from raw angles.
    pub fn from_angles(manifold: AmbientManifold, angles: &[f64]) -> Result<Self> {
        Self::new(manifold, angles.iter().map(|&t| Point::angle(t)).collect())
    }

    /// `n` equally spaced points on a circle, starting at `offset`.
    pub fn equispaced_circle(manifold: AmbientManifold, n: usize, offset: f64) -> Result<Self> {
        let c = manifold
            .circumference()
            .ok_or(Error::UnsupportedManifold("equispaced circle samples"))?;
        let angles: Vec<f64> = (0..n).map(|i| offset + c * i as f64 / n as f64).collect();
        Self::from_angles(manifold, &angles)
    }

    /// Regular grid with `per_axis` points along each periodic axis.
    pub fn grid(manifold: AmbientManifold, per_axis: usize) -> Result<Self> {
        let sides: Vec<f64> = match manifold.kind() {
            super::ManifoldKind::Circle { circumference } => vec![*circumference],
            super::ManifoldKind::FlatTorus { sides } => sides.clone(),
            super::ManifoldKind::Euclidean { .. } => {
                return Err(Error::UnsupportedManifold("regular grids"))
            }
        };
        let dim = sides.len();
        let total = per_axis.checked_pow(dim as u32).ok_or_else(|| {
            Error::InvalidManifold(format!("grid of {per_axis}^{dim} points is too large"))
        })?;
        let mut points = Vec::with_capacity(total);
        for flat in 0..total {
            let mut rem = flat;
            let mut coords = vec![0.0; dim];
            for axis in (0..dim).rev() {
                let k = rem % per_axis;
                rem /= per_axis;
                coords[axis] = sides[axis] * k as f64 / per_axis as f64;
            }
            points.push(Point::new(coords));
        }
        Self::new(manifold, points)
    }

    pub fn manifold(&self) -> &AmbientManifold {
        &self.manifold
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distance between the `i`-th and `j`-th points.
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.manifold
            .distance_unchecked(&self.points[i].coords, &self.points[j].coords)
    }

    /// Distance from the `i`-th point to an arbitrary point of the manifold.
    pub(crate) fn d_to(&self, i: usize, q: &Point) -> f64 {
        self.manifold.distance_unchecked(&self.points[i].coords, &q.coords)
    }

    /// Induced finite metric space.
    pub fn to_metric_space(&self) -> FiniteMetricSpace {
        let n = self.len();
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = self.d(i, j);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        FiniteMetricSpace {
            labels: (0..n).map(|i| i.to_string()).collect(),
            n,
            dist,
        }
    }

    /// Subset consisting of the given point indices.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let points = indices
            .iter()
            .map(|&i| {
                self.points
                    .get(i)
                    .cloned()
                    .ok_or(Error::VertexOutOfRange { index: i, count: self.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { manifold: self.manifold.clone(), points })
    }

    /// Union of two subsets of the same manifold, self first.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.manifold != other.manifold {
            return Err(Error::ManifoldMismatch);
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Ok(Self { manifold: self.manifold.clone(), points })
    }
}

/// Free function form of [`FiniteSubset::to_metric_space`].
pub fn to_metric_space(s: &FiniteSubset) -> FiniteMetricSpace {
    s.to_metric_space()
}

#[derive(Serialize, Deserialize)]
struct SubsetSpec {
    manifold: AmbientManifold,
    points: Vec<Vec<f64>>,
}

impl TryFrom<SubsetSpec> for FiniteSubset {
    type Error = Error;

    fn try_from(spec: SubsetSpec) -> Result<Self> {
        Self::new(spec.manifold, spec.points.into_iter().map(Point::new).collect())
    }
}

impl From<FiniteSubset> for SubsetSpec {
    fn from(s: FiniteSubset) -> Self {
        SubsetSpec {
            manifold: s.manifold,
            points: s.points.into_iter().map(|p| p.coords).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn singleton_is_zero_matrix() {
        let s = FiniteSubset::from_angles(AmbientManifold::standard_circle(), &[1.0]).unwrap();
        let m = s.to_metric_space();
        assert_eq!(m.matrix(), vec![vec![0.0]]);
        assert_eq!(m.diameter().unwrap(), 0.0);
    }

    #[test]
    fn three_equispaced_points() {
        let s = FiniteSubset::equispaced_circle(AmbientManifold::standard_circle(), 3, 0.0).unwrap();
        let m = s.to_metric_space();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_abs_diff_eq!(m.d(i, j), 2.0 * PI / 3.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn circle_diameter() {
        let s = FiniteSubset::from_angles(AmbientManifold::standard_circle(), &[0.0, PI / 2.0, PI]).unwrap();
        assert_abs_diff_eq!(s.to_metric_space().diameter().unwrap(), PI);
    }

    #[test]
    fn empty_diameter_errors() {
        let m = FiniteMetricSpace::from_matrix(vec![]).unwrap();
        assert!(matches!(m.diameter(), Err(Error::Empty)));
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        assert!(FiniteMetricSpace::from_matrix(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(FiniteMetricSpace::from_matrix(vec![vec![1.0]]).is_err());
        assert!(FiniteMetricSpace::from_matrix(vec![
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ])
        .is_err());
        assert!(FiniteMetricSpace::from_matrix(vec![vec![0.0, -1.0], vec![-1.0, 0.0]]).is_err());
        // within tolerance is accepted and symmetrized
        let m = FiniteMetricSpace::from_matrix(vec![vec![0.0, 1.0], vec![1.0 + 1e-12, 0.0]]).unwrap();
        assert_eq!(m.d(0, 1), m.d(1, 0));
    }

    #[test]
    fn subset_json_round_trip() {
        let json = r#"{"manifold":{"kind":"flat_torus","dim":2,"params":[6.283185307179586,6.283185307179586]},
                       "points":[[0.5,-1.0],[7.0,2.0]]}"#;
        let s: FiniteSubset = serde_json::from_str(json).unwrap();
        for p in s.points() {
            for &c in &p.coords {
                assert!((0.0..2.0 * PI).contains(&c));
            }
        }
        let back: FiniteSubset = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        let m = s.to_metric_space();
        let mj: FiniteMetricSpace = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(mj, m);
    }

    #[test]
    fn grid_sizes() {
        let t = AmbientManifold::flat_torus(vec![1.0, 2.0]).unwrap();
        let g = FiniteSubset::grid(t, 4).unwrap();
        assert_eq!(g.len(), 16);
        assert!(FiniteSubset::grid(AmbientManifold::euclidean(2).unwrap(), 3).is_err());
    }
}
