//! Circumradius: smallest enclosing ball in `R^n` (move-to-front Welzl) and
//! smallest enclosing arc on the circle.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::metric::{largest_gap, FiniteSubset, ManifoldKind, Point};

#[derive(Debug, Clone)]
struct Ball {
    center: DVector<f64>,
    radius: f64,
}

impl Ball {
    fn contains(&self, p: &DVector<f64>) -> bool {
        (p - &self.center).norm() <= self.radius * (1.0 + 1e-12) + 1e-12
    }
}

/// Smallest ball whose boundary passes through every support point, taken
/// inside their affine hull.
fn ball_through(support: &[DVector<f64>], dim: usize) -> Ball {
    match support {
        [] => Ball { center: DVector::zeros(dim), radius: -1.0 },
        [p] => Ball { center: p.clone(), radius: 0.0 },
        [p0, rest @ ..] => {
            let k = rest.len();
            let q = DMatrix::from_columns(&rest.iter().map(|p| p - p0).collect::<Vec<_>>());
            let gram = q.transpose() * &q * 2.0;
            let rhs = DVector::from_iterator(k, (0..k).map(|i| q.column(i).norm_squared()));
            let lambda = gram
                .clone()
                .lu()
                .solve(&rhs)
                .or_else(|| gram.svd(true, true).solve(&rhs, 1e-14).ok())
                .unwrap_or_else(|| DVector::zeros(k));
            let offset = q * lambda;
            let center = p0 + offset;
            let radius = support.iter().map(|p| (p - &center).norm()).fold(0.0, f64::max);
            Ball { center, radius }
        }
    }
}

fn move_to_front(points: &mut [DVector<f64>], end: usize, support: &mut Vec<DVector<f64>>, dim: usize) -> Ball {
    let mut ball = ball_through(support, dim);
    if support.len() == dim + 1 {
        return ball;
    }
    for i in 0..end {
        if !ball.contains(&points[i]) {
            support.push(points[i].clone());
            ball = move_to_front(points, i, support, dim);
            support.pop();
            points[..=i].rotate_right(1);
        }
    }
    ball
}

/// Minimal enclosing ball of points in `R^dim`.
pub(crate) fn min_enclosing_ball(points: &[Vec<f64>], dim: usize) -> (f64, Vec<f64>) {
    let mut pts: Vec<DVector<f64>> = points.iter().map(|p| DVector::from_column_slice(p)).collect();
    let n = pts.len();
    let ball = move_to_front(&mut pts, n, &mut Vec::with_capacity(dim + 1), dim);
    (ball.radius.max(0.0), ball.center.iter().copied().collect())
}

/// Radius and a center of the smallest closed ball containing `A`.
///
/// Supported for Euclidean space and the circle; on the circle the ball is
/// the arc complementary to the largest gap.
pub fn circumradius(a: &FiniteSubset) -> Result<(f64, Point)> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    match a.manifold().kind() {
        ManifoldKind::Euclidean { dim } => {
            let coords: Vec<Vec<f64>> = a.points().iter().map(|p| p.coords.clone()).collect();
            let (r, c) = min_enclosing_ball(&coords, *dim);
            Ok((r, Point::new(c)))
        }
        ManifoldKind::Circle { circumference } => {
            let (gap, start) = largest_gap(a, *circumference);
            let radius = ((circumference - gap) / 2.0).max(0.0);
            let center = a.manifold().normalize(&Point::angle(start + gap + radius))?;
            Ok((radius, center))
        }
        ManifoldKind::FlatTorus { .. } => Err(Error::UnsupportedManifold("torus circumradius")),
    }
}
