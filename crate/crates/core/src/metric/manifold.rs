//! Model manifolds and their geodesic distances.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of the ambient space together with its size parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ManifoldKind {
    /// Circle of the given circumference with the arc-length metric.
    Circle { circumference: f64 },
    /// Flat torus `R^n / (L_1 Z x ... x L_n Z)`.
    FlatTorus { sides: Vec<f64> },
    /// Euclidean space `R^n`.
    Euclidean { dim: usize },
}

/// A model manifold with the geometry constants the lower bounds consume.
///
/// `rho` is the convexity radius, `kappa` an upper bound on sectional
/// curvature, and `fill_rad` the filling radius when known. The built-in
/// defaults are the values for the flat metrics; anything else is supplied
/// by the caller through the `with_*` setters and is never computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ManifoldSpec", into = "ManifoldSpec")]
pub struct AmbientManifold {
    kind: ManifoldKind,
    rho: f64,
    kappa: f64,
    fill_rad: Option<f64>,
}

fn check_length(what: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidManifold(format!("{what} must be positive and finite, got {v}")))
    }
}

impl AmbientManifold {
    /// Circle of the given circumference. The convexity radius defaults to a
    /// quarter of the circumference (`pi/2` for the unit-radius circle).
    pub fn circle(circumference: f64) -> Result<Self> {
        let circumference = check_length("circumference", circumference)?;
        Ok(Self {
            kind: ManifoldKind::Circle { circumference },
            rho: circumference / 4.0,
            kappa: 0.0,
            fill_rad: None,
        })
    }

    /// The circle of circumference `2 pi`.
    pub fn standard_circle() -> Self {
        Self::circle(2.0 * PI).expect("2 pi is a valid circumference")
    }

    /// Flat torus with the given side lengths. The convexity radius defaults
    /// to a quarter of the shortest side, which is `pi/2` for sides `2 pi`.
    pub fn flat_torus(sides: Vec<f64>) -> Result<Self> {
        if sides.is_empty() {
            return Err(Error::InvalidManifold("torus needs at least one side".into()));
        }
        for &s in &sides {
            check_length("torus side", s)?;
        }
        let shortest = sides.iter().copied().fold(f64::INFINITY, f64::min);
        Ok(Self {
            kind: ManifoldKind::FlatTorus { sides },
            rho: shortest / 4.0,
            kappa: 0.0,
            fill_rad: None,
        })
    }

    /// `R^dim`; convexity radius is infinite.
    pub fn euclidean(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidManifold("euclidean dimension must be positive".into()));
        }
        Ok(Self {
            kind: ManifoldKind::Euclidean { dim },
            rho: f64::INFINITY,
            kappa: 0.0,
            fill_rad: None,
        })
    }

    pub fn with_rho(mut self, rho: f64) -> Result<Self> {
        if rho.is_nan() || rho <= 0.0 {
            return Err(Error::InvalidManifold(format!("convexity radius must be positive, got {rho}")));
        }
        self.rho = rho;
        Ok(self)
    }

    pub fn with_kappa(mut self, kappa: f64) -> Result<Self> {
        if !kappa.is_finite() {
            return Err(Error::InvalidManifold(format!("curvature bound must be finite, got {kappa}")));
        }
        self.kappa = kappa;
        Ok(self)
    }

    pub fn with_fill_rad(mut self, fill_rad: f64) -> Result<Self> {
        self.fill_rad = Some(check_length("filling radius", fill_rad)?);
        Ok(self)
    }

    pub fn kind(&self) -> &ManifoldKind {
        &self.kind
    }

    /// Manifold dimension `n`.
    pub fn dim(&self) -> usize {
        match &self.kind {
            ManifoldKind::Circle { .. } => 1,
            ManifoldKind::FlatTorus { sides } => sides.len(),
            ManifoldKind::Euclidean { dim } => *dim,
        }
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn fill_rad(&self) -> Option<f64> {
        self.fill_rad
    }

    /// True for the compact model spaces (circle and torus).
    pub fn is_closed(&self) -> bool {
        !matches!(self.kind, ManifoldKind::Euclidean { .. })
    }

    pub fn is_circle(&self) -> bool {
        matches!(self.kind, ManifoldKind::Circle { .. })
    }

    /// Circumference when this is a circle.
    pub fn circumference(&self) -> Option<f64> {
        match self.kind {
            ManifoldKind::Circle { circumference } => Some(circumference),
            _ => None,
        }
    }

    /// Periods of each coordinate; `None` for unbounded axes.
    fn period(&self, axis: usize) -> Option<f64> {
        match &self.kind {
            ManifoldKind::Circle { circumference } => Some(*circumference),
            ManifoldKind::FlatTorus { sides } => Some(sides[axis]),
            ManifoldKind::Euclidean { .. } => None,
        }
    }

    /// Map a point into the fundamental domain `[0, L_i)` on each periodic axis.
    pub fn normalize(&self, p: &Point) -> Result<Point> {
        self.check_dim(p)?;
        let coords = p
            .coords
            .iter()
            .enumerate()
            .map(|(axis, &c)| {
                if !c.is_finite() {
                    return Err(Error::InvalidManifold(format!("non-finite coordinate {c}")));
                }
                Ok(match self.period(axis) {
                    Some(period) => wrap(c, period),
                    None => c,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Point { coords })
    }

    fn check_dim(&self, p: &Point) -> Result<()> {
        if p.coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: p.coords.len(),
            });
        }
        Ok(())
    }

    /// Geodesic distance between two points of the manifold.
    pub fn distance(&self, p: &Point, q: &Point) -> Result<f64> {
        self.check_dim(p)?;
        self.check_dim(q)?;
        Ok(self.distance_unchecked(&p.coords, &q.coords))
    }

    pub(crate) fn distance_unchecked(&self, p: &[f64], q: &[f64]) -> f64 {
        match &self.kind {
            ManifoldKind::Circle { circumference } => periodic_gap(p[0] - q[0], *circumference),
            ManifoldKind::FlatTorus { sides } => p
                .iter()
                .zip(q)
                .zip(sides)
                .map(|((a, b), &l)| {
                    let g = periodic_gap(a - b, l);
                    g * g
                })
                .sum::<f64>()
                .sqrt(),
            ManifoldKind::Euclidean { .. } => p
                .iter()
                .zip(q)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt(),
        }
    }
}

/// Free function form of [`AmbientManifold::distance`].
pub fn geodesic_distance(m: &AmbientManifold, p: &Point, q: &Point) -> Result<f64> {
    m.distance(p, q)
}

fn wrap(c: f64, period: f64) -> f64 {
    let w = c.rem_euclid(period);
    // rem_euclid can round up to the period itself for tiny negative inputs
    if w >= period {
        0.0
    } else {
        w
    }
}

/// Length of the shorter arc for a signed coordinate difference.
fn periodic_gap(delta: f64, period: f64) -> f64 {
    // taking |delta| first keeps the result exactly symmetric
    let d = delta.abs().rem_euclid(period);
    d.min(period - d).max(0.0)
}

/// A point given by its coordinates: an angle for the circle, one
/// representative per axis for the torus, raw coordinates for `R^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    pub coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn angle(theta: f64) -> Self {
        Self { coords: vec![theta] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// On-disk manifold description.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct ManifoldSpec {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(default)]
    params: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rho: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fill_rad: Option<f64>,
}

impl TryFrom<ManifoldSpec> for AmbientManifold {
    type Error = Error;

    fn try_from(spec: ManifoldSpec) -> Result<Self> {
        let base = match spec.kind.as_str() {
            "circle" => {
                if let Some(d) = spec.dim.filter(|&d| d != 1) {
                    return Err(Error::DimensionMismatch { expected: 1, found: d });
                }
                match spec.params.as_slice() {
                    [] => Self::standard_circle(),
                    [c] => Self::circle(*c)?,
                    other => {
                        return Err(Error::InvalidManifold(format!(
                            "circle takes one parameter, got {}",
                            other.len()
                        )))
                    }
                }
            }
            "flat_torus" => {
                let dim = spec.dim.unwrap_or(spec.params.len().max(2));
                let sides = if spec.params.is_empty() {
                    vec![2.0 * PI; dim]
                } else {
                    spec.params.clone()
                };
                if sides.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: sides.len() });
                }
                Self::flat_torus(sides)?
            }
            "euclidean" => Self::euclidean(
                spec.dim.ok_or_else(|| Error::InvalidManifold("euclidean needs a dimension".into()))?,
            )?,
            other => return Err(Error::InvalidManifold(format!("unknown manifold kind `{other}`"))),
        };
        let mut m = base;
        if let Some(rho) = spec.rho {
            m = m.with_rho(rho)?;
        }
        if let Some(kappa) = spec.kappa {
            m = m.with_kappa(kappa)?;
        }
        if let Some(fr) = spec.fill_rad {
            m = m.with_fill_rad(fr)?;
        }
        Ok(m)
    }
}

impl From<AmbientManifold> for ManifoldSpec {
    fn from(m: AmbientManifold) -> Self {
        let dim = m.dim();
        let (kind, params) = match m.kind {
            ManifoldKind::Circle { circumference } => ("circle", vec![circumference]),
            ManifoldKind::FlatTorus { sides } => ("flat_torus", sides),
            ManifoldKind::Euclidean { .. } => ("euclidean", vec![]),
        };
        ManifoldSpec {
            kind: kind.to_string(),
            dim: Some(dim),
            params,
            rho: m.rho.is_finite().then_some(m.rho),
            kappa: Some(m.kappa),
            fill_rad: m.fill_rad,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn torus2() -> AmbientManifold {
        AmbientManifold::flat_torus(vec![2.0 * PI, 2.0 * PI]).unwrap()
    }

    #[test]
    fn circle_examples() {
        let c = AmbientManifold::standard_circle();
        let d = c.distance(&Point::angle(0.0), &Point::angle(PI)).unwrap();
        assert_abs_diff_eq!(d, PI, epsilon = 1e-15);
        let d = c.distance(&Point::angle(0.0), &Point::angle(1.5 * PI)).unwrap();
        assert_abs_diff_eq!(d, PI / 2.0, epsilon = 1e-15);
    }

    /// Distance on the torus as the minimum over the nearest lattice translates.
    fn torus_brute(p: &[f64], q: &[f64], l: f64) -> f64 {
        let mut best = f64::INFINITY;
        for i in -1..=1 {
            for j in -1..=1 {
                let dx = p[0] - q[0] + i as f64 * l;
                let dy = p[1] - q[1] + j as f64 * l;
                best = best.min((dx * dx + dy * dy).sqrt());
            }
        }
        best
    }

    #[test]
    fn torus_antipodal_matches_lattice_translates() {
        let t = torus2();
        let p = Point::new(vec![0.0, 0.0]);
        let q = Point::new(vec![PI, PI]);
        let d = t.distance(&p, &q).unwrap();
        assert_abs_diff_eq!(d, torus_brute(&p.coords, &q.coords, 2.0 * PI), epsilon = 1e-12);
        assert_abs_diff_eq!(d, PI * 2f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let t = torus2();
        let err = t.distance(&Point::angle(0.0), &Point::new(vec![0.0, 1.0]));
        assert!(matches!(err, Err(Error::DimensionMismatch { expected: 2, found: 1 })));
    }

    #[test]
    fn defaults_for_model_spaces() {
        assert_abs_diff_eq!(AmbientManifold::standard_circle().rho(), PI / 2.0);
        assert_abs_diff_eq!(torus2().rho(), PI / 2.0);
        assert!(AmbientManifold::euclidean(3).unwrap().rho().is_infinite());
        assert_eq!(torus2().kappa(), 0.0);
    }

    #[test]
    fn negative_angles_normalize() {
        let c = AmbientManifold::standard_circle();
        let p = c.normalize(&Point::angle(-PI / 2.0)).unwrap();
        assert_abs_diff_eq!(p.coords[0], 1.5 * PI, epsilon = 1e-15);
        let p = c.normalize(&Point::angle(-1e-18)).unwrap();
        assert!(p.coords[0] >= 0.0 && p.coords[0] < 2.0 * PI);
    }

    #[test]
    fn json_round_trip() {
        let m = torus2().with_fill_rad(1.0).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        let back: AmbientManifold = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);
        let c: AmbientManifold =
            serde_json::from_str(r#"{"kind":"circle","dim":1,"params":[6.283185307179586]}"#).unwrap();
        assert!(c.is_circle());
        assert!(serde_json::from_str::<AmbientManifold>(r#"{"kind":"sphere","dim":2}"#).is_err());
    }

    fn manifolds() -> Vec<AmbientManifold> {
        vec![
            AmbientManifold::standard_circle(),
            AmbientManifold::circle(3.0).unwrap(),
            torus2(),
            AmbientManifold::flat_torus(vec![1.0, 2.0, 3.5]).unwrap(),
            AmbientManifold::euclidean(3).unwrap(),
        ]
    }

    fn coords(dim: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-20.0f64..20.0, dim)
    }

    proptest! {
        #[test]
        fn geodesic_distance_is_a_metric(
            which in 0usize..5,
            seed in prop::collection::vec(coords(3), 3),
        ) {
            let m = &manifolds()[which];
            let pts: Vec<Point> = seed
                .iter()
                .map(|c| m.normalize(&Point::new(c[..m.dim()].to_vec())).unwrap())
                .collect();
            let d = |a: usize, b: usize| m.distance(&pts[a], &pts[b]).unwrap();
            prop_assert!(d(0, 1) >= 0.0);
            prop_assert_eq!(d(0, 1), d(1, 0));
            prop_assert!(d(0, 0) == 0.0);
            prop_assert!(d(0, 2) <= d(0, 1) + d(1, 2) + 1e-9);
        }

        #[test]
        fn normalization_preserves_distance(which in 0usize..5, a in coords(3), b in coords(3)) {
            let m = &manifolds()[which];
            let p = Point::new(a[..m.dim()].to_vec());
            let q = Point::new(b[..m.dim()].to_vec());
            let raw = m.distance(&p, &q).unwrap();
            let norm = m.distance(&m.normalize(&p).unwrap(), &m.normalize(&q).unwrap()).unwrap();
            prop_assert!((raw - norm).abs() < 1e-9);
        }
    }
}
