//! The `bounds` command: evaluate every applicable lower bound, either from
//! given Hausdorff distances or from samples of a manifold.

use std::f64::consts::PI;

use anyhow::{bail, Context, Result};
use hausdorff_gh::bounds::{thm1a, thm1b, thm2a, thm2b, thm3a, thm3b, thm4, BoundInputs, BoundReport, Theorem};
use hausdorff_gh::metric::{
    covering_radius_circle, covering_radius_witness, AmbientManifold, FiniteSubset, ManifoldKind, Point,
};
use serde::{Deserialize, Serialize};

const DEFAULT_WITNESSES_PER_AXIS: usize = 256;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundsConfig {
    /// Use these numbers directly instead of samples.
    #[serde(default)]
    pub inputs: Option<BoundInputs>,
    #[serde(default)]
    pub manifold: Option<AmbientManifold>,
    #[serde(default)]
    pub x: Option<Vec<Point>>,
    /// Absent means `Y` is the whole manifold.
    #[serde(default)]
    pub y: Option<Vec<Point>>,
    /// Witness grid resolution for manifolds without an exact covering radius.
    #[serde(default)]
    pub witnesses_per_axis: Option<usize>,
    /// Defaults to every theorem the data supports.
    #[serde(default)]
    pub theorems: Option<Vec<Theorem>>,
}

fn is_unit_circle(m: &AmbientManifold) -> bool {
    m.circumference().is_some_and(|c| (c - 2.0 * PI).abs() < 1e-12)
}

/// Interval `[lo, hi]` containing `d_H(X, M)`.
fn covering_interval(x: &FiniteSubset, per_axis: usize) -> Result<(f64, f64)> {
    match x.manifold().kind() {
        ManifoldKind::Circle { .. } => {
            let r = covering_radius_circle(x)?;
            Ok((r, r))
        }
        ManifoldKind::FlatTorus { sides } => {
            let w = FiniteSubset::grid(x.manifold().clone(), per_axis)?;
            let lo = covering_radius_witness(x, &w)?;
            // every point of the torus lies within half a cell diagonal of a witness
            let slack = sides.iter().map(|l| (l / (2.0 * per_axis as f64)).powi(2)).sum::<f64>().sqrt();
            Ok((lo, lo + slack))
        }
        ManifoldKind::Euclidean { .. } => bail!("Hausdorff distance to R^n is infinite"),
    }
}

fn run(t: Theorem, i: &BoundInputs) -> Result<BoundReport> {
    Ok(match t {
        Theorem::Thm1a => thm1a(i)?,
        Theorem::Thm1b => thm1b(i)?,
        Theorem::Thm2a => thm2a(i.dh_xm),
        Theorem::Thm2b => thm2b(i.dh_xm, i.dh_ym),
        Theorem::Thm3a => thm3a(i)?,
        Theorem::Thm3b => thm3b(i)?,
        Theorem::Thm4 => thm4(i)?,
    })
}

fn default_theorems(y_is_manifold: bool, circle: bool, fill_rad: bool) -> Vec<Theorem> {
    let mut t = if y_is_manifold { vec![Theorem::Thm1a] } else { vec![Theorem::Thm1b] };
    if circle {
        t.push(if y_is_manifold { Theorem::Thm2a } else { Theorem::Thm2b });
    }
    if fill_rad {
        t.push(if y_is_manifold { Theorem::Thm3a } else { Theorem::Thm3b });
    }
    t.push(Theorem::Thm4);
    t
}

pub fn bounds(cfg: &BoundsConfig) -> Result<Vec<BoundReport>> {
    let (inputs, circle, y_is_manifold) = if let Some(i) = &cfg.inputs {
        i.validate()?;
        let circle = i.n == 1 && i.kappa == 0.0 && (i.rho - PI / 2.0).abs() < 1e-12;
        (i.clone(), circle, i.dh_ym == 0.0)
    } else {
        let m = cfg.manifold.clone().context("bounds needs either inputs or a manifold")?;
        let per_axis = cfg.witnesses_per_axis.unwrap_or(DEFAULT_WITNESSES_PER_AXIS);
        let x = FiniteSubset::new(m.clone(), cfg.x.clone().context("bounds needs a sample x")?)?;
        // a witness estimate is low, so take the bottom of the interval for
        // X and the top for Y; both choices only lower the bounds
        let (dh_x, _) = covering_interval(&x, per_axis)?;
        let dh_y = match &cfg.y {
            Some(pts) => covering_interval(&FiniteSubset::new(m.clone(), pts.clone())?, per_axis)?.1,
            None => 0.0,
        };
        (BoundInputs::from_manifold(&m, dh_x, dh_y), is_unit_circle(&m), cfg.y.is_none())
    };
    let theorems = match &cfg.theorems {
        Some(t) => t.clone(),
        None => default_theorems(y_is_manifold, circle, inputs.fill_rad.is_some()),
    };
    theorems.iter().map(|&t| run(t, &inputs)).collect()
}
