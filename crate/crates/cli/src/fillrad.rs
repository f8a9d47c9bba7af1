//! Filling radius estimate: sweep the Rips scale and find where the top
//! homology class of the smallest complex stops surviving.

use anyhow::{bail, ensure, Context, Result};
use hausdorff_gh::complex::build_vr;
use hausdorff_gh::homology::{class_survives, Homology};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::SweepConfig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalePoint {
    pub scale: f64,
    pub betti: Vec<usize>,
    pub survives: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FillRadReport {
    pub points: usize,
    pub dim: usize,
    pub max_dim: usize,
    pub grid_step: f64,
    pub base_scale: f64,
    pub base_betti: Vec<usize>,
    /// Largest grid scale at which the class still survives.
    pub last_surviving_scale: f64,
    /// First grid scale at which it is gone; `None` when censored.
    pub death_scale: Option<f64>,
    /// Half of `last_surviving_scale`.
    pub fill_rad_estimate: f64,
    /// The class survived the whole grid, so the estimate is only a lower bound.
    pub censored: bool,
    pub curve: Vec<ScalePoint>,
}

pub fn fillrad_estimate(cfg: &SweepConfig) -> Result<FillRadReport> {
    let grid = cfg.grid.context("fillrad-estimate needs a scale grid")?;
    grid.validate()?;
    ensure!(cfg.manifold.is_closed(), "fillrad-estimate needs a closed manifold");
    let samples = cfg.samples()?;
    let x = samples
        .first()
        .and_then(|g| g.first())
        .context("fillrad-estimate needs one sample")?
        .to_metric_space();
    let n = cfg.manifold.dim();
    let max_dim = cfg.max_dim.unwrap_or(n + 1);
    ensure!(max_dim > n, "max_dim must exceed the manifold dimension {n}");

    let scales = grid.values();
    let base = build_vr(&x, scales[0], max_dim);
    let base_h = Homology::new(&base, n)?;
    let base_betti = base_h.betti().0;
    if base_betti[n] != 1 {
        bail!(
            "base complex at scale {} has beta_{n} = {}, expected 1; the sample is too sparse",
            scales[0],
            base_betti[n]
        );
    }

    let curve = scales
        .par_iter()
        .map(|&scale| {
            let k = build_vr(&x, scale, max_dim);
            let h = Homology::new(&k, n)?;
            Ok(ScalePoint { scale, betti: h.betti().0, survives: class_survives(&base_h, &h, n)? })
        })
        .collect::<Result<Vec<_>>>()?;

    // a class that has died cannot come back along inclusions
    let death = curve.iter().position(|p| !p.survives);
    let last = match death {
        Some(0) => unreachable!("the base complex always survives into itself"),
        Some(k) => k - 1,
        None => curve.len() - 1,
    };
    Ok(FillRadReport {
        points: x.len(),
        dim: n,
        max_dim,
        grid_step: grid.step(),
        base_scale: scales[0],
        base_betti,
        last_surviving_scale: scales[last],
        death_scale: death.map(|k| scales[k]),
        fill_rad_estimate: scales[last] / 2.0,
        censored: death.is_none(),
        curve,
    })
}
