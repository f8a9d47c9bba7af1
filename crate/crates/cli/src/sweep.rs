//! Circle sandwich experiment: the lower bound, the exact distance and the
//! Hausdorff upper bound for pairs of circle samples.

use anyhow::{ensure, Result};
use hausdorff_gh::bounds::thm2b;
use hausdorff_gh::gh::{gh_exact_with, GhOptions, DEFAULT_NODE_BUDGET};
use hausdorff_gh::metric::{covering_radius_circle, hausdorff_subsets, FiniteSubset};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::SweepConfig;
use crate::{AssertionFailure, SANDWICH_TOL};

/// Largest sample the exact solver is asked to handle in a sweep.
pub const MAX_EXACT_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub nx: usize,
    pub ny: usize,
    pub dh_x: f64,
    pub dh_y: f64,
    pub bound: f64,
    pub gh_exact: f64,
    pub dh_xy: f64,
    pub nodes: u64,
    pub proven_optimal: bool,
}

impl SweepRow {
    /// `bound <= exact <= upper` within [`SANDWICH_TOL`].
    pub fn check(&self) -> std::result::Result<(), AssertionFailure> {
        if self.bound > self.gh_exact + SANDWICH_TOL {
            return Err(AssertionFailure(format!(
                "row {}: bound {} exceeds d_GH {}",
                self.index, self.bound, self.gh_exact
            )));
        }
        if self.gh_exact > self.dh_xy + SANDWICH_TOL {
            return Err(AssertionFailure(format!(
                "row {}: d_GH {} exceeds d_H {}",
                self.index, self.gh_exact, self.dh_xy
            )));
        }
        Ok(())
    }
}

fn nearest(from: &FiniteSubset, to: &FiniteSubset) -> Vec<usize> {
    let m = from.manifold();
    from.points()
        .iter()
        .map(|p| {
            let d = |j: usize| m.distance(p, &to.points()[j]).expect("same manifold");
            (1..to.len()).fold(0, |best, j| if d(j) < d(best) { j } else { best })
        })
        .collect()
}

/// One sandwich row. The nearest-point correspondence seeds the search, so
/// even a truncated search reports a value no larger than `d_H(X, Y)`.
pub fn sandwich_row(index: usize, x: &FiniteSubset, y: &FiniteSubset, budget: u64) -> Result<SweepRow> {
    let dh_x = covering_radius_circle(x)?;
    let dh_y = covering_radius_circle(y)?;
    let opts = GhOptions { node_budget: budget, warm_start: Some((nearest(x, y), nearest(y, x))) };
    let gh = gh_exact_with(&x.to_metric_space(), &y.to_metric_space(), &opts)?;
    Ok(SweepRow {
        index,
        nx: x.len(),
        ny: y.len(),
        dh_x,
        dh_y,
        bound: thm2b(dh_x, dh_y).lower_bound,
        gh_exact: gh.value,
        dh_xy: hausdorff_subsets(x, y)?,
        nodes: gh.nodes_explored,
        proven_optimal: gh.proven_optimal,
    })
}

/// Rows in config order. Fails with [`AssertionFailure`] if any row breaks
/// the sandwich.
pub fn circle_sweep(cfg: &SweepConfig, budget: Option<u64>) -> Result<Vec<SweepRow>> {
    ensure!(cfg.manifold.is_circle(), "circle-sweep needs a circle manifold");
    let budget = budget.or(cfg.node_budget).unwrap_or(DEFAULT_NODE_BUDGET);
    let samples = cfg.samples()?;
    for group in &samples {
        ensure!(group.len() == 2, "circle-sweep needs [|X|, |Y|] sizes");
        ensure!(
            group.iter().all(|s| s.len() <= MAX_EXACT_POINTS),
            "exact distances are limited to {MAX_EXACT_POINTS} points per sample"
        );
    }
    let rows = samples
        .par_iter()
        .enumerate()
        .map(|(i, g)| sandwich_row(i, &g[0], &g[1], budget))
        .collect::<Result<Vec<_>>>()?;
    for row in &rows {
        row.check()?;
    }
    Ok(rows)
}

pub fn write_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
