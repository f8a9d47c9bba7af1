//! Executable checks of the simplicial maps behind the lower bounds: maps
//! between Rips complexes induced by a correspondence, and the nearest-point
//! projection onto a subset. Each must be simplicial, and the round trip
//! must be contiguous to the inclusion.

use std::sync::Arc;

use anyhow::Result;
use hausdorff_gh::complex::{
    build_vr, check_contiguous, check_simplicial, induced_vr_map, nearest_point_vr_maps, VertexMap,
};
use hausdorff_gh::gh::{distortion, gh_exact, Correspondence, DEFAULT_NODE_BUDGET};
use hausdorff_gh::metric::{hausdorff_within, AmbientManifold, FiniteMetricSpace};
use hausdorff_gh::sampling::Sampler;
use serde::{Deserialize, Serialize};

use crate::AssertionFailure;

/// Samples have at most this many points.
pub const MAX_POINTS: usize = 6;
/// Margin added to the smallest admissible scale in adversarial trials.
pub const ADVERSARIAL_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub seed: u64,
    pub trials: usize,
    pub correspondence_simplicial: usize,
    pub correspondence_contiguous: usize,
    pub projection_simplicial: usize,
    pub projection_contiguous: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        [
            self.correspondence_simplicial,
            self.correspondence_contiguous,
            self.projection_simplicial,
            self.projection_contiguous,
        ]
        .iter()
        .all(|&p| p == self.trials)
    }
}

/// `VR(Y; eps) -> VR(X; r + eps) -> VR(Y; 2r + eps)` from `c ⊆ X x Y`.
/// Returns (both maps simplicial, round trip contiguous to the inclusion).
fn correspondence_round_trip(
    c: &Correspondence,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    eps: f64,
    r: f64,
) -> Result<(bool, bool)> {
    // room for the union of any two simplices
    let max_dim = x.len() + y.len();
    let source = Arc::new(build_vr(y, eps, max_dim));
    let h = induced_vr_map(c, x, y, source.clone(), r)?;
    let g = induced_vr_map(&c.transpose(), y, x, h.target().clone(), r)?;
    let simplicial = check_simplicial(&h)? && check_simplicial(&g)?;
    let inclusion = VertexMap::inclusion(source, g.target().clone())?;
    let contiguous = simplicial && check_contiguous(&h.then(&g)?, &inclusion)?;
    Ok((simplicial, contiguous))
}

fn pick_scale(s: &mut Sampler, floor: f64, trial: usize) -> f64 {
    if trial.is_multiple_of(2) {
        floor + ADVERSARIAL_MARGIN
    } else {
        floor + s.uniform_in(ADVERSARIAL_MARGIN, 1.0)
    }
}

fn pick_eps(s: &mut Sampler, trial: usize) -> f64 {
    if trial.is_multiple_of(5) {
        1e-9
    } else {
        s.uniform_in(0.0, 2.5)
    }
}

pub fn lemma_check(seed: u64, trials: usize) -> Result<LemmaReport> {
    let m = AmbientManifold::standard_circle();
    let mut s = Sampler::new(seed);
    let mut report = LemmaReport { seed, trials, ..Default::default() };

    for t in 0..trials {
        let (nx, ny) = (1 + s.below(MAX_POINTS), 1 + s.below(MAX_POINTS));
        let x = s.points(&m, nx)?.to_metric_space();
        let y = s.points(&m, ny)?.to_metric_space();
        let best = gh_exact(&x, &y, DEFAULT_NODE_BUDGET)?;
        let c = best.optimal_correspondence;
        let r = pick_scale(&mut s, distortion(&c, &x, &y)?, t);
        let eps = pick_eps(&mut s, t);
        let (s1, c1) = correspondence_round_trip(&c, &x, &y, eps, r)?;
        let (s2, c2) = correspondence_round_trip(&c.transpose(), &y, &x, eps, r)?;
        report.correspondence_simplicial += usize::from(s1 && s2);
        report.correspondence_contiguous += usize::from(c1 && c2);
        if !(s1 && s2 && c1 && c2) {
            report.failures.push(format!("trial {t}: correspondence maps, r = {r}, eps = {eps}"));
        }

        let nz = 1 + s.below(MAX_POINTS);
        let z = s.points(&m, nz)?.to_metric_space();
        let mut sub: Vec<usize> = (0..nz).filter(|_| s.below(2) == 1).collect();
        if sub.is_empty() {
            sub.push(s.below(nz));
        }
        let r = pick_scale(&mut s, 2.0 * hausdorff_within(&z, &sub)?, t);
        let eps = pick_eps(&mut s, t);
        let source = Arc::new(build_vr(&z, eps, 2 * nz));
        let (f, iota) = nearest_point_vr_maps(&z, &sub, source.clone(), r)?;
        let simplicial = check_simplicial(&f)? && check_simplicial(&iota)?;
        let inclusion = VertexMap::inclusion(source, iota.target().clone())?;
        let contiguous = simplicial && check_contiguous(&f.then(&iota)?, &inclusion)?;
        report.projection_simplicial += usize::from(simplicial);
        report.projection_contiguous += usize::from(contiguous);
        if !(simplicial && contiguous) {
            report.failures.push(format!("trial {t}: projection maps, r = {r}, eps = {eps}"));
        }
    }
    Ok(report)
}

/// [`lemma_check`], failing with [`AssertionFailure`] unless every trial passes.
pub fn lemma_check_strict(seed: u64, trials: usize) -> Result<LemmaReport> {
    let report = lemma_check(seed, trials)?;
    if !report.all_passed() {
        return Err(AssertionFailure(format!("{} failing trials: {:?}", report.failures.len(), report.failures)).into());
    }
    Ok(report)
}
