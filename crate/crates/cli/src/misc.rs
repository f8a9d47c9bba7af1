//! Single-report commands: `ratio`, `homology` and `gh-exact`.

use anyhow::{ensure, Context, Result};
use hausdorff_gh::complex::{build_vr, SimplicialComplex};
use hausdorff_gh::counterexample::{build_instance, verify_instance, RatioReport};
use hausdorff_gh::gh::{gh_exact, GHResult, DEFAULT_NODE_BUDGET};
use hausdorff_gh::homology::betti_numbers;
use hausdorff_gh::metric::{AmbientManifold, FiniteMetricSpace, FiniteSubset, Point};
use serde::{Deserialize, Serialize};

pub fn ratio(n: usize) -> Result<RatioReport> {
    Ok(verify_instance(&build_instance(n)?)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomologyConfig {
    /// Either an explicit complex ...
    #[serde(default)]
    pub complex: Option<SimplicialComplex>,
    /// ... or a Rips complex of a sample at `scale`.
    #[serde(default)]
    pub manifold: Option<AmbientManifold>,
    #[serde(default)]
    pub points: Option<Vec<Point>>,
    #[serde(default)]
    pub scale: Option<f64>,
    #[serde(default)]
    pub max_dim: Option<usize>,
    /// Defaults to one below the built dimension.
    #[serde(default)]
    pub up_to: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub counts: Vec<usize>,
    pub betti: Vec<usize>,
    pub euler_characteristic: i64,
}

pub fn homology(cfg: &HomologyConfig) -> Result<HomologyReport> {
    let k = match &cfg.complex {
        Some(k) => k.clone(),
        None => {
            let m = cfg.manifold.clone().context("homology needs a complex or a manifold")?;
            let pts = cfg.points.clone().context("homology needs points")?;
            let x = FiniteSubset::new(m.clone(), pts)?;
            let scale = cfg.scale.context("homology needs a scale")?;
            build_vr(&x.to_metric_space(), scale, cfg.max_dim.unwrap_or(m.dim() + 1))
        }
    };
    ensure!(k.max_dim() >= 1, "homology needs complexes built to dimension at least 1");
    let up_to = cfg.up_to.unwrap_or(k.max_dim() - 1);
    let betti = betti_numbers(&k, up_to)?;
    Ok(HomologyReport {
        counts: (0..=k.max_dim()).map(|d| k.count(d)).collect(),
        betti: betti.0,
        euler_characteristic: k.euler_characteristic(),
    })
}

/// A space given either by a distance matrix or by points of a manifold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceSpec {
    Subset(FiniteSubset),
    Matrix(FiniteMetricSpace),
}

impl SpaceSpec {
    pub fn metric(&self) -> FiniteMetricSpace {
        match self {
            SpaceSpec::Subset(s) => s.to_metric_space(),
            SpaceSpec::Matrix(m) => m.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GhConfig {
    pub x: SpaceSpec,
    pub y: SpaceSpec,
    #[serde(default)]
    pub node_budget: Option<u64>,
}

pub fn gh(cfg: &GhConfig, budget: Option<u64>) -> Result<GHResult> {
    let budget = budget.or(cfg.node_budget).unwrap_or(DEFAULT_NODE_BUDGET);
    Ok(gh_exact(&cfg.x.metric(), &cfg.y.metric(), budget)?)
}
