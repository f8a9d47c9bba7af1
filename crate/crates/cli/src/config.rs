use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use hausdorff_gh::metric::{AmbientManifold, FiniteSubset, Point};
use hausdorff_gh::sampling::Sampler;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SamplerSpec {
    Equispaced,
    /// Needs a seed, from the config or from `--seed`.
    Uniform,
    /// A JSON array of point lists, each point a list of coordinates.
    File { path: PathBuf },
}

/// `steps + 1` evenly spaced scales from `start` to `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleGrid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl ScaleGrid {
    pub fn validate(&self) -> Result<()> {
        ensure!(self.start.is_finite() && self.stop.is_finite(), "scale grid bounds must be finite");
        ensure!(self.start > 0.0, "scale grid must start above zero");
        ensure!(self.steps >= 1 && self.stop > self.start, "scale grid must be strictly increasing");
        Ok(())
    }

    pub fn step(&self) -> f64 {
        (self.stop - self.start) / self.steps as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..=self.steps)
            .map(|k| if k == self.steps { self.stop } else { self.start + k as f64 * self.step() })
            .collect()
    }
}

fn default_manifold() -> AmbientManifold {
    AmbientManifold::standard_circle()
}

fn default_sampler() -> SamplerSpec {
    SamplerSpec::Equispaced
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    #[serde(default = "default_manifold")]
    pub manifold: AmbientManifold,
    #[serde(default = "default_sampler")]
    pub sampler: SamplerSpec,
    #[serde(default)]
    pub seed: Option<u64>,
    /// `[|X|, |Y|]` per sweep row, or `[n]` for a single sample.
    #[serde(default)]
    pub sizes: Vec<Vec<usize>>,
    /// Angle offsets of the equispaced `X` and `Y` samples.
    #[serde(default)]
    pub offsets: [f64; 2],
    /// Rows per entry of `sizes` when sampling at random.
    #[serde(default = "one")]
    pub repeats: usize,
    #[serde(default)]
    pub grid: Option<ScaleGrid>,
    #[serde(default)]
    pub max_dim: Option<usize>,
    #[serde(default)]
    pub node_budget: Option<u64>,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            manifold: default_manifold(),
            sampler: default_sampler(),
            seed: None,
            sizes: Vec::new(),
            offsets: [0.0, 0.0],
            repeats: 1,
            grid: None,
            max_dim: None,
            node_budget: None,
            out: None,
        }
    }
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(g) = &self.grid {
            g.validate()?;
        }
        if self.sampler == SamplerSpec::Uniform && self.seed.is_none() {
            bail!("the uniform sampler needs a seed");
        }
        ensure!(self.repeats >= 1, "repeats must be positive");
        ensure!(self.sizes.iter().flatten().all(|&n| n > 0), "sample sizes must be positive");
        Ok(())
    }

    /// The samples the config describes, in a fixed order. Entry `i` of
    /// `sizes` yields `repeats` groups, each with one subset per listed size.
    pub fn samples(&self) -> Result<Vec<Vec<FiniteSubset>>> {
        self.validate()?;
        match &self.sampler {
            SamplerSpec::Equispaced => self
                .sizes
                .iter()
                .map(|sizes| {
                    sizes
                        .iter()
                        .enumerate()
                        .map(|(k, &n)| {
                            let offset = self.offsets.get(k).copied().unwrap_or(0.0);
                            Ok(FiniteSubset::equispaced_circle(self.manifold.clone(), n, offset)?)
                        })
                        .collect()
                })
                .collect(),
            SamplerSpec::Uniform => {
                let mut s = Sampler::new(self.seed.expect("validated"));
                let mut out = Vec::new();
                for sizes in &self.sizes {
                    for _ in 0..self.repeats {
                        out.push(
                            sizes
                                .iter()
                                .map(|&n| Ok(s.points(&self.manifold, n)?))
                                .collect::<Result<Vec<_>>>()?,
                        );
                    }
                }
                Ok(out)
            }
            SamplerSpec::File { path } => {
                let sets: Vec<Vec<Point>> = read_json(path)?;
                let per = self.sizes.first().map_or(1, |s| s.len().max(1));
                ensure!(!sets.is_empty() && sets.len().is_multiple_of(per), "sample file must hold groups of {per} subsets");
                sets.chunks(per)
                    .map(|group| {
                        group
                            .iter()
                            .map(|pts| Ok(FiniteSubset::new(self.manifold.clone(), pts.clone())?))
                            .collect()
                    })
                    .collect()
            }
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
