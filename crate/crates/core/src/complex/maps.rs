//! Vertex maps between complexes, and the maps induced by correspondences
//! and by nearest-point projections onto a subset.

use std::sync::Arc;

use super::build::build_vr;
use super::simplicial::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gh::{distortion, Correspondence};
use crate::metric::{hausdorff_within, FiniteMetricSpace};

/// A map on vertices from `source` to `target`. Whether it is simplicial is
/// checked separately with [`check_simplicial`].
#[derive(Debug, Clone)]
pub struct VertexMap {
    source: Arc<SimplicialComplex>,
    target: Arc<SimplicialComplex>,
    image: Vec<usize>,
}

fn same(a: &Arc<SimplicialComplex>, b: &Arc<SimplicialComplex>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl VertexMap {
    pub fn new(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        image: Vec<usize>,
    ) -> Result<Self> {
        if image.len() != source.vertex_count() {
            return Err(Error::MismatchedComplexes("image length differs from source vertex count"));
        }
        Ok(Self { source, target, image })
    }

    pub fn identity(complex: Arc<SimplicialComplex>) -> Self {
        let image = (0..complex.vertex_count()).collect();
        Self { source: complex.clone(), target: complex, image }
    }

    /// Vertex-wise identity into a complex on at least as many vertices.
    pub fn inclusion(source: Arc<SimplicialComplex>, target: Arc<SimplicialComplex>) -> Result<Self> {
        if source.vertex_count() > target.vertex_count() {
            return Err(Error::MismatchedComplexes("inclusion target has fewer vertices"));
        }
        let image = (0..source.vertex_count()).collect();
        Ok(Self { source, target, image })
    }

    pub fn source(&self) -> &Arc<SimplicialComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialComplex> {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &VertexMap) -> Result<VertexMap> {
        if !same(&self.target, &next.source) {
            return Err(Error::MismatchedComplexes("composition: target and source differ"));
        }
        let image = self
            .image
            .iter()
            .map(|&v| {
                next.image
                    .get(v)
                    .copied()
                    .ok_or(Error::VertexOutOfRange { index: v, count: next.image.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexMap { source: self.source.clone(), target: next.target.clone(), image })
    }

    /// Sorted, deduplicated image vertex set of a simplex.
    pub fn map_simplex(&self, simplex: &[usize]) -> Result<Simplex> {
        let mut out = Vec::with_capacity(simplex.len());
        for &v in simplex {
            let w = *self
                .image
                .get(v)
                .ok_or(Error::VertexOutOfRange { index: v, count: self.image.len() })?;
            if w >= self.target.vertex_count() {
                return Err(Error::VertexOutOfRange { index: w, count: self.target.vertex_count() });
            }
            out.push(w);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// True iff every source simplex maps onto a simplex of the target.
pub fn check_simplicial(f: &VertexMap) -> Result<bool> {
    for s in f.source.iter() {
        if !f.target.contains(&f.map_simplex(s)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `f(σ) ∪ g(σ)` spans a target simplex for every source simplex `σ`.
pub fn check_contiguous(f: &VertexMap, g: &VertexMap) -> Result<bool> {
    if !same(&f.source, &g.source) || !same(&f.target, &g.target) {
        return Err(Error::MismatchedComplexes("contiguity needs equal sources and targets"));
    }
    for s in f.source.iter() {
        let mut joint = f.map_simplex(s)?;
        joint.extend(g.map_simplex(s)?);
        joint.sort_unstable();
        joint.dedup();
        if !f.target.contains(&joint) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Given `C ⊆ X × Y` with `dis(C) < r` and a Rips complex `K = VR(Y; ε)`,
/// send each `y` to the first `x` related to it. The result is a vertex map
/// `K -> VR(X; r + ε)`, built here with the same dimension cap as `K`.
///
/// To map the other way pass `c.transpose()` with the spaces swapped.
pub fn induced_vr_map(
    c: &Correspondence,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    source: Arc<SimplicialComplex>,
    r: f64,
) -> Result<VertexMap> {
    if source.vertex_count() != y.len() {
        return Err(Error::MismatchedComplexes("source complex is not on Y"));
    }
    let dis = distortion(c, x, y)?;
    if !(dis < r) {
        return Err(Error::DistortionExceedsScale { distortion: dis, scale: r });
    }
    let h = c.first_partner_of_each_y(y.len())?;
    let target = Arc::new(build_vr(x, r + source.scale(), source.max_dim()));
    VertexMap::new(source, target, h)
}

/// Maps for `Y ⊆ Z` with `r > 2 d_H(Y, Z)`: a nearest-point projection
/// `f̄: VR(Z; ε) -> VR(Y; r + ε)` and the inclusion `ι: VR(Y; r + ε) -> VR(Z; r + ε)`.
/// `source` must be `VR(Z; ε)`; `y` lists the indices of `Y` inside `Z`, and
/// vertex `k` of the middle complex is `z[y[k]]`.
pub fn nearest_point_vr_maps(
    z: &FiniteMetricSpace,
    y: &[usize],
    source: Arc<SimplicialComplex>,
    r: f64,
) -> Result<(VertexMap, VertexMap)> {
    if source.vertex_count() != z.len() {
        return Err(Error::MismatchedComplexes("source complex is not on Z"));
    }
    let dh = hausdorff_within(z, y)?;
    if !(2.0 * dh < r) {
        return Err(Error::HausdorffExceedsScale { doubled: 2.0 * dh, scale: r });
    }
    let projection: Vec<usize> = (0..z.len())
        .map(|p| {
            let mut best = 0;
            for k in 1..y.len() {
                if z.d(p, y[k]) < z.d(p, y[best]) {
                    best = k;
                }
            }
            best
        })
        .collect();
    let scale = r + source.scale();
    let y_space = z.subspace(y)?;
    let middle = Arc::new(build_vr(&y_space, scale, source.max_dim()));
    let outer = Arc::new(build_vr(z, scale, source.max_dim()));
    let f = VertexMap::new(source, middle.clone(), projection)?;
    let iota = VertexMap::new(middle, outer, y.to_vec())?;
    Ok((f, iota))
}
