//! Vietoris–Rips and ambient Čech complexes at a single scale.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::simplicial::{Simplex, SimplicialComplex};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::metric::{FiniteMetricSpace, FiniteSubset};
use crate::CMP_SLACK;

/// `VR(X; r)`: every subset of at most `max_dim + 1` points with diameter
/// strictly below `r`.
///
/// Built by clique expansion of the `< r` proximity graph. Each vertex seeds
/// the cliques whose smallest vertex it is, so per-vertex results concatenate
/// into lexicographic order.
pub fn build_vr(x: &FiniteMetricSpace, r: f64, max_dim: usize) -> SimplicialComplex {
    let n = x.len();
    if !(r > 0.0) {
        return SimplicialComplex::from_sorted_parts(n, max_dim, r, Vec::new());
    }
    let adjacency: Vec<BitSet> = (0..n)
        .map(|i| BitSet::from_indices(n, (0..n).filter(|&j| j != i && x.d(i, j) < r)))
        .collect();

    let per_vertex: Vec<Vec<Vec<Simplex>>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];
            levels[0].push(vec![v]);
            let mut candidates = adjacency[v].clone();
            candidates.clear_through(v);
            expand(&adjacency, vec![v], candidates, max_dim, &mut levels);
            levels
        })
        .collect();

    let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];
    for part in per_vertex {
        for (dim, mut simplices) in part.into_iter().enumerate() {
            levels[dim].append(&mut simplices);
        }
    }
    SimplicialComplex::from_sorted_parts(n, max_dim, r, levels)
}

fn expand(
    adjacency: &[BitSet],
    simplex: Simplex,
    candidates: BitSet,
    max_dim: usize,
    levels: &mut [Vec<Simplex>],
) {
    let dim = simplex.len() - 1;
    if dim < max_dim {
        for u in candidates.ones() {
            let mut next = candidates.clone();
            next.clear_through(u);
            next.and_assign(&adjacency[u]);
            let mut child = simplex.clone();
            child.push(u);
            // preorder keeps each dimension lexicographic
            levels[dim + 1].push(child.clone());
            expand(adjacency, child, next, max_dim, levels);
        }
    }
}

/// Exact ambient Čech complex of a circle subset at radius `r`, which equals
/// `VR(X; 2r)` as long as `2r` stays below a third of the circumference.
pub fn build_cech_circle(x: &FiniteSubset, r: f64, max_dim: usize) -> Result<SimplicialComplex> {
    let c = x
        .manifold()
        .circumference()
        .ok_or(Error::UnsupportedManifold("circle Čech complexes"))?;
    let limit = c / 3.0;
    if !(2.0 * r < limit - CMP_SLACK) {
        return Err(Error::ScaleBoundViolated { doubled: 2.0 * r, limit });
    }
    let vr = build_vr(&x.to_metric_space(), 2.0 * r, max_dim);
    Ok(relabel_scale(vr, r))
}

fn relabel_scale(c: SimplicialComplex, scale: f64) -> SimplicialComplex {
    let levels = (0..=c.max_dim()).map(|d| c.simplices(d).to_vec()).collect();
    SimplicialComplex::from_sorted_parts(c.vertex_count(), c.max_dim(), scale, levels)
}

/// Čech complex of radius `r` with the ambient space replaced by a finite
/// witness set: a simplex is present when one witness lies within `r` of
/// all its vertices. This can only miss simplices of the true ambient
/// complex, never add any.
pub fn build_cech_witness(
    x: &FiniteSubset,
    r: f64,
    witnesses: &FiniteSubset,
    max_dim: usize,
) -> Result<SimplicialComplex> {
    if x.manifold() != witnesses.manifold() {
        return Err(Error::ManifoldMismatch);
    }
    if witnesses.is_empty() {
        return Err(Error::Empty);
    }
    let covers: BTreeSet<Vec<usize>> = witnesses
        .points()
        .par_iter()
        .map(|w| (0..x.len()).filter(|&i| x.d_to(i, w) < r).collect::<Vec<_>>())
        .filter(|s: &Vec<usize>| !s.is_empty())
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let mut found: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); max_dim + 1];
    for cover in &covers {
        subsets_up_to(cover, max_dim + 1, &mut Vec::new(), 0, &mut found);
    }
    let levels = found.into_iter().map(|s| s.into_iter().collect()).collect();
    Ok(SimplicialComplex::from_sorted_parts(x.len(), max_dim, r, levels))
}

fn subsets_up_to(
    items: &[usize],
    max_len: usize,
    current: &mut Vec<usize>,
    start: usize,
    out: &mut [BTreeSet<Simplex>],
) {
    for i in start..items.len() {
        current.push(items[i]);
        out[current.len() - 1].insert(current.clone());
        if current.len() < max_len {
            subsets_up_to(items, max_len, current, i + 1, out);
        }
        current.pop();
    }
}
