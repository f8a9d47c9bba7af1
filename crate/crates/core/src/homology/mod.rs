//! Simplicial homology with `Z/2` coefficients.
//!
//! Boundary matrices are reduced column by column (dimension first, then
//! lexicographic simplex order) with bitset columns. For degree `k` the
//! reduction of `∂_k` is tracked so that zero columns yield explicit cycles;
//! a cycle whose simplex is not a pivot of the reduced `∂_{k+1}` is a basis
//! element of `H_k`. Basis cycles and reduced boundary columns have distinct
//! lowest entries, which is what makes [`Homology::coordinates`] a plain
//! elimination.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::complex::{faces, Simplex, SimplicialComplex, VertexMap};
use crate::error::{Error, Result};

/// Betti numbers `b_0, ..., b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn get(&self, dim: usize) -> usize {
        self.0.get(dim).copied().unwrap_or(0)
    }
}

/// Reduced boundary matrix `∂_k`.
struct Reduced {
    columns: Vec<BitSet>,
    /// For each row (a `(k-1)`-simplex), the column whose lowest entry it is.
    pivot_column: Vec<Option<usize>>,
    /// Column operations applied, when tracked.
    ops: Option<Vec<BitSet>>,
    rank: usize,
}

fn boundary_columns(complex: &SimplicialComplex, k: usize) -> Vec<BitSet> {
    let rows = complex.count(k - 1);
    complex
        .simplices(k)
        .iter()
        .map(|s| {
            BitSet::from_indices(
                rows,
                faces(s).map(|f| complex.index_of(&f).expect("complex is closed under faces")),
            )
        })
        .collect()
}

fn reduce(mut columns: Vec<BitSet>, rows: usize, track: bool) -> Reduced {
    let n = columns.len();
    let mut ops: Option<Vec<BitSet>> = track.then(|| (0..n).map(|j| BitSet::from_indices(n, [j])).collect());
    let mut pivot_column: Vec<Option<usize>> = vec![None; rows];
    let mut rank = 0;
    for j in 0..n {
        while let Some(low) = columns[j].highest_one() {
            match pivot_column[low] {
                Some(i) => {
                    let (head, tail) = columns.split_at_mut(j);
                    tail[0].xor_assign(&head[i]);
                    if let Some(ops) = ops.as_mut() {
                        let (head, tail) = ops.split_at_mut(j);
                        tail[0].xor_assign(&head[i]);
                    }
                }
                None => {
                    pivot_column[low] = Some(j);
                    rank += 1;
                    break;
                }
            }
        }
    }
    if !track {
        ops = None;
    }
    Reduced { columns, pivot_column, ops, rank }
}

/// Homology of one complex in degrees `0..=up_to`, with the reductions kept
/// around for basis and coordinate queries.
pub struct Homology<'a> {
    complex: &'a SimplicialComplex,
    up_to: usize,
    /// `boundaries[k]` is the reduced `∂_k` for `k = 1..=up_to + 1`; index 0 unused.
    boundaries: Vec<Option<Reduced>>,
    bases: Vec<Basis>,
}

/// `H_k` basis: representative cycles indexed by their lowest simplex.
struct Basis {
    cycles: Vec<BitSet>,
    by_low: HashMap<usize, usize>,
}

impl<'a> Homology<'a> {
    pub fn new(complex: &'a SimplicialComplex, up_to: usize) -> Result<Self> {
        if up_to + 1 > complex.max_dim() {
            return Err(Error::InsufficientSkeleton {
                requested: up_to,
                needed: up_to + 1,
                built: complex.max_dim(),
            });
        }
        let mut boundaries: Vec<Option<Reduced>> = vec![None];
        for k in 1..=up_to + 1 {
            let cols = boundary_columns(complex, k);
            boundaries.push(Some(reduce(cols, complex.count(k - 1), k <= up_to)));
        }
        let mut bases = Vec::with_capacity(up_to + 1);
        for k in 0..=up_to {
            let n = complex.count(k);
            let upper = boundaries[k + 1].as_ref().expect("reduced");
            let mut cycles = Vec::new();
            let mut by_low = HashMap::new();
            for j in 0..n {
                let is_cycle = match &boundaries[k] {
                    None => true,
                    Some(red) => red.columns[j].is_zero(),
                };
                if is_cycle && upper.pivot_column[j].is_none() {
                    let z = match &boundaries[k] {
                        None => BitSet::from_indices(n, [j]),
                        Some(red) => red.ops.as_ref().expect("tracked")[j].clone(),
                    };
                    by_low.insert(j, cycles.len());
                    cycles.push(z);
                }
            }
            bases.push(Basis { cycles, by_low });
        }
        Ok(Self { complex, up_to, boundaries, bases })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.complex
    }

    pub fn betti(&self) -> BettiVector {
        BettiVector(self.bases.iter().map(|b| b.cycles.len()).collect())
    }

    /// Rank of `∂_k` for `1 <= k <= up_to + 1`.
    pub fn boundary_rank(&self, k: usize) -> Option<usize> {
        self.boundaries.get(k)?.as_ref().map(|r| r.rank)
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if dim > self.up_to {
            return Err(Error::InsufficientSkeleton {
                requested: dim,
                needed: dim + 1,
                built: self.up_to + 1,
            });
        }
        Ok(())
    }

    /// Representative cycles of the `H_dim` basis, as simplex lists.
    pub fn basis(&self, dim: usize) -> Result<Vec<Vec<Simplex>>> {
        self.check_dim(dim)?;
        let level = self.complex.simplices(dim);
        Ok(self.bases[dim]
            .cycles
            .iter()
            .map(|z| z.ones().map(|i| level[i].clone()).collect())
            .collect())
    }

    /// Coordinates of a `dim`-cycle in the homology basis; errors if the
    /// chain is not a cycle.
    pub fn coordinates(&self, dim: usize, chain: &BitSet) -> Result<BitSet> {
        self.check_dim(dim)?;
        let basis = &self.bases[dim];
        let upper = self.boundaries[dim + 1].as_ref().expect("reduced");
        let mut c = chain.clone();
        let mut coords = BitSet::new(basis.cycles.len());
        while let Some(low) = c.highest_one() {
            if let Some(col) = upper.pivot_column[low] {
                c.xor_assign(&upper.columns[col]);
            } else if let Some(&b) = basis.by_low.get(&low) {
                coords.toggle(b);
                c.xor_assign(&basis.cycles[b]);
            } else {
                return Err(Error::InvalidComplex(format!("chain in degree {dim} is not a cycle")));
            }
        }
        Ok(coords)
    }

    /// Image of a `dim`-chain under a vertex map into `target`'s complex;
    /// collapsed simplices contribute zero.
    fn push_chain(&self, target: &Homology, image: &[usize], dim: usize, chain: &BitSet) -> Result<BitSet> {
        let level = self.complex.simplices(dim);
        let mut out = BitSet::new(target.complex.count(dim));
        for i in chain.ones() {
            let mut s: Simplex = level[i].iter().map(|&v| image[v]).collect();
            s.sort_unstable();
            s.dedup();
            if s.len() < dim + 1 {
                continue;
            }
            let t = target.complex.index_of(&s).ok_or(Error::NotSimplicial)?;
            out.toggle(t);
        }
        Ok(out)
    }

    /// Matrix of the map on `H_dim` induced by a vertex map `image` from this
    /// complex into `target`'s complex.
    pub fn induced(&self, target: &Homology, image: &[usize], dim: usize) -> Result<HomologyMap> {
        self.check_dim(dim)?;
        target.check_dim(dim)?;
        if image.len() != self.complex.vertex_count() {
            return Err(Error::MismatchedComplexes("image length differs from source vertex count"));
        }
        if let Some(&bad) = image.iter().find(|&&v| v >= target.complex.vertex_count()) {
            return Err(Error::VertexOutOfRange { index: bad, count: target.complex.vertex_count() });
        }
        // images of boundaries must be boundaries
        let dim_level = self.complex.simplices(dim + 1);
        for tau in dim_level {
            let bd = BitSet::from_indices(
                self.complex.count(dim),
                faces(tau).map(|f| self.complex.index_of(&f).expect("closed")),
            );
            let pushed = self.push_chain(target, image, dim, &bd)?;
            if !target.coordinates(dim, &pushed)?.is_zero() {
                return Err(Error::NotSimplicial);
            }
        }
        let columns = self.bases[dim]
            .cycles
            .iter()
            .map(|z| {
                let pushed = self.push_chain(target, image, dim, z)?;
                target.coordinates(dim, &pushed)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomologyMap {
            dim,
            target_rank: target.bases[dim].cycles.len(),
            columns,
            source_basis: self.basis(dim)?,
            target_basis: target.basis(dim)?,
        })
    }
}

/// Betti numbers in degrees `0..=up_to`; needs simplices up to `up_to + 1`.
pub fn betti_numbers(k: &SimplicialComplex, up_to: usize) -> Result<BettiVector> {
    Ok(Homology::new(k, up_to)?.betti())
}

/// A linear map `H_dim(K) -> H_dim(L)` over `Z/2`, one column per source
/// basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct HomologyMap {
    pub dim: usize,
    target_rank: usize,
    columns: Vec<BitSet>,
    pub source_basis: Vec<Vec<Simplex>>,
    pub target_basis: Vec<Vec<Simplex>>,
}

impl HomologyMap {
    pub fn source_rank(&self) -> usize {
        self.columns.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    /// Entry in row `i` (target basis) and column `j` (source basis).
    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.columns[j].get(i)
    }

    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.target_rank)
            .map(|i| (0..self.columns.len()).map(|j| self.entry(i, j) as u8).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let rows = self.target_rank;
        reduce(self.columns.clone(), rows, false).rank
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_rank()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BitSet::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.target_rank == self.columns.len()
            && self.columns.iter().enumerate().all(|(j, c)| c.ones().eq([j]))
    }

    /// `next ∘ self` as a matrix product.
    pub fn then(&self, next: &HomologyMap) -> Result<HomologyMap> {
        if self.target_rank != next.source_rank() || self.dim != next.dim {
            return Err(Error::MismatchedComplexes("homology maps do not compose"));
        }
        let columns = self
            .columns
            .iter()
            .map(|c| {
                let mut out = BitSet::new(next.target_rank);
                for i in c.ones() {
                    out.xor_assign(&next.columns[i]);
                }
                out
            })
            .collect();
        Ok(HomologyMap {
            dim: self.dim,
            target_rank: next.target_rank,
            columns,
            source_basis: self.source_basis.clone(),
            target_basis: next.target_basis.clone(),
        })
    }
}

/// Map on `H_dim` induced by a simplicial vertex map.
pub fn induced_map(f: &VertexMap, dim: usize) -> Result<HomologyMap> {
    if !crate::complex::check_simplicial(f)? {
        return Err(Error::NotSimplicial);
    }
    let source = Homology::new(f.source(), dim)?;
    let target = Homology::new(f.target(), dim)?;
    source.induced(&target, f.image(), dim)
}

/// True iff the vertex-wise inclusion `K_small -> K_big` is an isomorphism
/// on `H_dim`.
pub fn fundamental_class_survives(
    small: &SimplicialComplex,
    big: &SimplicialComplex,
    dim: usize,
) -> Result<bool> {
    let source = Homology::new(small, dim)?;
    let target = Homology::new(big, dim)?;
    class_survives(&source, &target, dim)
}

/// [`fundamental_class_survives`] on precomputed homology.
pub fn class_survives(source: &Homology, target: &Homology, dim: usize) -> Result<bool> {
    let (small, big) = (source.complex(), target.complex());
    if small.vertex_count() > big.vertex_count() || !small.is_subcomplex_of(big) {
        return Err(Error::NotSimplicial);
    }
    let image: Vec<usize> = (0..small.vertex_count()).collect();
    let map = source.induced(target, &image, dim)?;
    Ok(map.is_injective() && map.source_rank() == map.target_rank())
}
