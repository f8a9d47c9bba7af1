use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simplex as a strictly increasing list of vertex indices.
pub type Simplex = Vec<usize>;

/// A finite simplicial complex at a single scale, truncated at `max_dim`.
///
/// Simplices are stored per dimension in lexicographic order; that order
/// also fixes the basis of every chain group.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "ComplexSpec", into = "ComplexSpec")]
pub struct SimplicialComplex {
    vertex_count: usize,
    max_dim: usize,
    scale: f64,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.max_dim == other.max_dim
            && self.scale.to_bits() == other.scale.to_bits()
            && self.simplices == other.simplices
    }
}

impl SimplicialComplex {
    /// Assemble from per-dimension lists that are already sorted, deduplicated
    /// and closed under faces. Only builders in this crate use it.
    pub(crate) fn from_sorted_parts(
        vertex_count: usize,
        max_dim: usize,
        scale: f64,
        mut simplices: Vec<Vec<Simplex>>,
    ) -> Self {
        simplices.resize(max_dim + 1, Vec::new());
        let index = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Self { vertex_count, max_dim, scale, simplices, index }
    }

    /// Build from an arbitrary list of simplices, which must already be closed
    /// under taking faces. Vertex order inside a simplex does not matter.
    pub fn from_simplices(
        vertex_count: usize,
        max_dim: usize,
        scale: f64,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let levels = Self::bucket(vertex_count, max_dim, simplices)?;
        let complex = Self::from_sorted_parts(vertex_count, max_dim, scale, levels);
        complex.validate()?;
        Ok(complex)
    }

    /// Smallest complex containing the given simplices and all their faces.
    pub fn closure(
        vertex_count: usize,
        max_dim: usize,
        scale: f64,
        generators: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let mut all = Vec::new();
        for s in generators {
            let mut s = s;
            s.sort_unstable();
            s.dedup();
            if s.len() > max_dim + 1 {
                return Err(Error::InvalidComplex(format!(
                    "simplex {s:?} exceeds max_dim {max_dim}"
                )));
            }
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                all.push((0..k).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect());
            }
        }
        let levels = Self::bucket(vertex_count, max_dim, all)?;
        Ok(Self::from_sorted_parts(vertex_count, max_dim, scale, levels))
    }

    fn bucket(
        vertex_count: usize,
        max_dim: usize,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Result<Vec<Vec<Simplex>>> {
        let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];
        for mut s in simplices {
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("repeated vertex in {s:?}")));
            }
            if let Some(&v) = s.last() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { index: v, count: vertex_count });
                }
            }
            let dim = s.len() - 1;
            if dim > max_dim {
                return Err(Error::InvalidComplex(format!("simplex {s:?} exceeds max_dim {max_dim}")));
            }
            levels[dim].push(s);
        }
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        Ok(levels)
    }

    /// Check face closure and the ordering invariants.
    pub fn validate(&self) -> Result<()> {
        for (dim, level) in self.simplices.iter().enumerate() {
            for w in level.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidComplex(format!("dimension {dim} not strictly sorted")));
                }
            }
            for s in level {
                if s.len() != dim + 1 || s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidComplex(format!("malformed simplex {s:?}")));
                }
                if dim == 0 {
                    continue;
                }
                for face in faces(s) {
                    if !self.index[dim - 1].contains_key(&face) {
                        return Err(Error::InvalidComplex(format!(
                            "face {face:?} of {s:?} is missing"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Simplices of dimension `dim`, lexicographically sorted.
    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        self.simplices.get(dim).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.simplices(dim).len()
    }

    pub fn total_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Highest dimension that actually contains simplices.
    pub fn top_dim(&self) -> Option<usize> {
        self.simplices.iter().rposition(|l| !l.is_empty())
    }

    /// Position of a (sorted) simplex within its dimension.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let dim = simplex.len().checked_sub(1)?;
        self.index.get(dim)?.get(simplex).copied()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.index_of(simplex).is_some()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    /// True when every simplex of `self` is a simplex of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.iter().all(|s| other.contains(s))
    }
}

/// Codimension-one faces of a simplex, dropping one vertex at a time.
pub fn faces(s: &[usize]) -> impl Iterator<Item = Simplex> + '_ {
    (0..s.len()).map(move |drop| {
        s.iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, &v)| v)
            .collect()
    })
}

#[derive(Serialize, Deserialize)]
struct ComplexSpec {
    scale: f64,
    simplices: BTreeMap<usize, Vec<Simplex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_dim: Option<usize>,
}

impl TryFrom<ComplexSpec> for SimplicialComplex {
    type Error = Error;

    fn try_from(spec: ComplexSpec) -> Result<Self> {
        let all: Vec<Simplex> = spec.simplices.into_values().flatten().collect();
        let vertex_count = spec
            .vertex_count
            .unwrap_or_else(|| all.iter().flatten().max().map_or(0, |&v| v + 1));
        let max_dim = spec
            .max_dim
            .unwrap_or_else(|| all.iter().map(|s| s.len().saturating_sub(1)).max().unwrap_or(0));
        Self::from_simplices(vertex_count, max_dim, spec.scale, all)
    }
}

impl From<SimplicialComplex> for ComplexSpec {
    fn from(c: SimplicialComplex) -> Self {
        ComplexSpec {
            scale: c.scale,
            simplices: c.simplices.into_iter().enumerate().collect(),
            vertex_count: Some(c.vertex_count),
            max_dim: Some(c.max_dim),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_adds_faces() {
        let c = SimplicialComplex::closure(4, 2, 1.0, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(c.count(0), 3);
        assert_eq!(c.count(1), 3);
        assert_eq!(c.count(2), 1);
        assert_eq!(c.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        c.validate().unwrap();
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn from_simplices_rejects_open_sets() {
        let err = SimplicialComplex::from_simplices(3, 1, 1.0, vec![vec![0], vec![0, 1]]);
        assert!(matches!(err, Err(Error::InvalidComplex(_))));
        let err = SimplicialComplex::from_simplices(2, 1, 1.0, vec![vec![0, 0]]);
        assert!(err.is_err());
        let err = SimplicialComplex::from_simplices(2, 0, 1.0, vec![vec![5]]);
        assert!(matches!(err, Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn json_round_trip() {
        let c = SimplicialComplex::closure(5, 3, 0.5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["simplices"]["2"], serde_json::json!([[0, 1, 2]]));
        let back: SimplicialComplex = serde_json::from_value(json).unwrap();
        assert_eq!(back, c);
        let minimal: SimplicialComplex =
            serde_json::from_str(r#"{"scale":1.0,"simplices":{"0":[[0],[1]],"1":[[0,1]]}}"#).unwrap();
        assert_eq!(minimal.vertex_count(), 2);
        assert_eq!(minimal.max_dim(), 1);
    }
}
