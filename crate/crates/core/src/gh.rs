//! Correspondences, distortion, and exact Gromov–Hausdorff distance for small
//! finite metric spaces.
//!
//! The solver searches over pairs of maps `phi: X -> Y`, `psi: Y -> X` and
//! scores the correspondence `graph(phi) ∪ graph(psi)^T`. Every correspondence
//! contains one of this shape (keep one partner per point) and dropping pairs
//! never raises the distortion, so the minimum over this family is the
//! minimum over all correspondences.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::FiniteMetricSpace;

/// Default search budget for [`gh_exact`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A relation between the points of `X` and `Y`, stored as `(x, y)` index pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Correspondence {
    pairs: BTreeSet<(usize, usize)>,
}

impl Correspondence {
    /// Build and check that every point of both spaces is covered.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>, nx: usize, ny: usize) -> Result<Self> {
        let c = Self { pairs: pairs.into_iter().collect() };
        c.validate(nx, ny)?;
        Ok(c)
    }

    /// `graph(phi) ∪ graph(psi)^T`.
    pub fn from_maps(phi: &[usize], psi: &[usize]) -> Self {
        let mut pairs: BTreeSet<(usize, usize)> = phi.iter().enumerate().map(|(x, &y)| (x, y)).collect();
        pairs.extend(psi.iter().enumerate().map(|(y, &x)| (x, y)));
        Self { pairs }
    }

    pub fn identity(n: usize) -> Self {
        Self { pairs: (0..n).map(|i| (i, i)).collect() }
    }

    pub fn validate(&self, nx: usize, ny: usize) -> Result<()> {
        let mut seen_x = vec![false; nx];
        let mut seen_y = vec![false; ny];
        for &(x, y) in &self.pairs {
            if x >= nx || y >= ny {
                return Err(Error::InvalidCorrespondence(format!(
                    "pair ({x}, {y}) out of range for {nx} x {ny}"
                )));
            }
            seen_x[x] = true;
            seen_y[y] = true;
        }
        if let Some(x) = seen_x.iter().position(|s| !s) {
            return Err(Error::InvalidCorrespondence(format!("x = {x} has no partner")));
        }
        if let Some(y) = seen_y.iter().position(|s| !s) {
            return Err(Error::InvalidCorrespondence(format!("y = {y} has no partner")));
        }
        Ok(())
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(&(x, y))
    }

    /// The same relation read as a subset of `Y x X`.
    pub fn transpose(&self) -> Self {
        Self { pairs: self.pairs.iter().map(|&(x, y)| (y, x)).collect() }
    }

    /// For each `y`, the smallest `x` related to it: the lexicographically
    /// first choice of a map `Y -> X` inside the relation.
    pub fn first_partner_of_each_y(&self, ny: usize) -> Result<Vec<usize>> {
        let mut h = vec![usize::MAX; ny];
        for &(x, y) in &self.pairs {
            if y < ny && h[y] == usize::MAX {
                h[y] = x;
            }
        }
        match h.iter().position(|&x| x == usize::MAX) {
            Some(y) => Err(Error::InvalidCorrespondence(format!("y = {y} has no partner"))),
            None => Ok(h),
        }
    }
}

/// `max |d_X(x, x') - d_Y(y, y')|` over all pairs of related pairs.
pub fn distortion(c: &Correspondence, x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<f64> {
    c.validate(x.len(), y.len())?;
    let pairs: Vec<(usize, usize)> = c.pairs().collect();
    let mut worst: f64 = 0.0;
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for &(a2, b2) in &pairs[k + 1..] {
            worst = worst.max((x.d(a, a2) - y.d(b, b2)).abs());
        }
    }
    Ok(worst)
}

/// `|diam X - diam Y| / 2`, a lower bound on `d_GH(X, Y)`.
pub fn gh_lower_trivial(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<f64> {
    Ok((x.diameter()? - y.diameter()?).abs() / 2.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GHResult {
    /// `dis(C) / 2` for the best correspondence found.
    pub value: f64,
    pub optimal_correspondence: Correspondence,
    pub nodes_explored: u64,
    /// False when the node budget ran out; `value` is then only an upper bound.
    pub proven_optimal: bool,
}

/// Search settings for [`gh_exact_with`].
#[derive(Debug, Clone)]
pub struct GhOptions {
    pub node_budget: u64,
    /// Optional starting maps `(phi, psi)`; their distortion seeds the bound.
    pub warm_start: Option<(Vec<usize>, Vec<usize>)>,
}

impl Default for GhOptions {
    fn default() -> Self {
        Self { node_budget: DEFAULT_NODE_BUDGET, warm_start: None }
    }
}

/// Exact `d_GH(X, Y)` by branch and bound with the given node budget.
pub fn gh_exact(x: &FiniteMetricSpace, y: &FiniteMetricSpace, node_budget: u64) -> Result<GHResult> {
    gh_exact_with(x, y, &GhOptions { node_budget, warm_start: None })
}

/// One decision of the search: a point of `X` (choose `phi`) or of `Y`
/// (choose `psi`). Every choice adds a single related pair.
#[derive(Clone, Copy)]
enum Slot {
    Phi(usize),
    Psi(usize),
}

struct Problem<'a> {
    x: &'a FiniteMetricSpace,
    y: &'a FiniteMetricSpace,
    slots: Vec<Slot>,
}

impl Problem<'_> {
    fn domain(&self, slot: Slot) -> usize {
        match slot {
            Slot::Phi(_) => self.y.len(),
            Slot::Psi(_) => self.x.len(),
        }
    }

    fn pair(&self, slot: Slot, value: usize) -> (usize, usize) {
        match slot {
            Slot::Phi(a) => (a, value),
            Slot::Psi(b) => (value, b),
        }
    }

    fn cost(&self, p: (usize, usize), q: (usize, usize)) -> f64 {
        (self.x.d(p.0, q.0) - self.y.d(p.1, q.1)).abs()
    }
}

/// Search state: for every open slot, the distortion each candidate value
/// would add against the pairs fixed so far.
#[derive(Clone)]
struct Node {
    depth: usize,
    current: f64,
    pairs: Vec<(usize, usize)>,
    added: Vec<Vec<f64>>,
}

struct Shared {
    best_bits: AtomicU64,
    best: Mutex<(f64, Vec<(usize, usize)>)>,
    nodes: AtomicU64,
    budget: u64,
    exhausted: AtomicBool,
    floor: f64,
}

impl Shared {
    fn best(&self) -> f64 {
        f64::from_bits(self.best_bits.load(Ordering::Relaxed))
    }

    fn offer(&self, value: f64, pairs: &[(usize, usize)]) {
        let mut guard = self.best.lock().expect("best lock");
        if value < guard.0 {
            *guard = (value, pairs.to_vec());
            // nonnegative floats order like their bit patterns
            self.best_bits.fetch_min(value.to_bits(), Ordering::Relaxed);
        }
    }

    /// Count a node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    }

    fn done(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed) || self.best() <= self.floor
    }
}

fn slot_order(space: &FiniteMetricSpace) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..space.len()).collect();
    idx.sort_by(|&a, &b| space.eccentricity(b).total_cmp(&space.eccentricity(a)).then(a.cmp(&b)));
    idx
}

fn maps_distortion(problem: &Problem, phi: &[usize], psi: &[usize]) -> Result<f64> {
    distortion(&Correspondence::from_maps(phi, psi), problem.x, problem.y)
}

/// Exact `d_GH(X, Y)` with explicit search options.
pub fn gh_exact_with(x: &FiniteMetricSpace, y: &FiniteMetricSpace, opts: &GhOptions) -> Result<GHResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::Empty);
    }
    let mut slots: Vec<Slot> = slot_order(x).into_iter().map(Slot::Phi).collect();
    slots.extend(slot_order(y).into_iter().map(Slot::Psi));
    let problem = Problem { x, y, slots };

    // constant maps give an initial upper bound
    let (phi0, psi0) = match &opts.warm_start {
        Some((phi, psi)) => {
            if phi.len() != x.len() || psi.len() != y.len() {
                return Err(Error::InvalidCorrespondence("warm start has the wrong shape".into()));
            }
            (phi.clone(), psi.clone())
        }
        None => (vec![0; x.len()], vec![0; y.len()]),
    };
    let start = maps_distortion(&problem, &phi0, &psi0)?;
    let start_pairs: Vec<(usize, usize)> = Correspondence::from_maps(&phi0, &psi0).pairs().collect();

    let shared = Shared {
        best_bits: AtomicU64::new(start.to_bits()),
        best: Mutex::new((start, start_pairs)),
        nodes: AtomicU64::new(0),
        budget: opts.node_budget,
        exhausted: AtomicBool::new(false),
        floor: 2.0 * gh_lower_trivial(x, y)?,
    };

    let root = Node {
        depth: 0,
        current: 0.0,
        pairs: Vec::with_capacity(problem.slots.len()),
        added: problem.slots.iter().map(|&s| vec![0.0; problem.domain(s)]).collect(),
    };
    if !shared.done() {
        let first = problem.slots[0];
        (0..problem.domain(first)).into_par_iter().for_each(|v| {
            if let Some(child) = assign(&problem, &root, v) {
                if shared.tick() {
                    search(&problem, &shared, child);
                }
            }
        });
    }

    let (best, pairs) = shared.best.into_inner().expect("best lock");
    let optimal_correspondence = Correspondence::new(pairs, x.len(), y.len())?;
    let exhausted = shared.exhausted.load(Ordering::Relaxed);
    Ok(GHResult {
        value: best / 2.0,
        optimal_correspondence,
        nodes_explored: shared.nodes.load(Ordering::Relaxed).min(opts.node_budget),
        proven_optimal: !exhausted,
    })
}

/// Fix the next slot to `value` and propagate the added costs.
fn assign(problem: &Problem, node: &Node, value: usize) -> Option<Node> {
    let slot = problem.slots[node.depth];
    let pair = problem.pair(slot, value);
    let mut child = Node {
        depth: node.depth + 1,
        current: node.current.max(node.added[node.depth][value]),
        pairs: node.pairs.clone(),
        added: node.added.clone(),
    };
    child.pairs.push(pair);
    for k in child.depth..problem.slots.len() {
        let s = problem.slots[k];
        for (v, cell) in child.added[k].iter_mut().enumerate() {
            let c = problem.cost(problem.pair(s, v), pair);
            if c > *cell {
                *cell = c;
            }
        }
    }
    Some(child)
}

fn lower_bound(node: &Node) -> f64 {
    node.added[node.depth..]
        .iter()
        .map(|row| row.iter().copied().fold(f64::INFINITY, f64::min))
        .fold(node.current, f64::max)
}

fn search(problem: &Problem, shared: &Shared, node: Node) {
    if shared.done() || lower_bound(&node) >= shared.best() {
        return;
    }
    if node.depth == problem.slots.len() {
        shared.offer(node.current, &node.pairs);
        return;
    }
    let row = &node.added[node.depth];
    let mut order: Vec<usize> = (0..row.len()).collect();
    order.sort_by(|&a, &b| row[a].total_cmp(&row[b]).then(a.cmp(&b)));
    for v in order {
        if node.current.max(row[v]) >= shared.best() {
            // candidates are sorted, the rest are no better
            break;
        }
        if !shared.tick() {
            return;
        }
        if let Some(child) = assign(problem, &node, v) {
            search(problem, shared, child);
        }
        if shared.done() {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn two_point(a: f64) -> FiniteMetricSpace {
        FiniteMetricSpace::from_matrix(vec![vec![0.0, a], vec![a, 0.0]]).unwrap()
    }

    fn line(points: &[f64]) -> FiniteMetricSpace {
        FiniteMetricSpace::from_matrix(
            points.iter().map(|a| points.iter().map(|b| (a - b).abs()).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn correspondence_coverage() {
        assert!(Correspondence::new([(0, 0)], 2, 1).is_err());
        assert!(Correspondence::new([(0, 0), (1, 0)], 2, 1).is_ok());
        assert!(Correspondence::new([(0, 3)], 1, 1).is_err());
        let c = Correspondence::new([(1, 0), (0, 1), (1, 1)], 2, 2).unwrap();
        assert_eq!(c.first_partner_of_each_y(2).unwrap(), vec![1, 0]);
        assert!(c.transpose().contains(0, 1));
    }

    #[test]
    fn distortion_examples() {
        let x = line(&[0.0, 1.0, 3.0]);
        assert_eq!(distortion(&Correspondence::identity(3), &x, &x).unwrap(), 0.0);
        let a = two_point(2.0);
        let b = two_point(5.0);
        let c = Correspondence::identity(2);
        assert_abs_diff_eq!(distortion(&c, &a, &b).unwrap(), 3.0);
        // the full relation X x Y
        let full = Correspondence::new((0..2).flat_map(|i| (0..2).map(move |j| (i, j))), 2, 2).unwrap();
        assert_abs_diff_eq!(distortion(&full, &a, &b).unwrap(), 5.0);
        assert!(distortion(&Correspondence::identity(1), &a, &b).is_err());
    }

    #[test]
    fn same_space_is_zero() {
        let x = line(&[0.0, 1.0, 3.0, 7.0]);
        let r = gh_exact(&x, &x, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.proven_optimal);
    }

    #[test]
    fn two_point_spaces() {
        let r = gh_exact(&two_point(1.0), &two_point(4.0), DEFAULT_NODE_BUDGET).unwrap();
        assert_abs_diff_eq!(r.value, 1.5);
        assert_abs_diff_eq!(
            distortion(&r.optimal_correspondence, &two_point(1.0), &two_point(4.0)).unwrap() / 2.0,
            r.value
        );
    }

    #[test]
    fn singleton_against_anything() {
        let one = line(&[0.0]);
        let y = line(&[0.0, 2.0, 2.5, 6.0]);
        let r = gh_exact(&one, &y, DEFAULT_NODE_BUDGET).unwrap();
        assert_abs_diff_eq!(r.value, 3.0);
        assert_abs_diff_eq!(gh_lower_trivial(&one, &y).unwrap(), 3.0);
    }

    #[test]
    fn trivial_lower_bound() {
        assert_eq!(gh_lower_trivial(&two_point(2.0), &two_point(2.0)).unwrap(), 0.0);
        assert_abs_diff_eq!(gh_lower_trivial(&two_point(2.0), &two_point(5.0)).unwrap(), 1.5);
    }

    #[test]
    fn empty_space_is_rejected() {
        let empty = FiniteMetricSpace::from_matrix(vec![]).unwrap();
        assert!(matches!(gh_exact(&empty, &two_point(1.0), 10), Err(Error::Empty)));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let x = line(&[0.0, 1.0, 3.0, 7.0, 8.5]);
        let y = line(&[0.0, 2.0, 2.5, 6.0, 9.0]);
        let r = gh_exact(&x, &y, 3).unwrap();
        assert!(!r.proven_optimal);
        let exact = gh_exact(&x, &y, DEFAULT_NODE_BUDGET).unwrap();
        assert!(exact.proven_optimal);
        assert!(r.value >= exact.value);
    }

    #[test]
    fn warm_start_shape_is_checked() {
        let opts = GhOptions { node_budget: 100, warm_start: Some((vec![0], vec![0])) };
        assert!(gh_exact_with(&two_point(1.0), &two_point(2.0), &opts).is_err());
    }
}
