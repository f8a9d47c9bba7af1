use hausdorff_gh::gh::{distortion, gh_exact, gh_exact_with, gh_lower_trivial, Correspondence, GhOptions};
use hausdorff_gh::metric::{hausdorff_subsets, AmbientManifold, FiniteMetricSpace};
use hausdorff_gh::sampling::Sampler;
use proptest::prelude::*;

const BUDGET: u64 = 10_000_000;

/// `min dis(C) / 2` over every subset `C` of `X x Y` that covers both sides.
fn brute_force(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> f64 {
    let pairs: Vec<(usize, usize)> =
        (0..x.len()).flat_map(|i| (0..y.len()).map(move |j| (i, j))).collect();
    let mut best = f64::INFINITY;
    let mut chosen = Vec::new();
    walk(x, y, &pairs, 0, &mut chosen, 0.0, &mut best);
    best / 2.0
}

fn walk(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    pairs: &[(usize, usize)],
    at: usize,
    chosen: &mut Vec<(usize, usize)>,
    dis: f64,
    best: &mut f64,
) {
    if at == pairs.len() {
        let covers_x = (0..x.len()).all(|i| chosen.iter().any(|p| p.0 == i));
        let covers_y = (0..y.len()).all(|j| chosen.iter().any(|p| p.1 == j));
        if covers_x && covers_y && dis < *best {
            *best = dis;
        }
        return;
    }
    walk(x, y, pairs, at + 1, chosen, dis, best);
    let (i, j) = pairs[at];
    let added = chosen
        .iter()
        .map(|&(a, b)| (x.d(i, a) - y.d(j, b)).abs())
        .fold(0.0, f64::max);
    chosen.push((i, j));
    walk(x, y, pairs, at + 1, chosen, dis.max(added), best);
    chosen.pop();
}

fn random_space(s: &mut Sampler, max_points: usize) -> FiniteMetricSpace {
    let kinds = [
        AmbientManifold::standard_circle(),
        AmbientManifold::flat_torus(vec![1.0, 1.0]).unwrap(),
        AmbientManifold::euclidean(2).unwrap(),
    ];
    let m = &kinds[s.below(kinds.len())];
    let n = 1 + s.below(max_points);
    s.points(m, n).unwrap().to_metric_space()
}

#[test]
fn branch_and_bound_matches_subset_enumeration() {
    let mut s = Sampler::new(31);
    for _ in 0..120 {
        let x = random_space(&mut s, 4);
        let y = random_space(&mut s, 4);
        let exact = gh_exact(&x, &y, BUDGET).unwrap();
        assert!(exact.proven_optimal);
        assert_eq!(exact.value, brute_force(&x, &y));
        assert_eq!(
            exact.value,
            distortion(&exact.optimal_correspondence, &x, &y).unwrap() / 2.0
        );
    }
}

#[test]
fn symmetric_and_zero_on_the_diagonal() {
    let mut s = Sampler::new(32);
    for _ in 0..100 {
        let x = random_space(&mut s, 5);
        let y = random_space(&mut s, 5);
        assert_eq!(gh_exact(&x, &y, BUDGET).unwrap().value, gh_exact(&y, &x, BUDGET).unwrap().value);
        assert_eq!(gh_exact(&x, &x, BUDGET).unwrap().value, 0.0);
    }
}

#[test]
fn triangle_inequality() {
    let mut s = Sampler::new(33);
    for _ in 0..60 {
        let spaces: Vec<FiniteMetricSpace> = (0..3).map(|_| random_space(&mut s, 4)).collect();
        let d = |a: usize, b: usize| gh_exact(&spaces[a], &spaces[b], BUDGET).unwrap().value;
        assert!(d(0, 2) <= d(0, 1) + d(1, 2) + 1e-12);
    }
}

#[test]
fn dominated_by_hausdorff_and_above_trivial_bound() {
    let m = AmbientManifold::standard_circle();
    let mut s = Sampler::new(34);
    for _ in 0..100 {
        let (nx, ny) = (1 + s.below(6), 1 + s.below(6));
        let x = s.points(&m, nx).unwrap();
        let y = s.points(&m, ny).unwrap();
        let (mx, my) = (x.to_metric_space(), y.to_metric_space());
        let g = gh_exact(&mx, &my, BUDGET).unwrap();
        assert!(g.proven_optimal);
        assert!(g.value <= hausdorff_subsets(&x, &y).unwrap() + 1e-12);
        assert!(g.value >= gh_lower_trivial(&mx, &my).unwrap() - 1e-12);
    }
}

#[test]
fn warm_start_does_not_change_the_answer() {
    let mut s = Sampler::new(35);
    for _ in 0..50 {
        let x = random_space(&mut s, 5);
        let y = random_space(&mut s, 5);
        let phi: Vec<usize> = (0..x.len()).map(|_| s.below(y.len())).collect();
        let psi: Vec<usize> = (0..y.len()).map(|_| s.below(x.len())).collect();
        let warm = gh_exact_with(&x, &y, &GhOptions { node_budget: BUDGET, warm_start: Some((phi, psi)) })
            .unwrap();
        assert_eq!(warm.value, gh_exact(&x, &y, BUDGET).unwrap().value);
    }
}

#[test]
fn exhausted_budget_is_an_upper_bound() {
    let mut s = Sampler::new(36);
    for _ in 0..20 {
        let x = random_space(&mut s, 6);
        let y = random_space(&mut s, 6);
        let full = gh_exact(&x, &y, BUDGET).unwrap();
        let cut = gh_exact(&x, &y, 3).unwrap();
        assert!(cut.value >= full.value);
        assert!(cut.optimal_correspondence.validate(x.len(), y.len()).is_ok());
        if !cut.proven_optimal {
            assert!(cut.nodes_explored >= 3);
        }
    }
}

proptest! {
    #[test]
    fn distortion_of_identity_is_zero(angles in prop::collection::vec(0.0f64..std::f64::consts::TAU, 1..8)) {
        let m = AmbientManifold::standard_circle();
        let x = hausdorff_gh::metric::FiniteSubset::from_angles(m, &angles).unwrap().to_metric_space();
        prop_assert_eq!(distortion(&Correspondence::identity(x.len()), &x, &x).unwrap(), 0.0);
    }
}
