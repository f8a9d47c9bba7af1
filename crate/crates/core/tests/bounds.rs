use std::f64::consts::PI;

use hausdorff_gh::bounds::{
    alpha, circumradius, jung_diameter_lower, tau, thm1b, thm2a, thm2b, thm3b, thm4, BoundInputs,
};
use hausdorff_gh::gh::gh_exact;
use hausdorff_gh::metric::{covering_radius_circle, hausdorff_subsets, AmbientManifold, FiniteSubset, Point};
use hausdorff_gh::sampling::Sampler;

fn circumcircle(a: &[f64], b: &[f64], c: &[f64]) -> Option<([f64; 2], f64)> {
    let d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
    if d.abs() < 1e-14 {
        return None;
    }
    let sq = |p: &[f64]| p[0] * p[0] + p[1] * p[1];
    let ux = (sq(a) * (b[1] - c[1]) + sq(b) * (c[1] - a[1]) + sq(c) * (a[1] - b[1])) / d;
    let uy = (sq(a) * (c[0] - b[0]) + sq(b) * (a[0] - c[0]) + sq(c) * (b[0] - a[0])) / d;
    Some(([ux, uy], ((a[0] - ux).powi(2) + (a[1] - uy).powi(2)).sqrt()))
}

/// Smallest circle over all candidate circles through two or three points.
fn brute_circumradius(pts: &[Vec<f64>]) -> f64 {
    let covers = |c: [f64; 2], r: f64| {
        pts.iter().all(|p| ((p[0] - c[0]).powi(2) + (p[1] - c[1]).powi(2)).sqrt() <= r + 1e-9)
    };
    let mut best = if pts.len() == 1 { 0.0 } else { f64::INFINITY };
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let c = [(pts[i][0] + pts[j][0]) / 2.0, (pts[i][1] + pts[j][1]) / 2.0];
            let r = ((pts[i][0] - c[0]).powi(2) + (pts[i][1] - c[1]).powi(2)).sqrt();
            if r < best && covers(c, r) {
                best = r;
            }
            for k in j + 1..pts.len() {
                if let Some((c, r)) = circumcircle(&pts[i], &pts[j], &pts[k]) {
                    if r < best && covers(c, r) {
                        best = r;
                    }
                }
            }
        }
    }
    best
}

fn diameter(x: &FiniteSubset) -> f64 {
    x.to_metric_space().diameter().unwrap()
}

#[test]
fn welzl_matches_brute_force_in_the_plane() {
    let m = AmbientManifold::euclidean(2).unwrap();
    let mut s = Sampler::new(41);
    for _ in 0..300 {
        let n = 1 + s.below(12);
        let x = s.points(&m, n).unwrap();
        let pts: Vec<Vec<f64>> = x.points().iter().map(|p| p.coords.clone()).collect();
        let (r, _) = circumradius(&x).unwrap();
        assert!((r - brute_circumradius(&pts)).abs() < 1e-9);
    }
}

#[test]
fn euclidean_jung_on_random_sets() {
    for dim in [2usize, 3] {
        let m = AmbientManifold::euclidean(dim).unwrap();
        let mut s = Sampler::new(42 + dim as u64);
        for _ in 0..1000 {
            let n = 2 + s.below(30);
            let x = s.points(&m, n).unwrap();
            let (r, c) = circumradius(&x).unwrap();
            for p in x.points() {
                assert!(m.distance(p, &c).unwrap() <= r + 1e-9);
            }
            let lower = jung_diameter_lower(r, dim, 0.0).unwrap();
            assert!(diameter(&x) >= lower - 1e-9);
            assert!(diameter(&x) >= 2.0 * alpha(dim, 0.0) * r - 1e-9);
        }
    }
}

#[test]
fn jung_saturated_by_regular_simplices() {
    let h = 3f64.sqrt() / 2.0;
    let tri = FiniteSubset::new(
        AmbientManifold::euclidean(2).unwrap(),
        vec![Point::new(vec![0.0, 0.0]), Point::new(vec![1.0, 0.0]), Point::new(vec![0.5, h])],
    )
    .unwrap();
    let (r, _) = circumradius(&tri).unwrap();
    assert!((jung_diameter_lower(r, 2, 0.0).unwrap() - 1.0).abs() < 1e-9);
    let tet = FiniteSubset::new(
        AmbientManifold::euclidean(3).unwrap(),
        [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
            .iter()
            .map(|p| Point::new(p.to_vec()))
            .collect(),
    )
    .unwrap();
    let (r, _) = circumradius(&tet).unwrap();
    assert!((jung_diameter_lower(r, 3, 0.0).unwrap() - diameter(&tet)).abs() < 1e-9);
}

#[test]
fn alpha_stays_between_the_limits() {
    let floor = 2f64.sqrt() / PI;
    for n in 1..=10 {
        for kappa in [-10.0, -1.0, 0.0, 0.5, 1.0, 10.0, 1e3, 1e6] {
            let a = alpha(n, kappa);
            assert!((floor..=1.0).contains(&a), "alpha({n}, {kappa}) = {a}");
        }
    }
    assert_eq!(alpha(1, 0.0), 1.0);
    assert_eq!(tau(1.0, -3.0), 1.0);
}

#[test]
fn circle_circumradius_and_jung() {
    let m = AmbientManifold::standard_circle();
    let mut s = Sampler::new(44);
    for _ in 0..300 {
        let n = 1 + s.below(6);
        // clustered sets so that the covering arc stays short
        let base = s.uniform_in(0.0, 2.0 * PI);
        let angles: Vec<f64> = (0..n).map(|_| base + s.uniform_in(0.0, 1.4)).collect();
        let x = FiniteSubset::from_angles(m.clone(), &angles).unwrap();
        let (r, c) = circumradius(&x).unwrap();
        let far = x.points().iter().map(|p| m.distance(p, &c).unwrap()).fold(0.0, f64::max);
        assert!((far - r).abs() < 1e-9);
        // on an arc shorter than pi the diameter is the arc length
        assert!((diameter(&x) - 2.0 * r).abs() < 1e-9);
        assert!(diameter(&x) >= jung_diameter_lower(r, 1, 0.0).unwrap() - 1e-9);
    }
}

#[test]
fn circle_bounds_never_exceed_exact_gh_or_hausdorff() {
    let m = AmbientManifold::standard_circle().with_fill_rad(PI / 3.0).unwrap();
    let mut s = Sampler::new(45);
    for _ in 0..150 {
        let (nx, ny) = (1 + s.below(6), 1 + s.below(6));
        let x = s.points(&m, nx).unwrap();
        let y = s.points(&m, ny).unwrap();
        let (hx, hy) = (covering_radius_circle(&x).unwrap(), covering_radius_circle(&y).unwrap());
        let gh = gh_exact(&x.to_metric_space(), &y.to_metric_space(), 10_000_000).unwrap();
        assert!(gh.proven_optimal);
        let dh = hausdorff_subsets(&x, &y).unwrap();
        for (a, b) in [(hx, hy), (hy, hx)] {
            let i = BoundInputs::from_manifold(&m, a, b);
            let bounds = [
                thm1b(&i).unwrap().lower_bound,
                thm2b(a, b).lower_bound,
                thm3b(&i).unwrap().lower_bound,
                thm4(&i).unwrap().lower_bound,
            ];
            for lb in bounds {
                assert!(lb <= gh.value + 1e-9, "bound {lb} above exact {}", gh.value);
                assert!(lb <= dh + 1e-9);
            }
        }
        // with Y = S1 the single-subset bound cannot exceed d_H(X, S1)
        assert!(thm2a(hx).lower_bound <= hx);
    }
}

#[test]
fn jung_bound_against_convexity_bound_on_a_grid() {
    // only reported: neither bound is claimed to dominate the other
    let mut thm4_lower = 0;
    let mut total = 0;
    for n in 1..=4 {
        for k in 0..=40 {
            let dh = k as f64 * 0.02;
            let i = BoundInputs { dh_xm: dh, dh_ym: 0.0, rho: PI / 2.0, n, kappa: 0.0, fill_rad: None };
            let a = thm4(&i).unwrap().lower_bound;
            let b = thm1b(&i).unwrap().lower_bound;
            assert!(a.is_finite() && b.is_finite());
            total += 1;
            if a < b {
                thm4_lower += 1;
            }
        }
    }
    eprintln!("jung bound below convexity bound at {thm4_lower} of {total} grid points");
}
