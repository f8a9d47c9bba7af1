use hausdorff_gh::counterexample::{build_instance, verify_instance};
use hausdorff_gh::gh::gh_exact;
use hausdorff_gh::metric::hausdorff_subsets;

#[test]
fn reported_values_for_small_and_large_n() {
    for n in [2usize, 3, 4, 9, 16, 25, 100] {
        let r = verify_instance(&build_instance(n).unwrap()).unwrap();
        assert_eq!(r.dh, n as f64);
        assert_eq!(r.dh_squared, (n * n) as u64);
        assert_eq!(r.gh_upper, (n as f64).sqrt());
        assert_eq!(r.dh_after_isometry_squared, n as u64);
        assert!(r.ratio_upper <= 1.0 / (n as f64).sqrt() + 1e-15);
    }
}

#[test]
fn shifted_staircase_steps() {
    let n = 12;
    let inst = build_instance(n).unwrap();
    let fx = inst.shifted_x().unwrap();
    let z = inst.z.points();
    for j in 2..=n {
        let d = inst.z.manifold().distance(&z[j - 1], &fx.points()[j - 2]).unwrap();
        assert!((d - (j as f64).sqrt()).abs() < 1e-12);
    }
}

#[test]
fn float_hausdorff_agrees_with_integer_path() {
    let inst = build_instance(30).unwrap();
    let r = verify_instance(&inst).unwrap();
    assert!((hausdorff_subsets(&inst.x, &inst.z).unwrap() - r.dh).abs() < 1e-9);
}

#[test]
fn exact_gh_below_isometry_bound() {
    for n in 2..=5 {
        let inst = build_instance(n).unwrap();
        let r = verify_instance(&inst).unwrap();
        let g = gh_exact(&inst.x.to_metric_space(), &inst.z.to_metric_space(), 10_000_000).unwrap();
        assert!(g.proven_optimal);
        assert!(g.value <= r.gh_upper + 1e-12, "n = {n}: {} > {}", g.value, r.gh_upper);
    }
}
