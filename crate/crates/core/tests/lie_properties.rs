mod common;

use proptest::prelude::*;

use common::{expm_pose, pose_gap, twist_matrix};
use screwmotion::interp::adjoint;
use screwmotion::lie::{
    bracket, dexp_closed, dexp_series, dexpinv_closed, dexpinv_series, distance, exp_pose, exp_rot, hat3,
    log_pose, log_rot, vee3, Matrix6, MetricWeights, ScrewVector, Vector3,
};

fn vec3(max: f64) -> impl Strategy<Value = Vector3> {
    prop::array::uniform3(-max..max).prop_map(Vector3::from)
}

/// Screw whose rotation angle stays below `max_angle`.
fn screw(max_angle: f64, linear: f64) -> impl Strategy<Value = ScrewVector> {
    (vec3(1.0), 0.0..max_angle, vec3(linear)).prop_map(|(dir, angle, v)| {
        let n = dir.norm();
        let w = if n < 1e-6 { Vector3::zeros() } else { dir / n * angle };
        ScrewVector::new(w, v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exp_agrees_with_generic_matrix_exponential(x in screw(6.0, 3.0)) {
        prop_assert!(pose_gap(&exp_pose(&x), &expm_pose(&x)) < 1e-12);
    }

    #[test]
    fn log_inverts_exp_inside_domain(x in screw(std::f64::consts::PI - 1e-4, 3.0)) {
        prop_assert!((log_pose(&exp_pose(&x)).unwrap() - x).amax() < 1e-9);
        prop_assert!((log_rot(&exp_rot(&x.angular())).unwrap() - x.angular()).amax() < 1e-9);
    }

    #[test]
    fn hat_vee_round_trip(v in vec3(100.0)) {
        prop_assert_eq!(vee3(&hat3(&v)).unwrap(), v);
    }

    #[test]
    fn bracket_is_matrix_commutator(a in screw(3.0, 2.0), b in screw(3.0, 2.0)) {
        let (ma, mb) = (twist_matrix(&a), twist_matrix(&b));
        let expected = ma * mb - mb * ma;
        prop_assert!((twist_matrix(&bracket(&a, &b)) - expected).amax() < 1e-13);
    }

    #[test]
    fn jacobi_identity(a in screw(3.0, 2.0), b in screw(3.0, 2.0), c in screw(3.0, 2.0)) {
        let j = bracket(&a, &bracket(&b, &c)) + bracket(&b, &bracket(&c, &a)) + bracket(&c, &bracket(&a, &b));
        prop_assert!(j.amax() < 1e-12);
    }

    #[test]
    fn dexp_and_inverse_compose_to_identity(x in screw(std::f64::consts::PI - 1e-6, 2.0)) {
        let p = dexp_closed(&x) * dexpinv_closed(&x).unwrap();
        prop_assert!((p - Matrix6::identity()).amax() < 1e-12);
    }

    #[test]
    fn closed_dexp_matches_series(x in screw(2.0, 1.0)) {
        prop_assert!((dexp_closed(&x) - dexp_series(&x, 20)).amax() < 1e-12);
    }

    #[test]
    fn closed_dexpinv_matches_series_for_small_angles(x in screw(1.0, 1.0)) {
        prop_assert!((dexpinv_closed(&x).unwrap() - dexpinv_series(&x, 20)).amax() < 1e-12);
    }

    #[test]
    fn adjoint_conjugates_twists(x in screw(3.0, 2.0), y in screw(3.0, 2.0)) {
        let c = exp_pose(&x);
        let g = c.to_homogeneous();
        let expected = g * twist_matrix(&y) * c.inverse().to_homogeneous();
        prop_assert!((twist_matrix(&(adjoint(&c) * y)) - expected).amax() < 1e-12);
    }

    #[test]
    fn distance_is_left_invariant(g in screw(3.0, 2.0), c in screw(3.0, 2.0), d in screw(2.5, 2.0)) {
        let w = MetricWeights::new(1.0, 0.5).unwrap();
        let (c1, c2) = (exp_pose(&c), exp_pose(&c) * exp_pose(&d));
        let a = exp_pose(&g);
        let (d0, k0) = distance(&c1, &c2, &w).unwrap();
        let (d1, k1) = distance(&(a * c1), &(a * c2), &w).unwrap();
        prop_assert!((d0 - d1).abs() < 1e-10);
        prop_assert!((k0.rotational - k1.rotational).abs() < 1e-10);
    }

    #[test]
    fn rotational_distance_is_symmetric(c in screw(3.0, 2.0), d in screw(2.5, 2.0)) {
        let w = MetricWeights::default();
        let (c1, c2) = (exp_pose(&c), exp_pose(&c) * exp_pose(&d));
        let (_, k12) = distance(&c1, &c2, &w).unwrap();
        let (_, k21) = distance(&c2, &c1, &w).unwrap();
        prop_assert!((k12.rotational - k21.rotational).abs() < 1e-12);
    }
}

#[test]
fn distance_is_not_right_invariant() {
    let w = MetricWeights::default();
    let c1 = exp_pose(&ScrewVector::from_array([0.0, 0.0, 0.0, 1.0, 0.0, 0.0]));
    let c2 = exp_pose(&ScrewVector::from_array([0.0, 0.0, 0.5, 1.0, 0.0, 0.0]));
    let g = exp_pose(&ScrewVector::from_array([0.0, 0.0, 0.0, 0.0, 5.0, 0.0]));
    let (d0, _) = distance(&c1, &c2, &w).unwrap();
    let (d1, _) = distance(&(c1 * g), &(c2 * g), &w).unwrap();
    assert!((d0 - d1).abs() > 1e-3);
}

#[test]
fn dexp_series_converges_to_closed_form_near_pi() {
    let x = ScrewVector::from_array([0.0, 3.0, 0.5, 1.0, -1.0, 0.5]);
    let errors: Vec<f64> = [10, 20, 40].iter().map(|&n| (dexp_closed(&x) - dexp_series(&x, n)).amax()).collect();
    assert!(errors[0] > errors[1] && errors[1] > errors[2]);
    assert!(errors[2] < 1e-12, "{errors:?}");
}
