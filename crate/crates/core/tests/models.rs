use ggv::models::{path_phi, path_phi_inv, path_s, path_s_inv, path_t, path_t_inv};
use ggv::verify::{full_suite, SuiteConfig};
use ggv::{make_model, GgvError, ModelConfig, ModelKind, Point};
use proptest::prelude::*;

fn model(cfg: ModelConfig) -> ggv::Model {
    make_model(cfg).unwrap()
}

fn carrier_value() -> impl Strategy<Value = f64> {
    prop_oneof![1.0..60.0f64, -60.0..-1.000_001f64]
}

/// Coordinates of a point strictly inside the ball of radius `s`.
fn ball_coords(dim: usize, s: f64) -> impl Strategy<Value = Vec<f64>> {
    (prop::collection::vec(-1.0..1.0f64, dim), 0.0..0.95f64).prop_map(move |(v, frac)| {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n < 1e-9 {
            vec![0.0; v.len()]
        } else {
            v.iter().map(|x| x / n * frac * s).collect()
        }
    })
}

#[test]
fn einstein_half_plus_half_is_four_fifths() {
    let m = model(ModelConfig::einstein(1, 1.0));
    let r = m
        .oplus(&m.point(vec![0.5]).unwrap(), &m.point(vec![0.5]).unwrap())
        .unwrap();
    assert!((r.coords()[0] - 0.8).abs() < 1e-15);
}

#[test]
fn pathological_examples() {
    let m = model(ModelConfig::pathological());
    let p = |x: f64| m.point(vec![x]).unwrap();
    assert!((m.oplus(&p(2.0), &p(3.0)).unwrap().coords()[0] - 6.0).abs() < 1e-12);
    assert_eq!(m.ominus(&p(2.0)).unwrap().coords(), &[-2.0]);
    assert!((m.otimes(2.0, &p(-2.0)).unwrap().coords()[0] + 4.0).abs() < 1e-12);
    let six = m.nv_add(ggv::NormValue(2.0), ggv::NormValue(3.0)).unwrap();
    assert!((six.0 - 6.0).abs() < 1e-12);
    let nine = m.nv_smul(2.0, ggv::NormValue(3.0)).unwrap();
    assert!((nine.0 - 9.0).abs() < 1e-12);
    assert!((m.linearize(ggv::NormValue(6.0)).unwrap() - 6f64.ln()).abs() < 1e-15);
    assert_eq!(m.nv_zero().0, 1.0);
}

#[test]
fn the_gap_is_rejected() {
    let m = model(ModelConfig::pathological());
    for x in [0.0, 0.5, -0.5, -0.999_999] {
        assert!(matches!(m.point(vec![x]), Err(GgvError::Domain(_))));
    }
    assert!(m.point(vec![-1.0]).is_err());
    assert!(m.point(vec![1.0]).is_ok());
    assert!(m.point(vec![f64::NAN]).is_err());
    assert!(m.linearize(ggv::NormValue(0.5)).is_err());
}

#[test]
fn ball_boundary_is_rejected() {
    for kind in [ModelKind::Einstein, ModelKind::Mobius] {
        let m = model(ModelConfig::new(kind, 2, 2.0));
        assert!(m.point(vec![1.2, 1.6]).is_err());
        assert!(m.point(vec![1.19, 1.59]).is_ok());
        assert!(m.otimes(f64::INFINITY, &m.identity()).is_err());
    }
}

#[test]
fn mismatched_points_are_rejected() {
    let e = model(ModelConfig::einstein(2, 1.0));
    let n = model(ModelConfig::normed(2));
    let x = n.point(vec![0.1, 0.1]).unwrap();
    assert!(matches!(
        e.oplus(&x, &x),
        Err(GgvError::ModelMismatch { .. })
    ));
    let short = Point::new(ModelKind::Einstein, vec![0.1]);
    assert!(e.gnorm(&short).is_err());
}

#[test]
fn radius_two_models_pass_the_suite() {
    let cfg = SuiteConfig::new(150, 5, 1e-9);
    for c in [ModelConfig::einstein(4, 2.0), ModelConfig::mobius(4, 0.5)] {
        let reports = full_suite(&model(c), cfg);
        let failing: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
        assert!(failing.is_empty(), "{c}: {failing:#?}");
    }
}

#[test]
fn single_precision_models_work() {
    // The nested-sum gyration oracle near the ball boundary costs f32 about
    // three digits, hence the loose tolerance.
    let cfg = SuiteConfig::new(100, 1, 1e-2);
    for kind in ModelKind::ALL {
        let m = make_model::<f32>(ModelConfig::default_for(kind)).unwrap();
        let reports = full_suite(&m, cfg);
        let failing: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
        assert!(failing.is_empty(), "{kind}: {failing:#?}");
    }
    let m: ggv::Model32 = make_model(ModelConfig::einstein(1, 1.0)).unwrap();
    assert!((m.add_coords(&[0.5], &[0.5])[0] - 0.8).abs() < 1e-6);
}

proptest! {
    #[test]
    fn phi_round_trips(x in -40.0..40.0f64) {
        let a = path_phi(x);
        prop_assert!(!(-1.0..1.0).contains(&a));
        prop_assert!((path_phi_inv(a).unwrap() - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn phi_is_increasing(x in -40.0..40.0f64, dx in 1e-6..5.0f64) {
        prop_assert!(path_phi(x) < path_phi(x + dx));
    }

    #[test]
    fn t_round_trips(x in -40.0..40.0f64) {
        prop_assume!(x != 0.0);
        let a = path_t(x);
        prop_assert!(a.abs() >= 1.0);
        prop_assert!((path_t_inv(a).unwrap() - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn s_is_a_bijection_onto_the_negative_half(x in -50.0..-1e-9f64) {
        let y = path_s(x).unwrap();
        prop_assert!(y <= -1.0);
        prop_assert!((path_s_inv(y).unwrap() - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn s_fixes_negative_integers(k in 1i32..10_000) {
        let x = -f64::from(k);
        prop_assert_eq!(path_s(x).unwrap(), x);
        prop_assert_eq!(path_s_inv(x).unwrap(), x);
    }

    #[test]
    fn pathological_addition_is_exponential(a in carrier_value(), b in carrier_value()) {
        let m = model(ModelConfig::pathological());
        let sum = m.add_coords(&[a], &[b])[0];
        let want = path_phi(path_phi_inv(a).unwrap() + path_phi_inv(b).unwrap());
        prop_assert!((sum - want).abs() <= 1e-12 * want.abs());
        if a > 0.0 && b > 0.0 {
            prop_assert!((sum - a * b).abs() <= 1e-12 * (a * b));
        }
    }

    #[test]
    fn normed_space_is_a_vector_space(
        a in prop::collection::vec(-10.0..10.0f64, 3),
        b in prop::collection::vec(-10.0..10.0f64, 3),
        r in -4.0..4.0f64,
    ) {
        let m = model(ModelConfig::normed(3));
        let sum = m.add_coords(&a, &b);
        let scaled = m.scale_coords(r, &a);
        for i in 0..3 {
            prop_assert_eq!(sum[i], a[i] + b[i]);
            prop_assert_eq!(scaled[i], r * a[i]);
        }
        prop_assert_eq!(m.gyr_coords(&a, &b, &a), a.clone());
        let half = m.midpoint_coords(&a, &b);
        for i in 0..3 {
            prop_assert!((half[i] - 0.5 * (a[i] + b[i])).abs() < 1e-12);
        }
    }

    #[test]
    fn ball_collinear_sums_follow_the_velocity_law(
        u in -0.95..0.95f64,
        v in -0.95..0.95f64,
        s in 0.5..3.0f64,
    ) {
        let want = (u + v) / (1.0 + u * v) * s;
        for kind in [ModelKind::Einstein, ModelKind::Mobius] {
            let m = model(ModelConfig::new(kind, 1, s));
            let got = m.add_coords(&[u * s], &[v * s])[0];
            prop_assert!((got - want).abs() <= 1e-12 * s);
        }
    }

    #[test]
    fn ball_gyrations_match_the_oracle(
        u in ball_coords(3, 1.5),
        v in ball_coords(3, 1.5),
        a in ball_coords(3, 1.5),
    ) {
        for kind in [ModelKind::Einstein, ModelKind::Mobius] {
            let m = model(ModelConfig::new(kind, 3, 1.5));
            let closed = m.gyr_coords(&u, &v, &a);
            let brute = m.gyr_brute_force_coords(&u, &v, &a);
            prop_assert!(m.metric_distance_coords(&closed, &brute) < 1e-9);
        }
    }

    #[test]
    fn ball_scalar_multiplication_scales_rapidity(
        a in ball_coords(2, 1.0),
        r in -3.0..3.0f64,
    ) {
        for kind in [ModelKind::Einstein, ModelKind::Mobius] {
            let m = model(ModelConfig::new(kind, 2, 1.0));
            let base = m.norm_value_of(&a);
            let got = m.norm_value_of(&m.scale_coords(r, &a));
            prop_assert!((got - r.abs() * base).abs() <= 1e-9 * (r.abs() * base).max(1.0));
        }
    }
}
