use ggv::isometry::{
    check_gyrometric_preserving, decompose_mazur_ulam, defect_experiment, left_translation,
    point_reflection, random_isometry, random_isometry_from, verify_midpoint_preservation, GyroMap,
    MapStep, Primitive,
};
use ggv::{make_model, GgvError, ModelConfig, ModelKind, Point};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn model(cfg: ModelConfig) -> ggv::Model {
    make_model(cfg).unwrap()
}

fn configs() -> Vec<ModelConfig> {
    vec![
        ModelConfig::normed(2),
        ModelConfig::einstein(3, 1.0),
        ModelConfig::mobius(2, 2.0),
        ModelConfig::pathological(),
    ]
}

/// A model and a seed from which test points are drawn.
fn model_and_seed() -> impl Strategy<Value = (ModelConfig, u64)> {
    (prop::sample::select(configs()), any::<u64>())
}

fn draw(m: &ggv::Model, rng: &mut ChaCha8Rng, spread: f64) -> Point {
    m.sample_point(rng, spread)
}

#[test]
fn normed_reflection_example() {
    let m = model(ModelConfig::normed(1));
    let r = point_reflection(&m, &m.point(vec![1.0]).unwrap()).unwrap();
    let y = r.apply(&m.point(vec![3.0]).unwrap()).unwrap();
    assert_eq!(y.coords(), &[-1.0]);
}

#[test]
fn pathological_translation_example() {
    let m = model(ModelConfig::pathological());
    let t = left_translation(&m, &m.point(vec![2.0]).unwrap()).unwrap();
    let y = t.apply(&m.point(vec![3.0]).unwrap()).unwrap();
    assert!((y.coords()[0] - 6.0).abs() < 1e-12);
    let back = t.inverse_apply(&y).unwrap();
    assert!((back.coords()[0] - 3.0).abs() < 1e-12);
}

#[test]
fn carrier_violations_are_domain_errors() {
    let m = model(ModelConfig::pathological());
    let bad = Point::new(ModelKind::Pathological, vec![0.5]);
    assert!(matches!(
        point_reflection(&m, &bad),
        Err(GgvError::Domain(_))
    ));
    assert!(matches!(
        left_translation(&m, &bad),
        Err(GgvError::Domain(_))
    ));
}

#[test]
fn translations_preserve_normed_midpoints_exactly() {
    let m = model(ModelConfig::normed(3));
    let c = m.point(vec![1.5, -2.0, 0.25]).unwrap();
    let t = left_translation(&m, &c).unwrap();
    let rep = verify_midpoint_preservation(&t, 1000, 5, 1e-12).unwrap();
    assert!(rep.pass);
    assert!(rep.max_residual <= 1e-12);
}

#[test]
fn spec_seeds_pass() {
    for cfg in configs() {
        let m = model(cfg);
        let t = random_isometry(&m, 42, 5).unwrap();
        assert!(
            verify_midpoint_preservation(&t, 1000, 42, 1e-9)
                .unwrap()
                .pass,
            "{cfg}"
        );

        let t = random_isometry(&m, 7, 4).unwrap();
        let rep = decompose_mazur_ulam(&t, 50, 7, 1e-9).unwrap();
        assert!(rep.pass, "{cfg}: {:?}", rep.residuals());

        let t = random_isometry(&m, 3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (x1, x2) = (draw(&m, &mut rng, 0.5), draw(&m, &mut rng, 0.5));
        let tr = defect_experiment(&t, &x1, &x2, 8, 1e-9).unwrap();
        assert!(tr.defect <= 1e-9, "{cfg}: {tr:?}");
        assert!(tr.iterates.iter().all(|&r| r <= tr.bound + 1e-9));
    }
}

#[test]
fn translation_decomposes_to_identity() {
    for cfg in configs() {
        let m = model(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = draw(&m, &mut rng, 0.5);
        let t = left_translation(&m, &c).unwrap();
        let rep = decompose_mazur_ulam(&t, 30, 1, 1e-9).unwrap();
        assert!(rep.pass, "{cfg}");
        assert!(m.metric_distance_coords(&rep.translation_part, c.coords()) < 1e-12);
        assert!(rep.max_residual() < 1e-12, "{cfg}: {:?}", rep.residuals());
    }
}

#[test]
fn negation_is_additive_up_to_gyration() {
    for cfg in configs() {
        let m = model(cfg);
        let t = point_reflection(&m, &m.identity()).unwrap();
        let rep = decompose_mazur_ulam(&t, 40, 2, 1e-9).unwrap();
        assert!(rep.pass, "{cfg}: {:?}", rep.residuals());

        // Oracle: ⊖(a ⊕ b) = ⊖a ⊕ ⊖b directly (gyroautomorphic inverse).
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let (a, b) = (draw(&m, &mut rng, 0.5), draw(&m, &mut rng, 0.5));
            let lhs = m.neg_coords(&m.add_coords(a.coords(), b.coords()));
            let rhs = m.add_coords(&m.neg_coords(a.coords()), &m.neg_coords(b.coords()));
            assert!(m.metric_distance_coords(&lhs, &rhs) < 1e-12);
        }
    }
}

#[test]
fn forced_translation_of_depth_one() {
    let m = model(ModelConfig::mobius(2, 1.0));
    let t = random_isometry_from(&m, 9, 1, &[Primitive::Translation]).unwrap();
    let steps: Vec<_> = t.steps().collect();
    assert_eq!(steps.len(), 1);
    assert!(matches!(steps[0], MapStep::LeftTranslation(_)));
}

#[test]
fn identity_defect_is_zero() {
    for cfg in configs() {
        let m = model(cfg);
        let id = GyroMap::identity(&m);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (x1, x2) = (draw(&m, &mut rng, 1.0), draw(&m, &mut rng, 1.0));
        let tr = defect_experiment(&id, &x1, &x2, 5, 1e-9).unwrap();
        assert_eq!(tr.defect, 0.0);
        assert!(tr.iterates.iter().all(|&r| r < 1e-12), "{cfg}: {tr:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reflection_is_an_involution((cfg, seed) in model_and_seed()) {
        let m = model(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, x) = (draw(&m, &mut rng, 0.6), draw(&m, &mut rng, 0.6));
        let r = point_reflection(&m, &a).unwrap();
        let twice = r.apply(&r.apply(&x).unwrap()).unwrap();
        prop_assert!(m.metric_distance(&twice, &x).unwrap() < 1e-10);
        prop_assert!(check_gyrometric_preserving(&r, seed, 1e-9).is_ok());
    }

    #[test]
    fn reflection_matches_its_definition((cfg, seed) in model_and_seed()) {
        let m = model(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, x) = (draw(&m, &mut rng, 0.6), draw(&m, &mut rng, 0.6));
        let r = point_reflection(&m, &a).unwrap();
        let definition = m.reflect_coords(a.coords(), x.coords());
        prop_assert!(m.metric_distance_coords(r.apply(&x).unwrap().coords(), &definition) < 1e-9);
    }

    #[test]
    fn reflection_fixes_only_its_center((cfg, seed) in model_and_seed()) {
        let m = model(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = draw(&m, &mut rng, 0.6);
        let r = point_reflection(&m, &a).unwrap();
        prop_assert!(m.metric_distance(&r.apply(&a).unwrap(), &a).unwrap() < 1e-12);
        let x = draw(&m, &mut rng, 0.6);
        let moved = m.metric_distance(&r.apply(&x).unwrap(), &x).unwrap();
        let gap = m.metric_distance(&x, &a).unwrap();
        // The displacement is exactly twice the distance to the center.
        prop_assert!((moved - 2.0 * gap).abs() <= 1e-9 * gap.max(1.0));
    }

    #[test]
    fn reflection_at_midpoint_swaps((cfg, seed) in model_and_seed()) {
        let m = model(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (draw(&m, &mut rng, 0.6), draw(&m, &mut rng, 0.6));
        let p = m.gyromidpoint(&x, &y).unwrap();
        let r = point_reflection(&m, &p).unwrap();
        prop_assert!(m.metric_distance(&r.apply(&x).unwrap(), &y).unwrap() < 1e-9);
        prop_assert!(m.metric_distance(&r.apply(&y).unwrap(), &x).unwrap() < 1e-9);
    }

    #[test]
    fn reflection_displacement_in_norm_values((cfg, seed) in model_and_seed()) {
        let m = model(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, x) = (draw(&m, &mut rng, 0.6), draw(&m, &mut rng, 0.6));
        let r = point_reflection(&m, &a).unwrap();
        let lhs = m.gyrometric(&r.apply(&x).unwrap(), &x).unwrap();
        let rhs = m.nv_smul(2.0, m.gyrometric(&a, &x).unwrap()).unwrap();
        let (fl, fr) = (m.linearize(lhs).unwrap(), m.linearize(rhs).unwrap());
        prop_assert!((fl - fr).abs() <= 1e-9 * fr.abs().max(1.0));
    }

    #[test]
    fn maps_round_trip((cfg, seed) in model_and_seed(), depth in 1usize..=6) {
        let m = model(cfg);
        let t = random_isometry(&m, seed, depth).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = draw(&m, &mut rng, 1.0);
        let back = t.inverse_apply(&t.apply(&x).unwrap()).unwrap();
        prop_assert!(m.metric_distance(&back, &x).unwrap() < 1e-9);
        let y = draw(&m, &mut rng, 1.0);
        let fwd = t.apply(&t.inverse_apply(&y).unwrap()).unwrap();
        prop_assert!(m.metric_distance(&fwd, &y).unwrap() < 1e-9);
    }
}
