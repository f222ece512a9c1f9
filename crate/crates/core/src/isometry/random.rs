//! Seeded random gyrometric-preserving maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::map::{left_translation, point_reflection, GyroMap};
use super::preservation_residual;
use crate::error::{GgvError, Result};
use crate::models::GgvModel;
use crate::scalar::Scalar;

/// Spread used for translation and reflection centers. Small centers keep
/// composed maps away from the ball boundary, where `artanh` loses precision.
pub const CENTER_SPREAD: f64 = 0.3;

/// Pairs checked for gyrometric preservation after construction.
pub const PRESERVATION_PAIRS: usize = 200;

/// Tolerance of the post-construction preservation check.
pub const PRESERVATION_TOLERANCE: f64 = 1e-9;

/// Primitive kinds a random recipe may draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    Identity,
    Translation,
    Reflection,
    Rotation,
}

impl Primitive {
    pub const ALL: [Primitive; 4] = [
        Primitive::Identity,
        Primitive::Translation,
        Primitive::Reflection,
        Primitive::Rotation,
    ];
}

/// A composition of `depth` primitives drawn from every primitive the model supports.
pub fn random_isometry<S: Scalar>(m: &GgvModel<S>, seed: u64, depth: usize) -> Result<GyroMap<S>> {
    random_isometry_from(m, seed, depth, &Primitive::ALL)
}

/// Like [`random_isometry`] but restricted to `allowed` primitives.
/// Rotations are skipped on models without rotational automorphisms.
pub fn random_isometry_from<S: Scalar>(
    m: &GgvModel<S>,
    seed: u64,
    depth: usize,
    allowed: &[Primitive],
) -> Result<GyroMap<S>> {
    if depth == 0 {
        return Err(GgvError::Construction("depth must be at least 1".into()));
    }
    let pool: Vec<Primitive> = allowed
        .iter()
        .copied()
        .filter(|p| *p != Primitive::Rotation || m.supports_rotations())
        .collect();
    if pool.is_empty() {
        return Err(GgvError::Construction(format!(
            "no usable primitives for {m}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut map = GyroMap::identity(m);
    let mut first = true;
    for _ in 0..depth {
        let step = match pool[rng.gen_range(0..pool.len())] {
            Primitive::Identity => GyroMap::identity(m),
            Primitive::Translation => {
                left_translation(m, &m.sample_point(&mut rng, CENTER_SPREAD))?
            }
            Primitive::Reflection => point_reflection(m, &m.sample_point(&mut rng, CENTER_SPREAD))?,
            Primitive::Rotation => {
                let i = rng.gen_range(0..m.dim());
                let j = (i + rng.gen_range(1..m.dim())) % m.dim();
                let angle = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
                GyroMap::rotation(m, i, j, S::lit(angle))?
            }
        };
        map = if first { step } else { map.then(&step)? };
        first = false;
    }

    let residual = preservation_residual(&map, PRESERVATION_PAIRS, seed);
    if residual.is_nan() || residual > PRESERVATION_TOLERANCE {
        return Err(GgvError::Construction(format!(
            "random map on {m} fails gyrometric preservation (residual {residual:e})"
        )));
    }
    Ok(map)
}

/// A random endomorphism of the Möbius ball followed by the bridge onto the
/// Einstein ball of half the radius.
pub fn random_cross_isometry<S: Scalar>(
    mobius: &GgvModel<S>,
    seed: u64,
    depth: usize,
) -> Result<GyroMap<S>> {
    let inner = random_isometry(mobius, seed, depth)?;
    inner.then(&GyroMap::mobius_to_einstein(mobius)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{make_model, ModelConfig};

    #[test]
    fn zero_depth_is_rejected() {
        let m = make_model::<f64>(ModelConfig::normed(2)).unwrap();
        assert!(matches!(
            random_isometry(&m, 1, 0),
            Err(GgvError::Construction(_))
        ));
    }

    #[test]
    fn recipes_are_deterministic() {
        let m = make_model::<f64>(ModelConfig::mobius(3, 1.0)).unwrap();
        let a = random_isometry(&m, 11, 5).unwrap();
        let b = random_isometry(&m, 11, 5).unwrap();
        assert_eq!(a.recipe(), b.recipe());
        assert_eq!(a.recipe().len(), 5);
        let c = random_isometry(&m, 12, 5).unwrap();
        assert_ne!(a.recipe(), c.recipe());
    }

    #[test]
    fn pathological_never_rotates() {
        let m = make_model::<f64>(ModelConfig::pathological()).unwrap();
        for seed in 0..20 {
            let map = random_isometry(&m, seed, 6).unwrap();
            assert!(map.recipe().iter().all(|s| !s.starts_with("rotate")));
        }
        assert!(random_isometry_from(&m, 0, 2, &[Primitive::Rotation]).is_err());
    }

    #[test]
    fn cross_maps_land_in_the_half_radius_einstein_ball() {
        let m = make_model::<f64>(ModelConfig::mobius(2, 2.0)).unwrap();
        let map = random_cross_isometry(&m, 4, 3).unwrap();
        assert_eq!(map.codomain().config(), ModelConfig::einstein(2, 1.0));
        assert!(preservation_residual(&map, 200, 4) < 1e-9);
    }
}
