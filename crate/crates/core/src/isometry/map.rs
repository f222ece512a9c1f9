//! Gyrometric-preserving maps built from closed-form invertible primitives.

use std::fmt;

use crate::error::{GgvError, Result};
use crate::gyro::{GyroPoint, ModelKind};
use crate::models::{make_model, GgvModel, ModelConfig};
use crate::scalar::Scalar;
use crate::vector::{norm_sq, scale};

/// One primitive of a [`GyroMap`] recipe.
#[derive(Debug, Clone, PartialEq)]
pub enum MapStep<S> {
    Identity,
    /// `x ↦ c ⊕ x`.
    LeftTranslation(Vec<S>),
    /// `x ↦ 2 ⊗ a ⊖ x`, evaluated as `a ⊕ (a ⊖ x)`.
    PointReflection(Vec<S>),
    /// Rotation by `angle` in the coordinate plane `(i, j)`.
    Rotation {
        i: usize,
        j: usize,
        angle: S,
    },
    /// Möbius ball of radius `s` onto the Einstein ball of radius `s/2`:
    /// `v ↦ v / (1 + ‖v‖²/s²)`.
    MobiusToEinstein {
        s: S,
    },
    /// Inverse of [`MapStep::MobiusToEinstein`].
    EinsteinToMobius {
        s: S,
    },
}

impl<S: Scalar> fmt::Display for MapStep<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = |v: &[S]| {
            v.iter()
                .map(|x| format!("{:.6}", x.as_f64()))
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            MapStep::Identity => write!(f, "identity"),
            MapStep::LeftTranslation(c) => write!(f, "translate({})", coords(c)),
            MapStep::PointReflection(a) => write!(f, "reflect({})", coords(a)),
            MapStep::Rotation { i, j, angle } => {
                write!(f, "rotate({i},{j},{:.6})", angle.as_f64())
            }
            MapStep::MobiusToEinstein { s } => write!(f, "mobius_to_einstein(s={})", s),
            MapStep::EinsteinToMobius { s } => write!(f, "einstein_to_mobius(s={})", s),
        }
    }
}

#[derive(Debug, Clone)]
struct Stage<S: Scalar> {
    /// Model the step's input lives in.
    model: GgvModel<S>,
    step: MapStep<S>,
}

/// A bijection between two GGVs, stored as a recipe of primitives together
/// with their closed-form inverses.
#[derive(Debug, Clone)]
pub struct GyroMap<S: Scalar> {
    domain: GgvModel<S>,
    codomain: GgvModel<S>,
    stages: Vec<Stage<S>>,
}

fn rotate<S: Scalar>(x: &[S], i: usize, j: usize, angle: S) -> Vec<S> {
    let (sin, cos) = angle.sin_cos();
    let mut out = x.to_vec();
    out[i] = cos * x[i] - sin * x[j];
    out[j] = sin * x[i] + cos * x[j];
    out
}

impl<S: Scalar> MapStep<S> {
    fn apply(&self, model: &GgvModel<S>, x: &[S]) -> Vec<S> {
        match self {
            MapStep::Identity => x.to_vec(),
            MapStep::LeftTranslation(c) => model.add_coords(c, x),
            MapStep::PointReflection(a) => {
                model.add_coords(a, &model.add_coords(a, &model.neg_coords(x)))
            }
            MapStep::Rotation { i, j, angle } => rotate(x, *i, *j, *angle),
            MapStep::MobiusToEinstein { s } => {
                let k = S::one() + norm_sq(x) / (*s * *s);
                scale(S::one() / k, x)
            }
            MapStep::EinsteinToMobius { s } => {
                let two = S::lit(2.0);
                let u2 = S::lit(4.0) * norm_sq(x) / (*s * *s);
                let k = two / (S::one() + (S::one() - u2).max(S::zero()).sqrt());
                scale(k, x)
            }
        }
    }

    /// The inverse step, which lives in the model this step maps into.
    fn inverse(&self, model: &GgvModel<S>) -> MapStep<S> {
        match self {
            MapStep::Identity => MapStep::Identity,
            MapStep::LeftTranslation(c) => MapStep::LeftTranslation(model.neg_coords(c)),
            MapStep::PointReflection(a) => MapStep::PointReflection(a.clone()),
            MapStep::Rotation { i, j, angle } => MapStep::Rotation {
                i: *i,
                j: *j,
                angle: -*angle,
            },
            MapStep::MobiusToEinstein { s } => MapStep::EinsteinToMobius { s: *s },
            MapStep::EinsteinToMobius { s } => MapStep::MobiusToEinstein { s: *s },
        }
    }
}

/// The Einstein model gyrometrically equivalent to the Möbius ball of radius `s`.
pub fn einstein_partner(mobius: &ModelConfig) -> ModelConfig {
    ModelConfig::einstein(mobius.dim, mobius.s / 2.0)
}

impl<S: Scalar> GyroMap<S> {
    pub fn identity(model: &GgvModel<S>) -> Self {
        Self {
            domain: model.clone(),
            codomain: model.clone(),
            stages: vec![Stage {
                model: model.clone(),
                step: MapStep::Identity,
            }],
        }
    }

    pub(crate) fn single(model: &GgvModel<S>, step: MapStep<S>) -> Self {
        Self {
            domain: model.clone(),
            codomain: model.clone(),
            stages: vec![Stage {
                model: model.clone(),
                step,
            }],
        }
    }

    /// Rotation in the plane of coordinates `i` and `j`.
    pub fn rotation(model: &GgvModel<S>, i: usize, j: usize, angle: S) -> Result<Self> {
        if !model.supports_rotations() {
            return Err(GgvError::Construction(format!(
                "rotations are not automorphisms of {model}"
            )));
        }
        if i == j || i >= model.dim() || j >= model.dim() {
            return Err(GgvError::Construction(format!(
                "invalid rotation plane ({i}, {j}) in dimension {}",
                model.dim()
            )));
        }
        Ok(Self::single(model, MapStep::Rotation { i, j, angle }))
    }

    /// The gyrometric-preserving bijection from the Möbius ball of radius `s`
    /// onto the Einstein ball of radius `s/2`.
    pub fn mobius_to_einstein(mobius: &GgvModel<S>) -> Result<Self> {
        if mobius.kind() != ModelKind::Mobius {
            return Err(GgvError::Construction(format!(
                "bridge expects a Möbius domain, got {mobius}"
            )));
        }
        let codomain = make_model(einstein_partner(&mobius.config()))?;
        Ok(Self {
            domain: mobius.clone(),
            codomain,
            stages: vec![Stage {
                model: mobius.clone(),
                step: MapStep::MobiusToEinstein { s: mobius.radius() },
            }],
        })
    }

    pub fn domain(&self) -> &GgvModel<S> {
        &self.domain
    }

    pub fn codomain(&self) -> &GgvModel<S> {
        &self.codomain
    }

    pub fn steps(&self) -> impl Iterator<Item = &MapStep<S>> {
        self.stages.iter().map(|s| &s.step)
    }

    /// Human-readable recipe, one entry per primitive.
    pub fn recipe(&self) -> Vec<String> {
        self.steps().map(|s| s.to_string()).collect()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain.same_as(&self.codomain)
    }

    pub fn apply_coords(&self, x: &[S]) -> Vec<S> {
        self.stages
            .iter()
            .fold(x.to_vec(), |acc, st| st.step.apply(&st.model, &acc))
    }

    pub fn inverse_coords(&self, y: &[S]) -> Vec<S> {
        self.inverse().apply_coords(y)
    }

    pub fn apply(&self, x: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.domain.check(x)?;
        Ok(self.codomain.wrap(self.apply_coords(x.coords())))
    }

    pub fn inverse_apply(&self, y: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.codomain.check(y)?;
        Ok(self.domain.wrap(self.inverse_coords(y.coords())))
    }

    /// The inverse map, built from the primitives' closed-form inverses.
    pub fn inverse(&self) -> GyroMap<S> {
        let mut stages = Vec::with_capacity(self.stages.len());
        for (idx, st) in self.stages.iter().enumerate().rev() {
            let out_model = self
                .stages
                .get(idx + 1)
                .map(|next| next.model.clone())
                .unwrap_or_else(|| self.codomain.clone());
            stages.push(Stage {
                step: st.step.inverse(&out_model),
                model: out_model,
            });
        }
        GyroMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            stages,
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GyroMap<S>) -> Result<GyroMap<S>> {
        if !self.codomain.same_as(&next.domain) {
            return Err(GgvError::Construction(format!(
                "cannot compose: codomain {} differs from domain {}",
                self.codomain, next.domain
            )));
        }
        let mut stages = self.stages.clone();
        stages.extend(next.stages.iter().cloned());
        Ok(GyroMap {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            stages,
        })
    }
}

/// `x ↦ 2 ⊗ a ⊖ x`.
pub fn point_reflection<S: Scalar>(m: &GgvModel<S>, a: &GyroPoint<S>) -> Result<GyroMap<S>> {
    m.check(a)?;
    Ok(GyroMap::single(
        m,
        MapStep::PointReflection(a.coords().to_vec()),
    ))
}

/// `x ↦ c ⊕ x`, inverted by `y ↦ ⊖c ⊕ y`.
pub fn left_translation<S: Scalar>(m: &GgvModel<S>, c: &GyroPoint<S>) -> Result<GyroMap<S>> {
    m.check(c)?;
    Ok(GyroMap::single(
        m,
        MapStep::LeftTranslation(c.coords().to_vec()),
    ))
}
