//! Model-agnostic gyrogroup layer.
//!
//! A [`Gyrogroup`] implementation supplies the raw coordinate operations
//! (`⊕`, `⊖`, the unit and optionally a closed-form gyration). The checked,
//! point-level API (`oplus`, `ominus`, `gyr_apply`, `coplus`) is provided on
//! top of those and validates every argument against the carrier.
//!
//! Gyrations default to the brute-force composition
//! `gyr[u,v]a = ⊖(u⊕v) ⊕ (u ⊕ (v ⊕ a))`, which is also the oracle that any
//! closed form is tested against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GgvError, Result};
use crate::scalar::Scalar;

/// Identifies which concrete model a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    /// A real normed (Euclidean) space with vector addition.
    Normed,
    /// Einstein velocity addition on the open ball of radius `s`.
    Einstein,
    /// Möbius addition on the open ball of radius `s`.
    Mobius,
    /// The transplanted additive group on `(-∞,-1) ∪ [1,∞)`.
    Pathological,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [
        ModelKind::Normed,
        ModelKind::Einstein,
        ModelKind::Mobius,
        ModelKind::Pathological,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Normed => "normed",
            ModelKind::Einstein => "einstein",
            ModelKind::Mobius => "mobius",
            ModelKind::Pathological => "pathological",
        }
    }

    pub fn is_ball(self) -> bool {
        matches!(self, ModelKind::Einstein | ModelKind::Mobius)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = GgvError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "normed" => Ok(ModelKind::Normed),
            "einstein" => Ok(ModelKind::Einstein),
            "mobius" | "möbius" => Ok(ModelKind::Mobius),
            "pathological" => Ok(ModelKind::Pathological),
            other => Err(GgvError::Config(format!("unknown model kind `{other}`"))),
        }
    }
}

/// An element of a gyrogroup carrier, tagged with the model it belongs to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GyroPoint<S> {
    model: ModelKind,
    coords: Vec<S>,
}

impl<S: Scalar> GyroPoint<S> {
    /// Builds a point without checking the carrier constraint; the checked
    /// operations reject it later if it is out of range.
    pub fn new(model: ModelKind, coords: Vec<S>) -> Self {
        Self { model, coords }
    }

    pub fn model(&self) -> ModelKind {
        self.model
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(|x| x.as_f64()).collect()
    }
}

impl<S: Scalar> fmt::Display for GyroPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.coords.as_slice() {
            return write!(f, "{x}");
        }
        f.write_str("(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A gyrocommutative gyrogroup `(G, ⊕)` realized on coordinate vectors.
pub trait Gyrogroup<S: Scalar>: fmt::Debug + Send + Sync {
    fn kind(&self) -> ModelKind;

    /// Dimension of the coordinate vectors.
    fn dim(&self) -> usize;

    /// Carrier constraint on raw coordinates (length already checked).
    fn in_carrier(&self, coords: &[S]) -> bool;

    fn identity_coords(&self) -> Vec<S>;

    fn add_coords(&self, a: &[S], b: &[S]) -> Vec<S>;

    fn neg_coords(&self, a: &[S]) -> Vec<S>;

    /// Gyration `gyr[u,v]a`. Models with a closed form override this.
    fn gyr_coords(&self, u: &[S], v: &[S], a: &[S]) -> Vec<S> {
        self.gyr_brute_force_coords(u, v, a)
    }

    /// `⊖(u⊕v) ⊕ (u ⊕ (v ⊕ a))`.
    fn gyr_brute_force_coords(&self, u: &[S], v: &[S], a: &[S]) -> Vec<S> {
        let uv = self.add_coords(u, v);
        let inner = self.add_coords(u, &self.add_coords(v, a));
        self.add_coords(&self.neg_coords(&uv), &inner)
    }

    /// Wraps coordinates as a point of this model after validating them.
    fn point(&self, coords: Vec<S>) -> Result<GyroPoint<S>> {
        let p = GyroPoint::new(self.kind(), coords);
        self.check(&p)?;
        Ok(p)
    }

    fn check(&self, a: &GyroPoint<S>) -> Result<()> {
        if a.model() != self.kind() {
            return Err(GgvError::ModelMismatch {
                expected: self.kind(),
                found: a.model(),
            });
        }
        if a.dim() != self.dim() {
            return Err(GgvError::Domain(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                a.dim()
            )));
        }
        if a.coords().iter().any(|x| !x.is_finite()) {
            return Err(GgvError::Domain(format!("non-finite coordinates in {a}")));
        }
        if !self.in_carrier(a.coords()) {
            return Err(GgvError::Domain(format!(
                "{a} lies outside the carrier of the {} model",
                self.kind()
            )));
        }
        Ok(())
    }

    /// The unit `e`.
    fn identity(&self) -> GyroPoint<S> {
        GyroPoint::new(self.kind(), self.identity_coords())
    }

    fn wrap(&self, coords: Vec<S>) -> GyroPoint<S> {
        GyroPoint::new(self.kind(), coords)
    }

    /// `a ⊕ b`.
    fn oplus(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.add_coords(a.coords(), b.coords())))
    }

    /// `⊖a`.
    fn ominus(&self, a: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        Ok(self.wrap(self.neg_coords(a.coords())))
    }

    /// `a ⊖ b = a ⊕ (⊖b)`.
    fn ominus_between(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.add_coords(a.coords(), &self.neg_coords(b.coords()))))
    }

    /// `gyr[u,v]a`.
    fn gyr_apply(
        &self,
        u: &GyroPoint<S>,
        v: &GyroPoint<S>,
        a: &GyroPoint<S>,
    ) -> Result<GyroPoint<S>> {
        self.check(u)?;
        self.check(v)?;
        self.check(a)?;
        Ok(self.wrap(self.gyr_coords(u.coords(), v.coords(), a.coords())))
    }

    /// Brute-force gyration; the oracle for [`Gyrogroup::gyr_apply`].
    fn gyr_brute_force(
        &self,
        u: &GyroPoint<S>,
        v: &GyroPoint<S>,
        a: &GyroPoint<S>,
    ) -> Result<GyroPoint<S>> {
        self.check(u)?;
        self.check(v)?;
        self.check(a)?;
        Ok(self.wrap(self.gyr_brute_force_coords(u.coords(), v.coords(), a.coords())))
    }

    /// Coaddition `a ⊞ b = a ⊕ gyr[a, ⊖b]b`.
    fn coplus(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.coplus_coords(a.coords(), b.coords())))
    }

    fn coplus_coords(&self, a: &[S], b: &[S]) -> Vec<S> {
        let nb = self.neg_coords(b);
        let g = self.gyr_coords(a, &nb, b);
        self.add_coords(a, &g)
    }
}
