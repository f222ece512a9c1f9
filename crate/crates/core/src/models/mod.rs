//! Concrete GGV instances and the runtime-selected [`GgvModel`] handle.

mod ball;
mod normed;
mod pathological;

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{GgvError, Result};
use crate::ggv::Ggv;
use crate::gyro::ModelKind;
use crate::scalar::Scalar;

pub(crate) use ball::unit_direction;
pub use ball::{EinsteinBall, MobiusBall, BALL_SAMPLE_FRACTION};
pub use normed::{NormedSpace, NORMED_SAMPLE_HALF_WIDTH};
pub use pathological::{
    path_phi, path_phi_inv, path_s, path_s_inv, path_t, path_t_inv, ExpTransplantLine,
    PathologicalLine, PATHOLOGICAL_SAMPLE_MAX,
};

fn default_dim() -> usize {
    2
}

fn default_radius() -> f64 {
    1.0
}

/// Which model to build, its dimension and (for ball models) its radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub kind: ModelKind,
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default = "default_radius")]
    pub s: f64,
}

impl ModelConfig {
    pub fn new(kind: ModelKind, dim: usize, s: f64) -> Self {
        Self { kind, dim, s }
    }

    pub fn normed(dim: usize) -> Self {
        Self::new(ModelKind::Normed, dim, 1.0)
    }

    pub fn einstein(dim: usize, s: f64) -> Self {
        Self::new(ModelKind::Einstein, dim, s)
    }

    pub fn mobius(dim: usize, s: f64) -> Self {
        Self::new(ModelKind::Mobius, dim, s)
    }

    pub fn pathological() -> Self {
        Self::new(ModelKind::Pathological, 1, 1.0)
    }

    /// Default configuration for `kind` (dimension 2, radius 1).
    pub fn default_for(kind: ModelKind) -> Self {
        match kind {
            ModelKind::Pathological => Self::pathological(),
            _ => Self::new(kind, default_dim(), default_radius()),
        }
    }

    /// Checks the invariants and returns the normalized configuration
    /// (the pathological model is always one-dimensional).
    pub fn validated(self) -> Result<Self> {
        if self.kind == ModelKind::Pathological {
            return Ok(Self {
                dim: 1,
                s: 1.0,
                ..self
            });
        }
        if self.dim == 0 {
            return Err(GgvError::Config("dim must be at least 1".into()));
        }
        if self.kind.is_ball() && !(self.s.is_finite() && self.s > 0.0) {
            return Err(GgvError::Config(format!(
                "ball radius s must be a positive real, got {}",
                self.s
            )));
        }
        Ok(self)
    }
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self::default_for(ModelKind::Normed)
    }
}

impl fmt::Display for ModelConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModelKind::Pathological => write!(f, "pathological"),
            ModelKind::Normed => write!(f, "normed(dim={})", self.dim),
            k => write!(f, "{k}(dim={}, s={})", self.dim, self.s),
        }
    }
}

/// A constructed, immutable, cheaply clonable GGV.
#[derive(Clone)]
pub struct GgvModel<S: Scalar> {
    config: ModelConfig,
    inner: Arc<dyn Ggv<S>>,
}

impl<S: Scalar> GgvModel<S> {
    pub fn config(&self) -> ModelConfig {
        self.config
    }

    /// Ball radius as a scalar (1 for the unbounded models).
    pub fn radius(&self) -> S {
        S::lit(self.config.s)
    }

    /// Whether ambient rotations are automorphisms of this model.
    pub fn supports_rotations(&self) -> bool {
        self.config.kind != ModelKind::Pathological && self.config.dim >= 2
    }

    /// Identity of the underlying model instance (same kind and parameters).
    pub fn same_as(&self, other: &GgvModel<S>) -> bool {
        self.config == other.config
    }
}

impl<S: Scalar> Deref for GgvModel<S> {
    type Target = dyn Ggv<S>;

    fn deref(&self) -> &Self::Target {
        self.inner.as_ref()
    }
}

impl<S: Scalar> fmt::Debug for GgvModel<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GgvModel")
            .field("config", &self.config)
            .finish()
    }
}

impl<S: Scalar> fmt::Display for GgvModel<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.config.fmt(f)
    }
}

/// Builds the model described by `cfg`.
pub fn make_model<S: Scalar>(cfg: ModelConfig) -> Result<GgvModel<S>> {
    let config = cfg.validated()?;
    let s = S::lit(config.s);
    let inner: Arc<dyn Ggv<S>> = match config.kind {
        ModelKind::Normed => Arc::new(NormedSpace::new(config.dim)),
        ModelKind::Einstein => Arc::new(EinsteinBall::new(config.dim, s)),
        ModelKind::Mobius => Arc::new(MobiusBall::new(config.dim, s)),
        ModelKind::Pathological => Arc::new(PathologicalLine::new()),
    };
    Ok(GgvModel { config, inner })
}
