//! Tolerance policy shared by the verifiers.
//!
//! Residuals are measured through the linearized gyrometric `f∘ϱ` (or the
//! linearization of norm values) and scaled by `max(1, magnitude)`: relative
//! above unit scale, absolute below it.

use serde::{Deserialize, Serialize};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Floor under which a residual is treated as exact zero when comparing
/// against expected zero values.
pub const ABSOLUTE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub fn accepts(self, residual: f64) -> bool {
        residual.is_finite() && residual <= self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_TOLERANCE)
    }
}

/// `diff / max(1, |magnitude|)`.
pub fn scaled(diff: f64, magnitude: f64) -> f64 {
    diff.abs() / magnitude.abs().max(1.0)
}
