//! Structured verification results, serialized as JSON by the CLI.

use serde::{Deserialize, Serialize};

/// One verified property:
/// `{property, model, seed, samples, max_residual, tolerance, pass}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: String,
    pub model: String,
    pub seed: u64,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(
        property: impl Into<String>,
        model: impl Into<String>,
        seed: u64,
        samples: usize,
        max_residual: f64,
        tolerance: f64,
    ) -> Self {
        let pass = max_residual.is_finite() && max_residual <= tolerance;
        Self {
            property: property.into(),
            model: model.into(),
            seed,
            samples,
            max_residual,
            tolerance,
            pass,
        }
    }
}

pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
