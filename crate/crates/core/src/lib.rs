//! Generalized gyrovector spaces (GGVs).
//!
//! * [`gyro`]: the gyrogroup layer (`⊕`, `⊖`, `gyr`, coaddition).
//! * [`ggv`]: scalar action, the injection `φ`, norm values, the gyrometric
//!   `ϱ(a,b) = ‖φ(a ⊖ b)‖`, gyromidpoints and the metric `f∘ϱ`.
//! * [`models`]: the real normed space, the Einstein and Möbius balls and the
//!   pathological model whose unit has norm value `1`.
//! * [`verify`]: seeded property suites for the axioms and derived laws.
//! * [`isometry`]: gyrometric-preserving maps, midpoint preservation,
//!   the `T = T(e) ⊕ T₀` decomposition and the defect iteration.
//!
//! Everything is generic over the scalar type; the aliases below fix `f64`.

pub mod error;
pub mod ggv;
pub mod gyro;
pub mod isometry;
pub mod models;
pub mod norm_value;
pub mod report;
pub mod scalar;
pub mod tolerance;
pub mod vector;
pub mod verify;

pub use error::{GgvError, Result};
pub use ggv::Ggv;
pub use gyro::{GyroPoint, Gyrogroup, ModelKind};
pub use isometry::{
    decompose_mazur_ulam, defect_experiment, left_translation, point_reflection, random_isometry,
    verify_midpoint_preservation, DecompositionReport, DefectTrace, GyroMap, MapStep,
    MidpointReport,
};
pub use models::{make_model, GgvModel, ModelConfig};
pub use norm_value::{NormValue, NormValueSpace, StandardLine};
pub use report::VerificationReport;
pub use scalar::Scalar;
pub use tolerance::{Tolerance, DEFAULT_TOLERANCE};

/// Double-precision point.
pub type Point = GyroPoint<f64>;
/// Double-precision model handle.
pub type Model = GgvModel<f64>;
/// Double-precision norm value.
pub type Norm = NormValue<f64>;
/// Double-precision gyrometric-preserving map.
pub type Map = GyroMap<f64>;

pub type Point32 = GyroPoint<f32>;
pub type Model32 = GgvModel<f32>;
