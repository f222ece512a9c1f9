//! The midpoint defect of a gyrometric-preserving map and the reflection
//! iteration that bounds it.

use serde::Serialize;

use super::check_gyrometric_preserving;
use super::map::GyroMap;
use crate::error::{GgvError, Result};
use crate::gyro::GyroPoint;
use crate::models::GgvModel;
use crate::scalar::Scalar;

/// Largest supported `n_max`; the iteration applies `S` up to `2^n_max` times.
pub const DEFECT_MAX_N: u32 = 20;

/// Trace of [`defect_experiment`].
#[derive(Debug, Clone, Serialize)]
pub struct DefectTrace {
    /// `d = f₂(ϱ₂(T(p), p′))` with `p = P(x₁,x₂)` and `p′ = P(Tx₁,Tx₂)`.
    pub defect: f64,
    /// `f₁(ϱ₁(S^{2ⁿ}(p), p))` for `n = 0..=n_max`.
    pub iterates: Vec<f64>,
    /// `2 f₁(ϱ₁(x₁, p))`.
    pub bound: f64,
    /// Worst of `f₁(ϱ₁(S(xᵢ), xᵢ))`.
    pub fixed_point_residual: f64,
    /// Worst excess of an iterate over the bound (0 when all stay below).
    pub bound_excess: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// `x ↦ a ⊕ (a ⊖ x)`, the point reflection at `a`.
fn reflect<S: Scalar>(m: &GgvModel<S>, a: &[S], x: &[S]) -> Vec<S> {
    m.add_coords(a, &m.add_coords(a, &m.neg_coords(x)))
}

/// Runs the reflection iteration `S = φ₁ ∘ T⁻¹ ∘ φ₂ ∘ T` for `T` at the
/// pair `(x₁, x₂)`, where `φ₁`, `φ₂` reflect at the midpoints `p`, `p′`.
pub fn defect_experiment<S: Scalar>(
    t: &GyroMap<S>,
    x1: &GyroPoint<S>,
    x2: &GyroPoint<S>,
    n_max: u32,
    tolerance: f64,
) -> Result<DefectTrace> {
    if n_max > DEFECT_MAX_N {
        return Err(GgvError::Config(format!(
            "n_max must be at most {DEFECT_MAX_N}, got {n_max}"
        )));
    }
    let dom = t.domain();
    let cod = t.codomain();
    dom.check(x1)?;
    dom.check(x2)?;
    check_gyrometric_preserving(t, 0, tolerance)?;
    let t_inv = t.inverse();

    let (x1, x2) = (x1.coords(), x2.coords());
    let p = dom.midpoint_coords(x1, x2);
    let p2 = cod.midpoint_coords(&t.apply_coords(x1), &t.apply_coords(x2));
    let s_map = |x: &[S]| -> Vec<S> {
        let y = reflect(cod, &p2, &t.apply_coords(x));
        reflect(dom, &p, &t_inv.apply_coords(&y))
    };
    let dist = |a: &[S], b: &[S]| dom.metric_distance_coords(a, b).as_f64();

    let defect = cod
        .metric_distance_coords(&t.apply_coords(&p), &p2)
        .as_f64();
    let bound = 2.0 * dist(x1, &p);
    let fixed_point_residual = dist(&s_map(x1), x1).max(dist(&s_map(x2), x2));

    let mut iterates = Vec::with_capacity(n_max as usize + 1);
    let mut q = s_map(&p);
    iterates.push(dist(&q, &p));
    for n in 1..=n_max {
        for _ in 0..(1u64 << (n - 1)) {
            q = s_map(&q);
        }
        iterates.push(dist(&q, &p));
    }
    let bound_excess = iterates.iter().fold(0.0f64, |acc, &r| {
        if r.is_nan() {
            f64::NAN
        } else {
            acc.max(r - bound)
        }
    });

    let pass =
        defect <= tolerance && fixed_point_residual <= tolerance && bound_excess <= tolerance;
    Ok(DefectTrace {
        defect,
        iterates,
        bound,
        fixed_point_residual,
        bound_excess,
        tolerance,
        pass,
    })
}
