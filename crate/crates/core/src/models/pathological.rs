//! The GGV on `G = (-∞,-1) ∪ [1,∞)` obtained by transplanting the additive
//! group of `ℝ` through `Φ`. Its unit is `1` and the zero of its norm-value
//! space is the real number `1`, not `0`.
//!
//! The norm-value space `(-∞,-1] ∪ [1,∞)` carries the structure of `ℝ`
//! transplanted through `T`, where `T(x) = eˣ` for `x ≥ 0` and `T(x) = S(x)`
//! for `x < 0`. `S` is pinned as: `S(x) = x` for negative integers and
//! `S(x) = x - 1` otherwise, a bijection `(-∞,0) → (-∞,-1]`.

use std::marker::PhantomData;

use rand::{Rng, RngCore};

use crate::error::{GgvError, Result};
use crate::ggv::Ggv;
use crate::gyro::{Gyrogroup, ModelKind};
use crate::norm_value::NormValueSpace;
use crate::scalar::Scalar;

/// Largest `|a|` drawn by the sampler.
pub const PATHOLOGICAL_SAMPLE_MAX: f64 = 20.0;

fn in_carrier<S: Scalar>(a: S) -> bool {
    a >= S::one() || a < -S::one()
}

fn in_norm_set<S: Scalar>(a: S) -> bool {
    a.abs() >= S::one()
}

/// `Φ(x) = eˣ` for `x ≥ 0`, `-e⁻ˣ` for `x < 0`.
pub fn path_phi<S: Scalar>(x: S) -> S {
    if x >= S::zero() {
        x.exp()
    } else {
        let y = -(-x).exp();
        // exp(-x) rounds to 1 for -x below half an ulp; -1 is not in the carrier
        if y >= -S::one() {
            -(S::one() + S::epsilon())
        } else {
            y
        }
    }
}

pub(crate) fn phi_inv_raw<S: Scalar>(a: S) -> S {
    if a >= S::one() {
        a.ln()
    } else {
        -(-a).ln()
    }
}

/// `Φ⁻¹`, defined on the carrier.
pub fn path_phi_inv<S: Scalar>(a: S) -> Result<S> {
    if !a.is_finite() || !in_carrier(a) {
        return Err(GgvError::Domain(format!(
            "{a} is outside (-inf,-1) u [1,inf)"
        )));
    }
    Ok(phi_inv_raw(a))
}

/// The pinned bijection `S: (-∞,0) → (-∞,-1]`.
pub fn path_s<S: Scalar>(x: S) -> Result<S> {
    if !x.is_finite() || x >= S::zero() {
        return Err(GgvError::Domain(format!(
            "S is defined on (-inf,0), got {x}"
        )));
    }
    Ok(s_raw(x))
}

fn s_raw<S: Scalar>(x: S) -> S {
    if x.is_integer() {
        x
    } else {
        x - S::one()
    }
}

pub fn path_s_inv<S: Scalar>(y: S) -> Result<S> {
    if !y.is_finite() || y > -S::one() {
        return Err(GgvError::Domain(format!("S maps onto (-inf,-1], got {y}")));
    }
    Ok(s_inv_raw(y))
}

fn s_inv_raw<S: Scalar>(y: S) -> S {
    if y.is_integer() {
        y
    } else {
        y + S::one()
    }
}

/// `T(x) = eˣ` for `x ≥ 0`, `S(x)` for `x < 0`.
pub fn path_t<S: Scalar>(x: S) -> S {
    if x >= S::zero() {
        x.exp()
    } else {
        s_raw(x)
    }
}

fn t_inv_raw<S: Scalar>(a: S) -> S {
    if a >= S::one() {
        a.ln()
    } else {
        s_inv_raw(a)
    }
}

/// `T⁻¹`, defined on `(-∞,-1] ∪ [1,∞)`.
pub fn path_t_inv<S: Scalar>(a: S) -> Result<S> {
    if !a.is_finite() || !in_norm_set(a) {
        return Err(GgvError::Domain(format!(
            "{a} is outside the norm-value set (-inf,-1] u [1,inf)"
        )));
    }
    Ok(t_inv_raw(a))
}

/// Norm-value space of the pathological model, linearized by `f = T⁻¹`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExpTransplantLine;

impl<S: Scalar> NormValueSpace<S> for ExpTransplantLine {
    fn contains(&self, value: S) -> bool {
        in_norm_set(value)
    }

    fn lin(&self, value: S) -> S {
        t_inv_raw(value)
    }

    fn lin_inv(&self, t: S) -> S {
        path_t(t)
    }
}

#[derive(Debug, Clone, Default)]
pub struct PathologicalLine<S> {
    _scalar: PhantomData<S>,
}

impl<S: Scalar> PathologicalLine<S> {
    pub fn new() -> Self {
        Self {
            _scalar: PhantomData,
        }
    }
}

impl<S: Scalar> Gyrogroup<S> for PathologicalLine<S> {
    fn kind(&self) -> ModelKind {
        ModelKind::Pathological
    }

    fn dim(&self) -> usize {
        1
    }

    fn in_carrier(&self, coords: &[S]) -> bool {
        in_carrier(coords[0])
    }

    fn identity_coords(&self) -> Vec<S> {
        vec![S::one()]
    }

    fn add_coords(&self, a: &[S], b: &[S]) -> Vec<S> {
        vec![path_phi(phi_inv_raw(a[0]) + phi_inv_raw(b[0]))]
    }

    fn neg_coords(&self, a: &[S]) -> Vec<S> {
        vec![path_phi(-phi_inv_raw(a[0]))]
    }

    /// Commutative group: every gyration is the identity.
    fn gyr_coords(&self, _u: &[S], _v: &[S], a: &[S]) -> Vec<S> {
        a.to_vec()
    }
}

impl<S: Scalar> Ggv<S> for PathologicalLine<S> {
    fn scale_coords(&self, r: S, a: &[S]) -> Vec<S> {
        vec![path_phi(r * phi_inv_raw(a[0]))]
    }

    fn embed_coords(&self, a: &[S]) -> Vec<S> {
        a.to_vec()
    }

    fn ambient_norm(&self, v: &[S]) -> S {
        v[0].abs()
    }

    fn norm_space(&self) -> &dyn NormValueSpace<S> {
        &ExpTransplantLine
    }

    fn sample_coords(&self, rng: &mut dyn RngCore, spread: f64) -> Vec<S> {
        let hi = PATHOLOGICAL_SAMPLE_MAX
            .powf(spread.clamp(0.0, 1.0))
            .max(1.0 + 1e-9);
        let magnitude = rng.gen_range(1.0..=hi);
        let value = if rng.gen_bool(0.5) {
            magnitude
        } else {
            -magnitude.max(1.0 + 1e-12)
        };
        vec![S::lit(value)]
    }
}
