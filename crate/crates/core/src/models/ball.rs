//! Einstein and Möbius gyrovector spaces on the open ball `‖v‖ < s`.
//!
//! Both share the scalar action `r ⊗ v = s·tanh(r·artanh(‖v‖/s))·v/‖v‖` and
//! the injection `φ(v) = s·artanh(‖v‖/s)·v/‖v‖` (the rapidity vector), so that
//! `‖φ(r⊗v)‖ = |r|·‖φ(v)‖` and the norm-value space is `ℝ` with its usual
//! operations.

use log::warn;
use rand::{Rng, RngCore};

use crate::ggv::Ggv;
use crate::gyro::{Gyrogroup, ModelKind};
use crate::norm_value::{NormValueSpace, StandardLine};
use crate::scalar::Scalar;
use crate::vector::{dot, lin_comb, norm, norm_sq, scale, sub};

/// Largest sampling radius as a fraction of `s`; γ-factors blow up at the boundary.
pub const BALL_SAMPLE_FRACTION: f64 = 0.95;

fn in_ball<S: Scalar>(v: &[S], s: S) -> bool {
    norm(v) < s
}

/// Pulls a result that rounding pushed onto (or past) the boundary back inside.
fn clamp_into_ball<S: Scalar>(v: Vec<S>, s: S, kind: ModelKind) -> Vec<S> {
    let n = norm(&v);
    let limit = s * (S::one() - S::lit(2.0) * S::epsilon());
    if n.is_finite() && n <= limit {
        return v;
    }
    warn!("{kind} result with norm {n} reached the ball boundary (s = {s}); clamped");
    if !n.is_finite() || n == S::zero() {
        return v;
    }
    scale(limit / n, &v)
}

fn ball_scale<S: Scalar>(r: S, v: &[S], s: S, kind: ModelKind) -> Vec<S> {
    let n = norm(v);
    if n == S::zero() {
        return vec![S::zero(); v.len()];
    }
    let rapidity = (n / s).artanh();
    let target = s * (r * rapidity).tanh();
    clamp_into_ball(scale(target / n, v), s, kind)
}

fn ball_embed<S: Scalar>(v: &[S], s: S) -> Vec<S> {
    let n = norm(v);
    if n == S::zero() {
        return vec![S::zero(); v.len()];
    }
    scale(s * (n / s).artanh() / n, v)
}

fn ball_norm_value<S: Scalar>(v: &[S], s: S) -> S {
    s * (norm(v) / s).artanh()
}

/// `1 − ‖v‖²/s²`.
fn deficit<S: Scalar>(v: &[S], s: S) -> S {
    S::one() - norm_sq(v) / (s * s)
}

/// `ϱ(a,b)` in the Möbius ball without forming `a ⊖ b`, whose denominator
/// cancels catastrophically near the boundary:
/// `ϱ/s = asinh(‖a−b‖/s / √((1−‖a‖²/s²)(1−‖b‖²/s²)))`.
fn mobius_gyrometric<S: Scalar>(a: &[S], b: &[S], s: S) -> S {
    let d = norm(&sub(a, b)) / s;
    s * (d / (deficit(a, s) * deficit(b, s)).sqrt()).asinh()
}

/// `ϱ(a,b)` in the Einstein ball via `sinh(ϱ/s) = γ_a γ_b √(‖d‖²(1−‖a‖²) + (a·d)²)`
/// with `d = b − a` (all lengths in units of `s`).
fn einstein_gyrometric<S: Scalar>(a: &[S], b: &[S], s: S) -> S {
    let d = sub(b, a);
    let s2 = s * s;
    let da = deficit(a, s);
    let ad = dot(a, &d) / s2;
    let inner = norm_sq(&d) / s2 * da + ad * ad;
    s * (inner.sqrt() / (da * deficit(b, s)).sqrt()).asinh()
}

fn ball_sample<S: Scalar>(rng: &mut dyn RngCore, dim: usize, s: S, spread: f64) -> Vec<S> {
    let dir = unit_direction(rng, dim);
    let radius = rng.gen_range(0.0..=BALL_SAMPLE_FRACTION * spread.clamp(0.0, 1.0));
    dir.into_iter().map(|x| S::lit(x * radius) * s).collect()
}

/// Uniformly distributed unit vector (rejection sampling in the cube).
pub(crate) fn unit_direction(rng: &mut dyn RngCore, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Einstein velocity addition on the ball of radius `s`.
#[derive(Debug, Clone)]
pub struct EinsteinBall<S> {
    dim: usize,
    s: S,
}

impl<S: Scalar> EinsteinBall<S> {
    pub fn new(dim: usize, s: S) -> Self {
        Self { dim, s }
    }

    pub fn radius(&self) -> S {
        self.s
    }

    fn gamma(&self, v: &[S]) -> S {
        S::one() / (S::one() - norm_sq(v) / (self.s * self.s)).sqrt()
    }
}

impl<S: Scalar> Gyrogroup<S> for EinsteinBall<S> {
    fn kind(&self) -> ModelKind {
        ModelKind::Einstein
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn in_carrier(&self, coords: &[S]) -> bool {
        in_ball(coords, self.s)
    }

    fn identity_coords(&self) -> Vec<S> {
        vec![S::zero(); self.dim]
    }

    fn add_coords(&self, u: &[S], v: &[S]) -> Vec<S> {
        // u ⊕ v = (u + v/γ_u + (γ_u/(1+γ_u))(u·v/s²) u) / (1 + u·v/s²)
        let one = S::one();
        let s2 = self.s * self.s;
        let gu = self.gamma(u);
        let uv = dot(u, v) / s2;
        let denom = one + uv;
        let cu = (one + gu / (one + gu) * uv) / denom;
        let cv = one / (gu * denom);
        clamp_into_ball(lin_comb(cu, u, cv, v), self.s, ModelKind::Einstein)
    }

    fn neg_coords(&self, a: &[S]) -> Vec<S> {
        a.iter().map(|&x| -x).collect()
    }

    fn gyr_coords(&self, u: &[S], v: &[S], w: &[S]) -> Vec<S> {
        let one = S::one();
        let two = S::lit(2.0);
        let s2 = self.s * self.s;
        let s4 = s2 * s2;
        let gu = self.gamma(u);
        let gv = self.gamma(v);
        let uw = dot(u, w);
        let vw = dot(v, w);
        let uv = dot(u, v);
        let a = -(gu * gu / (gu + one)) * (gv - one) * uw / s2
            + gu * gv * vw / s2
            + two * (gu * gu * gv * gv / ((gu + one) * (gv + one))) * uv * vw / s4;
        let b = -(gv / (gv + one)) * (gu * (gv + one) * uw + (gu - one) * gv * vw) / s2;
        let d = gu * gv * (one + uv / s2) + one;
        let correction = lin_comb(a / d, u, b / d, v);
        w.iter().zip(&correction).map(|(&x, &c)| x + c).collect()
    }
}

impl<S: Scalar> Ggv<S> for EinsteinBall<S> {
    fn scale_coords(&self, r: S, a: &[S]) -> Vec<S> {
        ball_scale(r, a, self.s, ModelKind::Einstein)
    }

    fn embed_coords(&self, a: &[S]) -> Vec<S> {
        ball_embed(a, self.s)
    }

    fn norm_value_of(&self, a: &[S]) -> S {
        ball_norm_value(a, self.s)
    }

    fn gyrometric_coords(&self, a: &[S], b: &[S]) -> S {
        einstein_gyrometric(a, b, self.s)
    }

    fn norm_space(&self) -> &dyn NormValueSpace<S> {
        &StandardLine
    }

    fn sample_coords(&self, rng: &mut dyn RngCore, spread: f64) -> Vec<S> {
        ball_sample(rng, self.dim, self.s, spread)
    }
}

/// Möbius addition on the ball of radius `s`.
#[derive(Debug, Clone)]
pub struct MobiusBall<S> {
    dim: usize,
    s: S,
}

impl<S: Scalar> MobiusBall<S> {
    pub fn new(dim: usize, s: S) -> Self {
        Self { dim, s }
    }

    pub fn radius(&self) -> S {
        self.s
    }
}

impl<S: Scalar> Gyrogroup<S> for MobiusBall<S> {
    fn kind(&self) -> ModelKind {
        ModelKind::Mobius
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn in_carrier(&self, coords: &[S]) -> bool {
        in_ball(coords, self.s)
    }

    fn identity_coords(&self) -> Vec<S> {
        vec![S::zero(); self.dim]
    }

    fn add_coords(&self, u: &[S], v: &[S]) -> Vec<S> {
        let one = S::one();
        let two = S::lit(2.0);
        let s2 = self.s * self.s;
        let uv = dot(u, v) / s2;
        let uu = norm_sq(u) / s2;
        let vv = norm_sq(v) / s2;
        let denom = one + two * uv + uu * vv;
        let cu = (one + two * uv + vv) / denom;
        let cv = (one - uu) / denom;
        clamp_into_ball(lin_comb(cu, u, cv, v), self.s, ModelKind::Mobius)
    }

    fn neg_coords(&self, a: &[S]) -> Vec<S> {
        a.iter().map(|&x| -x).collect()
    }

    fn gyr_coords(&self, u: &[S], v: &[S], w: &[S]) -> Vec<S> {
        let one = S::one();
        let two = S::lit(2.0);
        let s2 = self.s * self.s;
        let s4 = s2 * s2;
        let uw = dot(u, w);
        let vw = dot(v, w);
        let uv = dot(u, v);
        let uu = norm_sq(u);
        let vv = norm_sq(v);
        let a = -uw * vv / s4 + vw / s2 + two * uv * vw / s4;
        let b = -vw * uu / s4 - uw / s2;
        let d = one + two * uv / s2 + uu * vv / s4;
        let correction = lin_comb(two * a / d, u, two * b / d, v);
        w.iter().zip(&correction).map(|(&x, &c)| x + c).collect()
    }
}

impl<S: Scalar> Ggv<S> for MobiusBall<S> {
    fn scale_coords(&self, r: S, a: &[S]) -> Vec<S> {
        ball_scale(r, a, self.s, ModelKind::Mobius)
    }

    fn embed_coords(&self, a: &[S]) -> Vec<S> {
        ball_embed(a, self.s)
    }

    fn norm_value_of(&self, a: &[S]) -> S {
        ball_norm_value(a, self.s)
    }

    fn gyrometric_coords(&self, a: &[S], b: &[S]) -> S {
        mobius_gyrometric(a, b, self.s)
    }

    fn norm_space(&self) -> &dyn NormValueSpace<S> {
        &StandardLine
    }

    fn sample_coords(&self, rng: &mut dyn RngCore, spread: f64) -> Vec<S> {
        ball_sample(rng, self.dim, self.s, spread)
    }
}
