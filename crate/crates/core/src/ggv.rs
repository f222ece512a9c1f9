//! Generalized gyrovector spaces: scalar action, the injection `φ`, the
//! gyrometric, gyromidpoints and the linearized metric `f∘ϱ`.

use rand::RngCore;

use crate::error::{GgvError, Result};
use crate::gyro::{GyroPoint, Gyrogroup};
use crate::norm_value::{NormValue, NormValueSpace};
use crate::scalar::Scalar;
use crate::vector;

/// A GGV `(G, ⊕, ⊗, φ)` together with its norm-value space.
pub trait Ggv<S: Scalar>: Gyrogroup<S> {
    /// `r ⊗ a` on raw coordinates.
    fn scale_coords(&self, r: S, a: &[S]) -> Vec<S>;

    /// The injection `φ` into the ambient normed space.
    fn embed_coords(&self, a: &[S]) -> Vec<S>;

    /// Norm of the ambient space.
    fn ambient_norm(&self, v: &[S]) -> S {
        vector::norm(v)
    }

    /// `‖φ(a)‖` as a raw real.
    fn norm_value_of(&self, a: &[S]) -> S {
        self.ambient_norm(&self.embed_coords(a))
    }

    fn norm_space(&self) -> &dyn NormValueSpace<S>;

    /// Draws carrier coordinates. `spread` in `(0, 1]` shrinks the sampling
    /// region relative to the model's default test region.
    fn sample_coords(&self, rng: &mut dyn RngCore, spread: f64) -> Vec<S>;

    fn sample_point(&self, rng: &mut dyn RngCore, spread: f64) -> GyroPoint<S> {
        self.wrap(self.sample_coords(rng, spread))
    }

    /// `r ⊗ a`.
    fn otimes(&self, r: S, a: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        if !r.is_finite() {
            return Err(GgvError::Domain(format!("non-finite scalar {r}")));
        }
        Ok(self.wrap(self.scale_coords(r, a.coords())))
    }

    /// `φ(a)` in the ambient space.
    fn phi(&self, a: &GyroPoint<S>) -> Result<Vec<S>> {
        self.check(a)?;
        Ok(self.embed_coords(a.coords()))
    }

    /// `‖φ(a)‖`.
    fn gnorm(&self, a: &GyroPoint<S>) -> Result<NormValue<S>> {
        self.check(a)?;
        Ok(NormValue(self.norm_value_of(a.coords())))
    }

    fn gyrometric_coords(&self, a: &[S], b: &[S]) -> S {
        self.norm_value_of(&self.add_coords(a, &self.neg_coords(b)))
    }

    /// `ϱ(a,b) = ‖φ(a ⊖ b)‖`.
    fn gyrometric(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<NormValue<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(NormValue(self.gyrometric_coords(a.coords(), b.coords())))
    }

    /// `f(ϱ(a,b))`, a genuine metric on the carrier.
    fn metric_distance_coords(&self, a: &[S], b: &[S]) -> S {
        self.norm_space().lin(self.gyrometric_coords(a, b))
    }

    fn metric_distance(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<S> {
        let rho = self.gyrometric(a, b)?;
        self.norm_space().linearize(rho)
    }

    /// `P(a,b) = ½ ⊗ (a ⊞ b)`.
    fn midpoint_coords(&self, a: &[S], b: &[S]) -> Vec<S> {
        self.scale_coords(S::lit(0.5), &self.coplus_coords(a, b))
    }

    /// `a ⊕ ½ ⊗ (⊖a ⊕ b)`; equal to [`Ggv::midpoint_coords`].
    fn midpoint_translated_coords(&self, a: &[S], b: &[S]) -> Vec<S> {
        let d = self.add_coords(&self.neg_coords(a), b);
        self.add_coords(a, &self.scale_coords(S::lit(0.5), &d))
    }

    fn gyromidpoint(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.midpoint_coords(a.coords(), b.coords())))
    }

    fn gyromidpoint_translated(&self, a: &GyroPoint<S>, b: &GyroPoint<S>) -> Result<GyroPoint<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.midpoint_translated_coords(a.coords(), b.coords())))
    }

    /// Point reflection `2 ⊗ a ⊖ x`.
    fn reflect_coords(&self, a: &[S], x: &[S]) -> Vec<S> {
        self.add_coords(&self.scale_coords(S::lit(2.0), a), &self.neg_coords(x))
    }

    fn nv_add(&self, a: NormValue<S>, b: NormValue<S>) -> Result<NormValue<S>> {
        self.norm_space().add(a, b)
    }

    fn nv_smul(&self, r: S, a: NormValue<S>) -> Result<NormValue<S>> {
        self.norm_space().smul(r, a)
    }

    fn linearize(&self, a: NormValue<S>) -> Result<S> {
        self.norm_space().linearize(a)
    }

    fn delinearize(&self, t: S) -> Result<NormValue<S>> {
        self.norm_space().delinearize(t)
    }

    fn nv_le_nonneg(&self, a: NormValue<S>, b: NormValue<S>) -> Result<bool> {
        self.norm_space().le_nonneg(a, b)
    }

    fn nv_zero(&self) -> NormValue<S> {
        self.norm_space().zero()
    }
}
