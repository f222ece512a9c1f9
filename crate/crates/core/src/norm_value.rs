//! The one-dimensional norm-value space `(‖φ(G)‖, ⊕′, ⊗′)`.
//!
//! Norm values are reals, but the linear structure on them is model-supplied
//! and its zero need not be the real number `0`. Every space carries a linear
//! bijection `f` onto `ℝ` (the *linearization*); `⊕′` and `⊗′` are the
//! operations transplanted through it, and order comparisons are only
//! meaningful on the nonnegative part.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GgvError, Result};
use crate::scalar::Scalar;

/// An element of `‖φ(G)‖`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormValue<S>(pub S);

impl<S: Scalar> NormValue<S> {
    pub fn value(self) -> S {
        self.0
    }
}

impl<S: Scalar> fmt::Display for NormValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub trait NormValueSpace<S: Scalar>: fmt::Debug + Send + Sync {
    /// Membership of a real in the norm-value set.
    fn contains(&self, value: S) -> bool;

    /// The linearization `f` on a member of the set.
    fn lin(&self, value: S) -> S;

    /// `f⁻¹`.
    fn lin_inv(&self, t: S) -> S;

    fn check(&self, a: NormValue<S>) -> Result<()> {
        if a.0.is_finite() && self.contains(a.0) {
            Ok(())
        } else {
            Err(GgvError::Domain(format!(
                "{} is not in the norm-value set",
                a.0
            )))
        }
    }

    /// `0_{‖φ(G)‖}`.
    fn zero(&self) -> NormValue<S> {
        NormValue(self.lin_inv(S::zero()))
    }

    fn linearize(&self, a: NormValue<S>) -> Result<S> {
        self.check(a)?;
        Ok(self.lin(a.0))
    }

    fn delinearize(&self, t: S) -> Result<NormValue<S>> {
        if !t.is_finite() {
            return Err(GgvError::Domain(format!("cannot delinearize {t}")));
        }
        let a = NormValue(self.lin_inv(t));
        self.check(a).map_err(|_| {
            GgvError::Internal(format!("lin_inv({t}) = {} left the norm-value set", a.0))
        })?;
        Ok(a)
    }

    /// `A ⊕′ B`.
    fn add(&self, a: NormValue<S>, b: NormValue<S>) -> Result<NormValue<S>> {
        let t = self.linearize(a)? + self.linearize(b)?;
        self.delinearize(t)
    }

    /// `r ⊗′ A`.
    fn smul(&self, r: S, a: NormValue<S>) -> Result<NormValue<S>> {
        let t = r * self.linearize(a)?;
        self.delinearize(t)
    }

    /// `A ≤ B` on the nonnegative part of the set.
    ///
    /// Negative reals are rejected: the order statements only cover values `≥ 0`.
    fn le_nonneg(&self, a: NormValue<S>, b: NormValue<S>) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        if a.0 < S::zero() || b.0 < S::zero() {
            return Err(GgvError::Domain(format!(
                "order comparison of {} and {} outside the nonnegative part",
                a.0, b.0
            )));
        }
        Ok(a.0 <= b.0)
    }
}

/// `ℝ` with its usual operations; `f` is the identity.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardLine;

impl<S: Scalar> NormValueSpace<S> for StandardLine {
    fn contains(&self, value: S) -> bool {
        value.is_finite()
    }

    fn lin(&self, value: S) -> S {
        value
    }

    fn lin_inv(&self, t: S) -> S {
        t
    }

    fn add(&self, a: NormValue<S>, b: NormValue<S>) -> Result<NormValue<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(NormValue(a.0 + b.0))
    }

    fn smul(&self, r: S, a: NormValue<S>) -> Result<NormValue<S>> {
        self.check(a)?;
        Ok(NormValue(r * a.0))
    }
}
