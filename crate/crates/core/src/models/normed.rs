//! A real normed space viewed as a GGV: vector addition, trivial gyrations.

use rand::{Rng, RngCore};

use crate::ggv::Ggv;
use crate::gyro::{Gyrogroup, ModelKind};
use crate::norm_value::{NormValueSpace, StandardLine};
use crate::scalar::Scalar;
use crate::vector;

/// Half-width of the coordinate box used for sampling.
pub const NORMED_SAMPLE_HALF_WIDTH: f64 = 5.0;

#[derive(Debug, Clone)]
pub struct NormedSpace<S> {
    dim: usize,
    _scalar: std::marker::PhantomData<S>,
}

impl<S: Scalar> NormedSpace<S> {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            _scalar: std::marker::PhantomData,
        }
    }
}

impl<S: Scalar> Gyrogroup<S> for NormedSpace<S> {
    fn kind(&self) -> ModelKind {
        ModelKind::Normed
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn in_carrier(&self, _coords: &[S]) -> bool {
        true
    }

    fn identity_coords(&self) -> Vec<S> {
        vec![S::zero(); self.dim]
    }

    fn add_coords(&self, a: &[S], b: &[S]) -> Vec<S> {
        vector::add(a, b)
    }

    fn neg_coords(&self, a: &[S]) -> Vec<S> {
        a.iter().map(|&x| -x).collect()
    }

    fn gyr_coords(&self, _u: &[S], _v: &[S], a: &[S]) -> Vec<S> {
        a.to_vec()
    }
}

impl<S: Scalar> Ggv<S> for NormedSpace<S> {
    fn scale_coords(&self, r: S, a: &[S]) -> Vec<S> {
        vector::scale(r, a)
    }

    fn embed_coords(&self, a: &[S]) -> Vec<S> {
        a.to_vec()
    }

    fn norm_space(&self) -> &dyn NormValueSpace<S> {
        &StandardLine
    }

    fn sample_coords(&self, rng: &mut dyn RngCore, spread: f64) -> Vec<S> {
        let w = NORMED_SAMPLE_HALF_WIDTH * spread;
        (0..self.dim)
            .map(|_| S::lit(rng.gen_range(-w..=w)))
            .collect()
    }
}
