//! Gyrometric-preserving maps and the numerical Mazur–Ulam experiments:
//! midpoint preservation, the translation/automorphism decomposition and the
//! defect iteration.

mod defect;
mod map;
mod random;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{GgvError, Result};
use crate::gyro::GyroPoint;
use crate::models::GgvModel;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tolerance::scaled;

pub use defect::{defect_experiment, DefectTrace, DEFECT_MAX_N};
pub use map::{einstein_partner, left_translation, point_reflection, GyroMap, MapStep};
pub use random::{
    random_cross_isometry, random_isometry, random_isometry_from, Primitive, CENTER_SPREAD,
    PRESERVATION_PAIRS, PRESERVATION_TOLERANCE,
};

/// Spread of the sample points fed to the map experiments.
pub const LAB_SPREAD: f64 = 0.5;

/// Dyadic scalars `m / 2^DYADIC_LEVEL` in `[-DYADIC_BOUND, DYADIC_BOUND]`.
pub const DYADIC_LEVEL: u32 = 6;
pub const DYADIC_BOUND: f64 = 4.0;

/// Points on which the full dyadic ladder is checked.
pub const DYADIC_POINTS: usize = 16;

/// Uniform real scalars in `[-DYADIC_BOUND, DYADIC_BOUND]` checked per point.
pub const GENERAL_SCALARS: usize = 32;

/// Distance in the codomain, linearized and scaled.
fn codomain_residual<S: Scalar>(m: &GgvModel<S>, a: &[S], b: &[S]) -> f64 {
    m.metric_distance_coords(a, b).as_f64()
}

/// Worst relative deviation `|ϱ₂(Ta,Tb) − ϱ₁(a,b)|` over `pairs` sampled pairs.
pub fn preservation_residual<S: Scalar>(t: &GyroMap<S>, pairs: usize, seed: u64) -> f64 {
    let dom = t.domain();
    let cod = t.codomain();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let a = dom.sample_coords(&mut rng, LAB_SPREAD);
        let b = dom.sample_coords(&mut rng, LAB_SPREAD);
        let before = dom.gyrometric_coords(&a, &b).as_f64();
        let after = cod
            .gyrometric_coords(&t.apply_coords(&a), &t.apply_coords(&b))
            .as_f64();
        let r = scaled(after - before, before);
        if r.is_nan() {
            return f64::NAN;
        }
        worst = worst.max(r);
    }
    worst
}

/// Errors with [`GgvError::Precondition`] unless `t` preserves the gyrometric.
pub fn check_gyrometric_preserving<S: Scalar>(
    t: &GyroMap<S>,
    seed: u64,
    tolerance: f64,
) -> Result<f64> {
    let r = preservation_residual(t, PRESERVATION_PAIRS, seed);
    if r <= tolerance {
        Ok(r)
    } else {
        Err(GgvError::Precondition(format!(
            "map does not preserve the gyrometric (residual {r:e} > {tolerance:e})"
        )))
    }
}

/// Outcome of [`verify_midpoint_preservation`].
#[derive(Debug, Clone, Serialize)]
pub struct MidpointReport {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// Worst `f₂(ϱ₂(T(P(a,b)), P(Ta,Tb)))`.
    pub max_residual: f64,
    pub preservation_residual: f64,
    pub pass: bool,
}

/// Checks `T(P(a,b)) = P(Ta,Tb)` on `n_samples` sampled pairs.
pub fn verify_midpoint_preservation<S: Scalar>(
    t: &GyroMap<S>,
    n_samples: usize,
    seed: u64,
    tolerance: f64,
) -> Result<MidpointReport> {
    let preservation = check_gyrometric_preserving(t, seed, tolerance)?;
    let dom = t.domain();
    let cod = t.codomain();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..n_samples {
        let a = dom.sample_coords(&mut rng, LAB_SPREAD);
        let b = dom.sample_coords(&mut rng, LAB_SPREAD);
        let image = t.apply_coords(&dom.midpoint_coords(&a, &b));
        let mid = cod.midpoint_coords(&t.apply_coords(&a), &t.apply_coords(&b));
        let r = codomain_residual(cod, &image, &mid);
        worst = if r.is_nan() { f64::NAN } else { worst.max(r) };
    }
    Ok(MidpointReport {
        samples: n_samples,
        seed,
        tolerance,
        max_residual: worst,
        preservation_residual: preservation,
        pass: worst <= tolerance,
    })
}

impl MidpointReport {
    pub fn to_verification(&self, model: &str) -> VerificationReport {
        VerificationReport::new(
            "midpoint_preservation",
            model,
            self.seed,
            self.samples,
            self.max_residual,
            self.tolerance,
        )
    }
}

/// Residuals of the decomposition `T = T(e) ⊕ T₀` with `T₀ = ⊖T(e) ⊕ T`.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport<S: Scalar> {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// `T(e)`.
    pub translation_part: Vec<S>,
    /// `T₀(e) = e`.
    pub unit_residual: f64,
    /// `T₀(a ⊕ b) = T₀a ⊕ T₀b`.
    pub additivity_residual: f64,
    /// `T₀(r ⊗ a) = r ⊗ T₀a` for general reals `r`.
    pub homogeneity_residual: f64,
    /// `T₀(q ⊗ a) = q ⊗ T₀a` for dyadic `q`.
    pub dyadic_residual: f64,
    /// `T₀(½ ⊗ a) = ½ ⊗ T₀a`.
    pub half_scalar_residual: f64,
    /// `T₀(a ⊞ b) = T₀a ⊞ T₀b`.
    pub coaddition_residual: f64,
    /// `ϱ₂(T₀a, T₀b) = ϱ₁(a,b)`.
    pub isometry_residual: f64,
    /// `T(a) = T(e) ⊕ T₀(a)`.
    pub reconstruction_residual: f64,
    /// `T₀⁻¹(T₀(a)) = a`.
    pub bijection_residual: f64,
    pub pass: bool,
}

impl<S: Scalar> DecompositionReport<S> {
    /// `(name, residual)` for every checked identity.
    pub fn residuals(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("unit", self.unit_residual),
            ("additivity", self.additivity_residual),
            ("homogeneity", self.homogeneity_residual),
            ("dyadic_homogeneity", self.dyadic_residual),
            ("half_scalar", self.half_scalar_residual),
            ("coaddition", self.coaddition_residual),
            ("isometry", self.isometry_residual),
            ("reconstruction", self.reconstruction_residual),
            ("bijection", self.bijection_residual),
        ]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals()
            .iter()
            .map(|(_, r)| *r)
            .fold(0.0, |acc, r| if r.is_nan() { f64::NAN } else { acc.max(r) })
    }

    pub fn to_verification(&self, model: &str) -> VerificationReport {
        VerificationReport::new(
            "mazur_ulam_decomposition",
            model,
            self.seed,
            self.samples,
            self.max_residual(),
            self.tolerance,
        )
    }
}

fn dyadics() -> Vec<f64> {
    let den = f64::from(1u32 << DYADIC_LEVEL);
    let top = (DYADIC_BOUND * den) as i64;
    (-top..=top).map(|m| m as f64 / den).collect()
}

struct Worst(f64);

impl Worst {
    fn push(&mut self, r: f64) {
        self.0 = if r.is_nan() || self.0.is_nan() {
            f64::NAN
        } else {
            self.0.max(r)
        };
    }
}

/// Decomposes `T` as a left translation by `T(e)` after the map `T₀` fixing
/// the unit, and checks that `T₀` is additive, homogeneous and isometric.
pub fn decompose_mazur_ulam<S: Scalar>(
    t: &GyroMap<S>,
    n_samples: usize,
    seed: u64,
    tolerance: f64,
) -> Result<DecompositionReport<S>> {
    check_gyrometric_preserving(t, seed, tolerance)?;
    let dom = t.domain();
    let cod = t.codomain();
    let te = t.apply_coords(&dom.identity_coords());
    let t0 = t.then(&left_translation(cod, &cod.wrap(cod.neg_coords(&te)))?)?;
    let t0_inv = t0.inverse();
    let dist = |a: &[S], b: &[S]| codomain_residual(cod, a, b);

    let e2 = cod.identity_coords();
    let unit_residual = dist(&t0.apply_coords(&dom.identity_coords()), &e2);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dyadic = dyadics();
    let half = S::lit(0.5);
    let mut additivity = Worst(0.0);
    let mut homogeneity = Worst(0.0);
    let mut dyadic_w = Worst(0.0);
    let mut half_w = Worst(0.0);
    let mut coadd = Worst(0.0);
    let mut iso = Worst(0.0);
    let mut recon = Worst(0.0);
    let mut bij = Worst(0.0);

    for k in 0..n_samples {
        let a = dom.sample_coords(&mut rng, LAB_SPREAD);
        let b = dom.sample_coords(&mut rng, LAB_SPREAD);
        let ta = t0.apply_coords(&a);
        let tb = t0.apply_coords(&b);

        additivity.push(dist(
            &t0.apply_coords(&dom.add_coords(&a, &b)),
            &cod.add_coords(&ta, &tb),
        ));
        coadd.push(dist(
            &t0.apply_coords(&dom.coplus_coords(&a, &b)),
            &cod.coplus_coords(&ta, &tb),
        ));
        half_w.push(dist(
            &t0.apply_coords(&dom.scale_coords(half, &a)),
            &cod.scale_coords(half, &ta),
        ));
        let before = dom.gyrometric_coords(&a, &b).as_f64();
        let after = cod.gyrometric_coords(&ta, &tb).as_f64();
        iso.push(scaled(after - before, before));
        recon.push(dist(&t.apply_coords(&a), &cod.add_coords(&te, &ta)));
        bij.push(
            dom.metric_distance_coords(&t0_inv.apply_coords(&ta), &a)
                .as_f64(),
        );

        for _ in 0..GENERAL_SCALARS {
            let r = S::lit(rand::Rng::gen_range(&mut rng, -DYADIC_BOUND..=DYADIC_BOUND));
            homogeneity.push(dist(
                &t0.apply_coords(&dom.scale_coords(r, &a)),
                &cod.scale_coords(r, &ta),
            ));
        }
        if k < DYADIC_POINTS {
            for &q in &dyadic {
                let q = S::lit(q);
                dyadic_w.push(dist(
                    &t0.apply_coords(&dom.scale_coords(q, &a)),
                    &cod.scale_coords(q, &ta),
                ));
            }
        }
    }

    let mut report = DecompositionReport {
        samples: n_samples,
        seed,
        tolerance,
        translation_part: te,
        unit_residual,
        additivity_residual: additivity.0,
        homogeneity_residual: homogeneity.0,
        dyadic_residual: dyadic_w.0,
        half_scalar_residual: half_w.0,
        coaddition_residual: coadd.0,
        isometry_residual: iso.0,
        reconstruction_residual: recon.0,
        bijection_residual: bij.0,
        pass: false,
    };
    report.pass = report.max_residual() <= tolerance;
    Ok(report)
}

/// Convenience wrapper returning `T(e)` as a point of the codomain.
pub fn translation_part<S: Scalar>(t: &GyroMap<S>) -> GyroPoint<S> {
    let e = t.domain().identity_coords();
    t.codomain().wrap(t.apply_coords(&e))
}
