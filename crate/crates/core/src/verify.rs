//! Seeded property suites for a [`GgvModel`].
//!
//! Every property draws its own sample stream from a ChaCha generator seeded
//! by the run seed and the property name, so a single property can be
//! reproduced in isolation. Point equalities are measured with the linearized
//! gyrometric `f∘ϱ`, norm-value equalities through the linearization `f`, and
//! inequalities as the linearized amount of violation. Boolean laws (order
//! equivalences, injectivity) report a residual of `1` per violation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::gyro::ModelKind;
use crate::models::GgvModel;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tolerance::{scaled, DEFAULT_TOLERANCE};
use crate::vector;

/// Smallest linearized norm for a sample to count as "not the unit".
pub const NON_IDENTITY_MARGIN: f64 = 1e-3;
/// Smallest `|r|` for a scalar to count as nonzero.
pub const NONZERO_SCALAR_MARGIN: f64 = 1e-3;
/// Coordinate separation used for the identity-of-indiscernibles check.
pub const SEPARATION: f64 = 1e-3;
/// Minimum metric distance required between points separated by [`SEPARATION`].
pub const SEPARATION_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl SuiteConfig {
    pub fn new(samples: usize, seed: u64, tolerance: f64) -> Self {
        Self {
            samples,
            seed,
            tolerance,
        }
    }

    pub fn with_samples(self, samples: usize) -> Self {
        Self { samples, ..self }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self::new(1000, 0, DEFAULT_TOLERANCE)
    }
}

/// Deterministic per-property seed (FNV-1a over the name, mixed with the run seed).
pub fn property_seed(seed: u64, property: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in property.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

struct Ctx<'a, S: Scalar> {
    m: &'a GgvModel<S>,
    cfg: SuiteConfig,
}

impl<'a, S: Scalar> Ctx<'a, S> {
    fn run(&self, name: &str, mut f: impl FnMut(&mut ChaCha8Rng) -> f64) -> VerificationReport {
        let mut rng = ChaCha8Rng::seed_from_u64(property_seed(self.cfg.seed, name));
        let mut worst = 0.0f64;
        for _ in 0..self.cfg.samples {
            let r = f(&mut rng);
            if r.is_nan() {
                worst = f64::NAN;
                break;
            }
            worst = worst.max(r);
        }
        VerificationReport::new(
            name,
            self.m.to_string(),
            self.cfg.seed,
            self.cfg.samples,
            worst,
            self.cfg.tolerance,
        )
    }

    fn point(&self, rng: &mut ChaCha8Rng) -> Vec<S> {
        self.m.sample_coords(rng, 1.0)
    }

    fn non_identity(&self, rng: &mut ChaCha8Rng) -> Vec<S> {
        loop {
            let p = self.point(rng);
            if self.lin_norm(&p) >= NON_IDENTITY_MARGIN {
                return p;
            }
        }
    }

    fn scalar(&self, rng: &mut ChaCha8Rng, bound: f64) -> S {
        S::lit(rng.gen_range(-bound..=bound))
    }

    fn nonzero_scalar(&self, rng: &mut ChaCha8Rng, bound: f64) -> S {
        loop {
            let r: f64 = rng.gen_range(-bound..=bound);
            if r.abs() >= NONZERO_SCALAR_MARGIN {
                return S::lit(r);
            }
        }
    }

    fn lin(&self, value: S) -> f64 {
        self.m.norm_space().lin(value).as_f64()
    }

    /// `f(‖φ(a)‖)`.
    fn lin_norm(&self, a: &[S]) -> f64 {
        self.lin(self.m.norm_value_of(a))
    }

    /// Scaled `f∘ϱ` distance between two points.
    fn point_residual(&self, x: &[S], y: &[S]) -> f64 {
        let d = self.m.metric_distance_coords(x, y).as_f64();
        scaled(d, self.lin_norm(x).max(self.lin_norm(y)))
    }

    fn nv_residual(&self, a: S, b: S) -> f64 {
        let (fa, fb) = (self.lin(a), self.lin(b));
        scaled(fa - fb, fa.abs().max(fb.abs()))
    }

    /// Linearized amount by which `a ≤ b` fails.
    fn le_violation(&self, a: S, b: S) -> f64 {
        let (fa, fb) = (self.lin(a), self.lin(b));
        scaled((fa - fb).max(0.0), fa.abs().max(fb.abs()))
    }

    fn nv_add(&self, a: S, b: S) -> S {
        let ns = self.m.norm_space();
        ns.lin_inv(ns.lin(a) + ns.lin(b))
    }

    fn nv_smul(&self, r: S, a: S) -> S {
        let ns = self.m.norm_space();
        ns.lin_inv(r * ns.lin(a))
    }

    /// A random element of `‖φ(G)‖`: `±‖φ(a)‖`.
    fn norm_value(&self, rng: &mut ChaCha8Rng) -> S {
        let v = self.m.norm_value_of(&self.point(rng));
        if rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }

    fn nonneg_norm_value(&self, rng: &mut ChaCha8Rng) -> S {
        self.m.norm_value_of(&self.point(rng))
    }
}

fn flag(violated: bool) -> f64 {
    if violated {
        1.0
    } else {
        0.0
    }
}

/// Gyrogroup laws: identities, inverses, cancellation, gyrocommutativity,
/// gyroautomorphism, left loop, gyration inversion and the closed-form
/// versus brute-force gyration oracle.
pub fn gyrogroup_laws<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let c = Ctx { m, cfg };
    let e = m.identity_coords();
    vec![
        c.run("identity", |rng| {
            let a = c.point(rng);
            let left = c.point_residual(&m.add_coords(&e, &a), &a);
            let right = c.point_residual(&m.add_coords(&a, &e), &a);
            left.max(right)
        }),
        c.run("left_inverse", |rng| {
            let a = c.point(rng);
            c.point_residual(&m.add_coords(&m.neg_coords(&a), &a), &e)
        }),
        c.run("left_cancellation", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let lhs = m.add_coords(&m.neg_coords(&a), &m.add_coords(&a, &b));
            c.point_residual(&lhs, &b)
        }),
        c.run("left_gyroassociativity", |rng| {
            let (a, b, x) = (c.point(rng), c.point(rng), c.point(rng));
            let lhs = m.add_coords(&a, &m.add_coords(&b, &x));
            let rhs = m.add_coords(&m.add_coords(&a, &b), &m.gyr_coords(&a, &b, &x));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("gyrocommutativity", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let lhs = m.add_coords(&a, &b);
            let rhs = m.gyr_coords(&a, &b, &m.add_coords(&b, &a));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("gyroautomorphism", |rng| {
            let (u, v, a, b) = (c.point(rng), c.point(rng), c.point(rng), c.point(rng));
            let lhs = m.gyr_coords(&u, &v, &m.add_coords(&a, &b));
            let rhs = m.add_coords(&m.gyr_coords(&u, &v, &a), &m.gyr_coords(&u, &v, &b));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("left_loop", |rng| {
            let (u, v, a) = (c.point(rng), c.point(rng), c.point(rng));
            let lhs = m.gyr_coords(&m.add_coords(&u, &v), &v, &a);
            c.point_residual(&lhs, &m.gyr_coords(&u, &v, &a))
        }),
        c.run("gyration_inversion", |rng| {
            let (u, v, a) = (c.point(rng), c.point(rng), c.point(rng));
            let back = m.gyr_coords(&v, &u, &m.gyr_coords(&u, &v, &a));
            c.point_residual(&back, &a)
        }),
        c.run("gyration_trivial_at_identity", |rng| {
            let (v, a) = (c.point(rng), c.point(rng));
            c.point_residual(&m.gyr_coords(&e, &v, &a), &a)
                .max(c.point_residual(&m.gyr_coords(&v, &e, &a), &a))
        }),
        c.run("gyration_oracle", |rng| {
            let (u, v, a) = (c.point(rng), c.point(rng), c.point(rng));
            c.point_residual(
                &m.gyr_coords(&u, &v, &a),
                &m.gyr_brute_force_coords(&u, &v, &a),
            )
        }),
        c.run("gyroautomorphic_inverse", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let lhs = m.neg_coords(&m.add_coords(&a, &b));
            let rhs = m.add_coords(&m.neg_coords(&a), &m.neg_coords(&b));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("coaddition_commutative", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            c.point_residual(&m.coplus_coords(&a, &b), &m.coplus_coords(&b, &a))
        }),
    ]
}

/// The GGV axioms GGV0–GGV8, the norm-value space laws (GGVV) and the
/// injectivity of `φ`.
pub fn ggv_axioms<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let c = Ctx { m, cfg };
    vec![
        c.run("GGV0", |rng| {
            let (u, v, a) = (c.point(rng), c.point(rng), c.point(rng));
            let g = m.gyr_coords(&u, &v, &a);
            c.nv_residual(m.norm_value_of(&g), m.norm_value_of(&a))
        }),
        c.run("GGV1", |rng| {
            let a = c.point(rng);
            c.point_residual(&m.scale_coords(S::one(), &a), &a)
        }),
        c.run("GGV2", |rng| {
            let a = c.point(rng);
            let (r1, r2) = (c.scalar(rng, 2.0), c.scalar(rng, 2.0));
            let lhs = m.scale_coords(r1 + r2, &a);
            let rhs = m.add_coords(&m.scale_coords(r1, &a), &m.scale_coords(r2, &a));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("GGV3", |rng| {
            let a = c.point(rng);
            let (r1, r2) = (c.scalar(rng, 2.0), c.scalar(rng, 2.0));
            let lhs = m.scale_coords(r1 * r2, &a);
            let rhs = m.scale_coords(r1, &m.scale_coords(r2, &a));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("GGV4", |rng| {
            let a = c.non_identity(rng);
            let r = c.nonzero_scalar(rng, 4.0);
            let lhs_vec = m.embed_coords(&m.scale_coords(r.abs(), &a));
            let lhs_norm = m.norm_value_of(&m.scale_coords(r, &a));
            let rhs_vec = m.embed_coords(&a);
            let rhs_norm = m.norm_value_of(&a);
            let lhs = vector::scale(S::one() / lhs_norm, &lhs_vec);
            let rhs = vector::scale(S::one() / rhs_norm, &rhs_vec);
            m.ambient_norm(&vector::sub(&lhs, &rhs)).as_f64()
        }),
        c.run("GGV5", |rng| {
            let (u, v, a) = (c.point(rng), c.point(rng), c.point(rng));
            let r = c.scalar(rng, 4.0);
            let lhs = m.gyr_coords(&u, &v, &m.scale_coords(r, &a));
            let rhs = m.scale_coords(r, &m.gyr_coords(&u, &v, &a));
            c.point_residual(&lhs, &rhs)
        }),
        c.run("GGV6", |rng| {
            let (v, a) = (c.point(rng), c.point(rng));
            let (r1, r2) = (c.scalar(rng, 2.0), c.scalar(rng, 2.0));
            let g = m.gyr_coords(&m.scale_coords(r1, &v), &m.scale_coords(r2, &v), &a);
            c.point_residual(&g, &a)
        }),
        c.run("GGVV", |rng| {
            let ns = m.norm_space();
            let (a, b, x) = (c.norm_value(rng), c.norm_value(rng), c.norm_value(rng));
            let r = c.scalar(rng, 4.0);
            let closed = [a, -a, b, x]
                .iter()
                .all(|&v| ns.contains(v) && ns.contains(-v));
            let zero = ns.lin_inv(S::zero());
            let comm = c.nv_residual(c.nv_add(a, b), c.nv_add(b, a));
            let assoc = c.nv_residual(c.nv_add(c.nv_add(a, b), x), c.nv_add(a, c.nv_add(b, x)));
            let unit = c.nv_residual(c.nv_add(zero, a), a);
            let distrib = c.nv_residual(
                c.nv_smul(r, c.nv_add(a, b)),
                c.nv_add(c.nv_smul(r, a), c.nv_smul(r, b)),
            );
            let additive = scaled(
                c.lin(c.nv_add(a, b)) - (c.lin(a) + c.lin(b)),
                c.lin(a).abs() + c.lin(b).abs(),
            );
            flag(!closed)
                .max(comm)
                .max(assoc)
                .max(unit)
                .max(distrib)
                .max(additive)
        }),
        c.run("GGV7", |rng| {
            let a = c.point(rng);
            let r = c.scalar(rng, 4.0);
            let lhs = m.norm_value_of(&m.scale_coords(r, &a));
            let rhs = c.nv_smul(r.abs(), m.norm_value_of(&a));
            c.nv_residual(lhs, rhs)
        }),
        c.run("GGV8", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let lhs = m.norm_value_of(&m.add_coords(&a, &b));
            let rhs = c.nv_add(m.norm_value_of(&a), m.norm_value_of(&b));
            c.le_violation(lhs, rhs)
        }),
        c.run("phi_injective", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let same_point = a == b;
            let same_image = m.embed_coords(&a) == m.embed_coords(&b);
            flag(!same_point && same_image)
        }),
    ]
}

/// Consequences of GGV1–GGV3 and GGV7 for the unit, zero scalars and
/// inverses, and the injectivity of `r ↦ r ⊗′ ‖φ(a)‖`.
pub fn scalar_laws<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let c = Ctx { m, cfg };
    let e = m.identity_coords();
    vec![
        c.run("identity_norm_is_zero", |_| {
            let zero = m.norm_space().lin_inv(S::zero());
            let ne = m.norm_value_of(&e);
            flag(ne != zero).max(c.lin(ne).abs())
        }),
        c.run("scalar_fixes_identity", |rng| {
            let r = c.scalar(rng, 4.0);
            c.point_residual(&m.scale_coords(r, &e), &e)
        }),
        c.run("zero_scalar_gives_identity", |rng| {
            let a = c.point(rng);
            c.point_residual(&m.scale_coords(S::zero(), &a), &e)
        }),
        c.run("nontrivial_scalar_avoids_identity", |rng| {
            let a = c.non_identity(rng);
            let r = c.nonzero_scalar(rng, 4.0);
            let ra = m.scale_coords(r, &a);
            flag(ra == e || m.metric_distance_coords(&ra, &e) <= S::zero())
        }),
        c.run("inverse_is_negated_scalar", |rng| {
            let a = c.point(rng);
            let alpha = c.scalar(rng, 4.0);
            let lhs = m.neg_coords(&m.scale_coords(alpha, &a));
            let rhs = m.scale_coords(-alpha, &a);
            let minus_one = c.point_residual(&m.neg_coords(&a), &m.scale_coords(-S::one(), &a));
            c.point_residual(&lhs, &rhs).max(minus_one)
        }),
        c.run("nonidentity_norm_nonzero", |rng| {
            let a = c.non_identity(rng);
            let r = c.nonzero_scalar(rng, 4.0);
            let na = m.norm_value_of(&a);
            let nra = m.norm_value_of(&m.scale_coords(r, &a));
            flag(na == S::zero() || nra == S::zero())
        }),
        c.run("norm_zero_only_at_identity", |rng| {
            let a = c.non_identity(rng);
            flag(m.norm_value_of(&a) == m.norm_space().lin_inv(S::zero()))
        }),
        c.run("scalar_norm_injective", |rng| {
            let a = c.non_identity(rng);
            let r = c.scalar(rng, 4.0);
            let s = loop {
                let s = c.scalar(rng, 4.0);
                if (s - r).abs().as_f64() >= NONZERO_SCALAR_MARGIN {
                    break s;
                }
            };
            let na = m.norm_value_of(&a);
            flag(c.nv_smul(r, na) == c.nv_smul(s, na))
        }),
    ]
}

/// Order machinery of the norm-value space: the scalar order equivalence,
/// additivity/homogeneity and order compatibility of `f`, and monotone
/// addition.
pub fn order_laws<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let c = Ctx { m, cfg };
    let zero = S::zero();
    vec![
        c.run("scalar_order_equivalence", |rng| {
            let a = c.non_identity(rng);
            let alpha: f64 = rng.gen_range(0.0..=4.0);
            let beta: f64 = if rng.gen_bool(0.1) {
                alpha
            } else {
                rng.gen_range(0.0..=4.0)
            };
            let na = m.norm_value_of(&a);
            let (x, y) = (c.nv_smul(S::lit(alpha), na), c.nv_smul(S::lit(beta), na));
            let scalars = alpha < beta;
            let values = zero <= x && x < y;
            flag(scalars != values)
        }),
        c.run("linearization_linear", |rng| {
            let (a, b) = (c.norm_value(rng), c.norm_value(rng));
            let r = c.scalar(rng, 4.0);
            let (fa, fb) = (c.lin(a), c.lin(b));
            let add = scaled(c.lin(c.nv_add(a, b)) - (fa + fb), fa.abs() + fb.abs());
            let hom = scaled(
                c.lin(c.nv_smul(r, a)) - r.as_f64() * fa,
                (r.as_f64() * fa).abs(),
            );
            let zero_ok = c.lin(m.norm_space().lin_inv(S::zero())).abs();
            let round_trip = c.nv_residual(m.norm_space().lin_inv(m.norm_space().lin(a)), a);
            add.max(hom).max(zero_ok).max(round_trip)
        }),
        c.run("linearization_order", |rng| {
            let a = c.nonneg_norm_value(rng);
            let b = if rng.gen_bool(0.1) {
                a
            } else {
                c.nonneg_norm_value(rng)
            };
            let values = zero <= a && a < b;
            let (fa, fb) = (m.norm_space().lin(a), m.norm_space().lin(b));
            let linear = zero <= fa && fa < fb;
            let le = m
                .norm_space()
                .le_nonneg(crate::NormValue(a), crate::NormValue(b))
                .map(|le| le == (fa <= fb))
                .unwrap_or(false);
            flag(values != linear || !le)
        }),
        c.run("monotone_addition", |rng| {
            let ordered = |rng: &mut ChaCha8Rng| loop {
                let (x, y) = (c.nonneg_norm_value(rng), c.nonneg_norm_value(rng));
                if x < y {
                    return (x, y);
                }
                if y < x {
                    return (y, x);
                }
            };
            let (a, b) = ordered(rng);
            let (a2, b2) = ordered(rng);
            let (lo, hi) = (c.nv_add(a, a2), c.nv_add(b, b2));
            flag(!(zero <= lo && lo < hi))
        }),
    ]
}

/// Gyrometric invariances, the gyrotriangle inequality, gyromidpoint laws
/// and the metric axioms of `f∘ϱ`.
pub fn gyrometric_laws<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let c = Ctx { m, cfg };
    let half = S::lit(0.5);
    let dist = |x: &[S], y: &[S]| m.metric_distance_coords(x, y).as_f64();
    vec![
        c.run("gyrometric_invariance", |rng| {
            let (x, a, b) = (c.point(rng), c.point(rng), c.point(rng));
            let base = m.gyrometric_coords(&a, &b);
            let translated = m.gyrometric_coords(&m.add_coords(&x, &a), &m.add_coords(&x, &b));
            let negated = m.gyrometric_coords(&m.neg_coords(&a), &m.neg_coords(&b));
            let swapped = m.gyrometric_coords(&b, &a);
            c.nv_residual(translated, base)
                .max(c.nv_residual(negated, base))
                .max(c.nv_residual(swapped, base))
        }),
        c.run("gyrotriangle", |rng| {
            let (a, b, x) = (c.point(rng), c.point(rng), c.point(rng));
            let lhs = m.gyrometric_coords(&a, &b);
            let rhs = c.nv_add(m.gyrometric_coords(&a, &x), m.gyrometric_coords(&x, &b));
            c.le_violation(lhs, rhs)
        }),
        c.run("midpoint_equidistant", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let p = m.midpoint_coords(&a, &b);
            let to_a = m.gyrometric_coords(&a, &p);
            let to_b = m.gyrometric_coords(&b, &p);
            let half_rho = c.nv_smul(half, m.gyrometric_coords(&a, &b));
            c.nv_residual(to_a, half_rho)
                .max(c.nv_residual(to_b, half_rho))
        }),
        c.run("midpoint_formulas_agree", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            c.point_residual(
                &m.midpoint_coords(&a, &b),
                &m.midpoint_translated_coords(&a, &b),
            )
        }),
        c.run("midpoint_symmetric", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let same = c.point_residual(&m.midpoint_coords(&a, &a), &a);
            c.point_residual(&m.midpoint_coords(&a, &b), &m.midpoint_coords(&b, &a))
                .max(same)
        }),
        c.run("metric_identity", |rng| {
            let a = c.point(rng);
            dist(&a, &a).abs()
        }),
        c.run("metric_symmetry", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let (ab, ba) = (dist(&a, &b), dist(&b, &a));
            flag(ab < 0.0).max(scaled(ab - ba, ab.abs()))
        }),
        c.run("metric_triangle", |rng| {
            let (a, b, x) = (c.point(rng), c.point(rng), c.point(rng));
            let (ab, ax, xb) = (dist(&a, &b), dist(&a, &x), dist(&x, &b));
            scaled((ab - (ax + xb)).max(0.0), ab)
        }),
        c.run("metric_separation", |rng| {
            let a = c.point(rng);
            let b = separated_neighbour(m, &a, rng);
            flag(dist(&a, &b) <= SEPARATION_FLOOR)
        }),
    ]
}

/// A carrier point at coordinate distance in `[SEPARATION, 10·SEPARATION]` from `a`.
fn separated_neighbour<S: Scalar>(m: &GgvModel<S>, a: &[S], rng: &mut ChaCha8Rng) -> Vec<S> {
    loop {
        let step: f64 = rng.gen_range(SEPARATION..=10.0 * SEPARATION);
        let b: Vec<S> = if m.kind() == ModelKind::Pathological {
            // move away from the gap (-1, 1)
            let x = a[0].as_f64();
            vec![S::lit(x + step * x.signum())]
        } else {
            let dir = crate::models::unit_direction(rng, a.len());
            a.iter()
                .zip(dir)
                .map(|(&x, d)| x + S::lit(step * d))
                .collect()
        };
        if m.in_carrier(&b) {
            return b;
        }
    }
}

/// Checks particular to one model: the pathological ground truth and the
/// one-dimensional relativistic slices of the ball models.
pub fn model_specific<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let c = Ctx { m, cfg };
    match m.kind() {
        ModelKind::Pathological => vec![
            c.run("unit_and_zero_norm_value", |_| {
                let e = m.identity_coords();
                let ne = m.norm_value_of(&e);
                flag(e != vec![S::one()] || ne != S::one() || m.nv_zero().0 != S::one())
            }),
            c.run("scalar_norm_power_law", |rng| {
                let a = c.point(rng);
                let r = c.scalar(rng, 4.0);
                let lhs = m.norm_value_of(&m.scale_coords(r, &a)).as_f64();
                let rhs = a[0].as_f64().abs().powf(r.as_f64().abs());
                (lhs - rhs).abs() / rhs
            }),
            c.run("sum_sandwich", |rng| {
                let (a, b) = (c.point(rng), c.point(rng));
                let sum = m.add_coords(&a, &b)[0].as_f64();
                let bound = (a[0] * b[0]).abs().as_f64();
                let tol = bound * 64.0 * S::epsilon().as_f64();
                flag(sum < -bound - tol || sum > bound + tol)
            }),
        ],
        ModelKind::Einstein | ModelKind::Mobius => {
            let s = m.radius();
            vec![
                c.run("collinear_addition", |rng| {
                    let dir = crate::models::unit_direction(rng, m.dim());
                    let u: f64 = rng.gen_range(-0.95..=0.95);
                    let v: f64 = rng.gen_range(-0.95..=0.95);
                    let along =
                        |t: f64| -> Vec<S> { dir.iter().map(|&d| S::lit(t * d) * s).collect() };
                    let sum = m.add_coords(&along(u), &along(v));
                    let want = along((u + v) / (1.0 + u * v));
                    c.point_residual(&sum, &want)
                }),
                c.run("scalar_monotone_along_ray", |rng| {
                    let a = c.non_identity(rng);
                    let r1: f64 = rng.gen_range(0.0..=4.0);
                    let r2: f64 = rng.gen_range(0.0..=4.0);
                    let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
                    let n_lo = vector::norm(&m.scale_coords(S::lit(lo), &a));
                    let n_hi = vector::norm(&m.scale_coords(S::lit(hi), &a));
                    flag(n_lo > n_hi)
                }),
            ]
        }
        ModelKind::Normed => vec![c.run("vector_space_midpoint", |rng| {
            let (a, b) = (c.point(rng), c.point(rng));
            let want = vector::lin_comb(half_of::<S>(), &a, half_of::<S>(), &b);
            c.point_residual(&m.midpoint_coords(&a, &b), &want)
        })],
    }
}

fn half_of<S: Scalar>() -> S {
    S::lit(0.5)
}

/// Everything `verify-axioms` runs.
pub fn full_suite<S: Scalar>(m: &GgvModel<S>, cfg: SuiteConfig) -> Vec<VerificationReport> {
    let mut out = gyrogroup_laws(m, cfg);
    out.extend(ggv_axioms(m, cfg));
    out.extend(scalar_laws(m, cfg));
    out.extend(order_laws(m, cfg));
    out.extend(gyrometric_laws(m, cfg));
    out.extend(model_specific(m, cfg));
    out
}
