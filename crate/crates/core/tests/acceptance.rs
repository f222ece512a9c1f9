//! Desk-scale acceptance run. Prints one PASS/FAIL line per criterion (with
//! per-model detail lines below it) and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ggv::isometry::{
    defect_experiment, random_cross_isometry, random_isometry, verify_midpoint_preservation,
    DecompositionReport, LAB_SPREAD,
};
use ggv::verify::{
    ggv_axioms, gyrogroup_laws, gyrometric_laws, order_laws, scalar_laws, SuiteConfig,
};
use ggv::{decompose_mazur_ulam, make_model, GgvModel, ModelConfig, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;
const MU_TOL: f64 = 1e-8;
const SEED: u64 = 2024;

fn models() -> Vec<GgvModel<f64>> {
    [
        ModelConfig::normed(3),
        ModelConfig::einstein(3, 1.0),
        ModelConfig::mobius(3, 1.0),
        ModelConfig::pathological(),
    ]
    .into_iter()
    .map(|c| make_model(c).expect("valid model"))
    .collect()
}

struct Criterion {
    id: u8,
    title: &'static str,
    pass: bool,
    details: Vec<String>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Self {
            id,
            title,
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: String) {
        self.pass &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        self.details.push(format!("{mark} {detail}"));
    }

    fn reports(&mut self, label: &str, reports: &[VerificationReport]) {
        let failing: Vec<&str> = reports
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.property.as_str())
            .collect();
        let max_res = reports.iter().map(|r| r.max_residual).fold(0.0, worst);
        let samples = reports.first().map_or(0, |r| r.samples);
        let mut detail = format!(
            "{label}: {} properties, {samples} samples, worst residual {max_res:.2e}",
            reports.len()
        );
        if !failing.is_empty() {
            detail.push_str(&format!(", failing: {}", failing.join(", ")));
        }
        self.check(failing.is_empty(), detail);
    }

    fn print(&self) {
        let status = if self.pass { "PASS" } else { "FAIL" };
        println!("{status} [{}] {}", self.id, self.title);
        for d in &self.details {
            println!("       {d}");
        }
    }
}

fn pick(reports: Vec<VerificationReport>, names: &[&str]) -> Vec<VerificationReport> {
    reports
        .into_iter()
        .filter(|r| names.contains(&r.property.as_str()))
        .collect()
}

fn axiom_suite(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(
        1,
        "axiom suite GGV0-GGV8, GGVV (1000 samples, 1e-9, < 10 s per model)",
    );
    let cfg = SuiteConfig::new(1000, SEED, TOL);
    for m in ms {
        let start = Instant::now();
        let mut reports = gyrogroup_laws(m, cfg);
        reports.extend(ggv_axioms(m, cfg));
        let took = start.elapsed();
        c.reports(&m.to_string(), &reports);
        c.check(
            took < Duration::from_secs(10),
            format!("{m}: runtime {:.2} s", took.as_secs_f64()),
        );
    }
    c
}

fn scalar_suite(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(2, "scalar action and norm laws (1000 samples, 1e-9)");
    let cfg = SuiteConfig::new(1000, SEED, TOL);
    for m in ms {
        c.reports(&m.to_string(), &scalar_laws(m, cfg));
    }
    c
}

fn pathological_ground_truth() -> Criterion {
    let mut c = Criterion::new(3, "pathological ground truth (relative 1e-12)");
    let m = make_model::<f64>(ModelConfig::pathological()).expect("valid model");
    let e = m.identity();
    let ne = m.gnorm(&e).expect("unit is in the carrier").0;
    c.check(
        e.coords() == [1.0] && ne == 1.0 && m.nv_zero().0 == 1.0,
        format!(
            "e = {}, gnorm(e) = {ne}, zero of norm values = {}",
            e,
            m.nv_zero().0
        ),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut max_err = 0.0f64;
    for _ in 0..10_000 {
        let r: f64 = rng.gen_range(-4.0..=4.0);
        let mag: f64 = rng.gen_range(1.0..=20.0);
        let a = if rng.gen_bool(0.5) {
            mag
        } else {
            -mag.max(1.0 + 1e-12)
        };
        let got = m.norm_value_of(&m.scale_coords(r, &[a]));
        let want = a.abs().powf(r.abs());
        max_err = worst(max_err, (got - want).abs() / want);
    }
    c.check(
        max_err <= 1e-12,
        format!("gnorm(r ⊗ a) = |a|^|r| on 10000 draws: worst relative error {max_err:.2e}"),
    );

    let sum = m.add_coords(&[2.0], &[3.0])[0];
    let prod = m.scale_coords(2.0, &[-2.0])[0];
    c.check((sum - 6.0).abs() <= 1e-12, format!("2 ⊕ 3 = {sum}"));
    c.check((prod + 4.0).abs() <= 1e-12, format!("2 ⊗ (-2) = {prod}"));
    c
}

fn order_machinery(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(
        4,
        "order machinery and linearization (10^4 samples, zero violations)",
    );
    let cfg = SuiteConfig::new(10_000, SEED, TOL);
    for m in ms {
        c.reports(&m.to_string(), &order_laws(m, cfg));
    }
    c
}

fn triangle_and_midpoints(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(5, "gyrotriangle and gyromidpoints (10^4 samples, 1e-9)");
    let cfg = SuiteConfig::new(10_000, SEED, TOL);
    let names = [
        "gyrotriangle",
        "midpoint_equidistant",
        "midpoint_formulas_agree",
        "midpoint_symmetric",
        "gyrometric_invariance",
    ];
    for m in ms {
        c.reports(&m.to_string(), &pick(gyrometric_laws(m, cfg), &names));
    }
    c
}

fn metric_check(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(6, "f∘ϱ is a metric (10^4 samples)");
    let cfg = SuiteConfig::new(10_000, SEED, TOL);
    let names = [
        "metric_identity",
        "metric_symmetry",
        "metric_triangle",
        "metric_separation",
    ];
    for m in ms {
        c.reports(&m.to_string(), &pick(gyrometric_laws(m, cfg), &names));
    }
    c
}

/// `max` that keeps NaN instead of discarding it.
fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

#[derive(Default)]
struct MuWorst {
    midpoint: f64,
    additivity: f64,
    homogeneity: f64,
    isometry: f64,
    dyadic: f64,
    other: f64,
    defect: f64,
    excess: f64,
    errors: Vec<String>,
}

impl MuWorst {
    fn absorb(&mut self, dec: &DecompositionReport<f64>) {
        self.additivity = worst(self.additivity, dec.additivity_residual);
        self.homogeneity = worst(self.homogeneity, dec.homogeneity_residual);
        self.isometry = worst(self.isometry, dec.isometry_residual);
        self.dyadic = worst(self.dyadic, dec.dyadic_residual);
        for (name, r) in dec.residuals() {
            if ![
                "additivity",
                "homogeneity",
                "isometry",
                "dyadic_homogeneity",
            ]
            .contains(&name)
            {
                self.other = worst(self.other, r);
            }
        }
    }

    fn pass(&self) -> bool {
        self.errors.is_empty()
            && [
                self.midpoint,
                self.additivity,
                self.homogeneity,
                self.isometry,
                self.dyadic,
                self.other,
                self.defect,
                self.excess,
            ]
            .iter()
            .all(|r| *r <= MU_TOL)
    }
}

fn mazur_ulam_for(
    m: &GgvModel<f64>,
    make: impl Fn(u64, usize) -> ggv::Result<ggv::Map>,
) -> MuWorst {
    let mut w = MuWorst::default();
    for i in 0..50u64 {
        let seed = SEED + i;
        let depth = 1 + (i as usize % 6);
        let t = match make(seed, depth) {
            Ok(t) => t,
            Err(e) => {
                w.errors.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let mut run = || -> ggv::Result<()> {
            let mid = verify_midpoint_preservation(&t, 200, seed, MU_TOL)?;
            w.midpoint = worst(w.midpoint, mid.max_residual);
            let dec = decompose_mazur_ulam(&t, 20, seed, MU_TOL)?;
            w.absorb(&dec);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x1 = m.sample_point(&mut rng, LAB_SPREAD);
            let x2 = m.sample_point(&mut rng, LAB_SPREAD);
            let tr = defect_experiment(&t, &x1, &x2, 10, MU_TOL)?;
            w.defect = worst(w.defect, tr.defect);
            w.excess = worst(w.excess, tr.bound_excess);
            Ok(())
        };
        if let Err(e) = run() {
            w.errors.push(format!("seed {seed}: {e}"));
        }
    }
    w
}

fn mazur_ulam(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(
        7,
        "Mazur-Ulam: 50 maps per model, depth <= 6, residuals 1e-8, defect trace n <= 10 (< 60 s)",
    );
    let start = Instant::now();
    let mut runs: Vec<(String, MuWorst)> = ms
        .iter()
        .map(|m| {
            (
                m.to_string(),
                mazur_ulam_for(m, |s, d| random_isometry(m, s, d)),
            )
        })
        .collect();
    let mobius = ms
        .iter()
        .find(|m| m.kind() == ggv::ModelKind::Mobius)
        .expect("mobius model");
    runs.push((
        format!("{mobius} -> Einstein(s/2)"),
        mazur_ulam_for(mobius, |s, d| random_cross_isometry(mobius, s, d)),
    ));
    for (label, w) in runs {
        let mut detail = format!(
            "{label}: midpoint {:.1e}, additivity {:.1e}, homogeneity {:.1e}, isometry {:.1e}, dyadic {:.1e}, \
             other {:.1e}, defect {:.1e}, bound excess {:.1e}",
            w.midpoint, w.additivity, w.homogeneity, w.isometry, w.dyadic, w.other, w.defect, w.excess
        );
        if let Some(e) = w.errors.first() {
            detail.push_str(&format!(", {} errors (first: {e})", w.errors.len()));
        }
        c.check(w.pass(), detail);
    }
    let took = start.elapsed();
    c.check(
        took < Duration::from_secs(60),
        format!("total runtime {:.2} s", took.as_secs_f64()),
    );
    c
}

fn gyration_oracle(ms: &[GgvModel<f64>]) -> Criterion {
    let mut c = Criterion::new(
        8,
        "closed-form gyr matches the brute-force oracle (10^4 triples, 1e-9)",
    );
    for m in ms.iter().filter(|m| m.kind().is_ball()) {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut max_res = 0.0f64;
        for _ in 0..10_000 {
            let (u, v, a) = (
                m.sample_coords(&mut rng, 1.0),
                m.sample_coords(&mut rng, 1.0),
                m.sample_coords(&mut rng, 1.0),
            );
            let closed = m.gyr_coords(&u, &v, &a);
            let brute = m.gyr_brute_force_coords(&u, &v, &a);
            let scale = m.metric_distance_coords(&a, &m.identity_coords()).max(1.0);
            max_res = worst(max_res, m.metric_distance_coords(&closed, &brute) / scale);
        }
        c.check(max_res <= TOL, format!("{m}: worst residual {max_res:.2e}"));
    }
    c
}

fn main() -> ExitCode {
    let ms = models();
    let start = Instant::now();
    let criteria = [
        axiom_suite(&ms),
        scalar_suite(&ms),
        pathological_ground_truth(),
        order_machinery(&ms),
        triangle_and_midpoints(&ms),
        metric_check(&ms),
        mazur_ulam(&ms),
        gyration_oracle(&ms),
    ];
    println!();
    for c in &criteria {
        c.print();
    }
    let passed = criteria.iter().filter(|c| c.pass).count();
    println!(
        "\nacceptance: {passed}/{} criteria passed in {:.1} s",
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
