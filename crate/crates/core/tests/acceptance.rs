//! Acceptance criteria 1 to 9, one line each. Exits non-zero if any fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use casimir_lcp::analysis::{power_sweep, scenario_extrema, SweepPlan};
use casimir_lcp::cli::{identity_sweep, tensor_deviation, write_curve, write_extrema};
use casimir_lcp::domain::C;
use casimir_lcp::greens::{perfect_mirror_imag, perfect_mirror_real, scattering_green_imag, scattering_green_real};
use casimir_lcp::potentials::{c3_perfect_conductor, u_cp, u_lcp, u_lcp_nonretarded, PolarizabilityModel};
use casimir_lcp::{
    AtomSpecies, ExtremumKind, FieldModel, LaserSpec, PlasmonSign, QuadratureConfig, ScenarioConfig, SurfaceModel,
};

const DELTA: f64 = 2.0 * PI * 1e8;

/// Lowest fig4 power with a minimum record, fixed at the first verified run.
const FIG4_THRESHOLD_W: f64 = 25e-6;

struct Verdict {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, Duration, fn() -> Verdict);

fn verdict(passed: bool, detail: String) -> Verdict {
    Verdict { passed, detail }
}

fn log_points(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a * (b / a).powf(i as f64 / (n - 1) as f64)).collect()
}

/// Least-squares slope of ln|y| against ln x.
fn log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.abs().ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

fn uniform(intensity: f64) -> LaserSpec {
    LaserSpec::new(DELTA, FieldModel::Uniform { intensity }, PI / 2.0).unwrap()
}

fn c1_c3() -> Verdict {
    let c3 = c3_perfect_conductor(&AtomSpecies::rubidium());
    // C3 = α_DC ħω/(32πε0) with α_DC = 2d²/(3ħω) collapses to d²/(48πε0).
    let d = 2.53e-29;
    let by_hand = d * d / (48.0 * PI * 8.854_187_812_8e-12);
    let rel = (c3 / by_hand - 1.0).abs();
    let rel_lit = (c3 / 4.794e-49 - 1.0).abs();
    verdict(
        rel < 5e-3 && rel_lit < 5e-3,
        format!("C3 = {c3:.6e} J m^3, arithmetic {by_hand:.6e}, rel {rel:.1e}"),
    )
}

fn c2_identity() -> Verdict {
    let atom = AtomSpecies::rubidium();
    let laser = LaserSpec::new(
        DELTA,
        FieldModel::Evanescent {
            c0: 4.51e-23,
            power: 39e-6,
            z0: 430e-9,
        },
        PI / 2.0,
    )
    .unwrap();
    let surface = SurfaceModel::plasmon_direct(60.0, PlasmonSign::Positive).unwrap();
    let (worst, n) = identity_sweep(&atom, &surface, &laser, c3_perfect_conductor(&atom)).unwrap();
    verdict(
        worst < 1e-6,
        format!("max residual {worst:.2e} over {n} points (tol 1e-6)"),
    )
}

fn c3_convergence() -> Verdict {
    let atom = AtomSpecies::rubidium();
    let glass = SurfaceModel::constant_eps(2.286).unwrap();
    let laser = uniform(5e4);
    let q = QuadratureConfig::default();
    let wl = laser.omega_l(&atom);
    let mut worst: f64 = 0.0;
    for frac in [0.001, 0.002, 0.005, 0.01, 0.015, 0.02] {
        let z = frac * C / wl;
        let full = u_lcp(&atom, &glass, &laser, z, &q, PolarizabilityModel::TwoLevel).unwrap();
        let closed = u_lcp_nonretarded(&atom, &laser, 1.286 / 3.286, z).unwrap();
        worst = worst.max((full / closed - 1.0).abs());
    }
    verdict(
        worst < 0.01,
        format!("max |full/closed - 1| = {worst:.2e} for w_L z/c <= 0.02 (tol 1e-2)"),
    )
}

fn c4_green_oracle() -> Verdict {
    let q = QuadratureConfig::default();
    let metal = SurfaceModel::constant_eps(1e8).unwrap();
    let w = 2.37e15;
    let mut worst: f64 = 0.0;
    for z in log_points(10e-9, 1e-6, 9) {
        let re = tensor_deviation(
            &scattering_green_real(&metal, z, w, &q).unwrap(),
            &perfect_mirror_real(z, w),
        );
        let im = tensor_deviation(
            &scattering_green_imag(&metal, z, w, &q).unwrap(),
            &perfect_mirror_imag(z, w),
        );
        worst = worst.max(re).max(im);
    }
    verdict(worst < 1e-3, format!("max component deviation {worst:.2e} (tol 1e-3)"))
}

fn c5_scaling() -> Verdict {
    let atom = AtomSpecies::rubidium();
    let q = QuadratureConfig::default();
    let slope = |a: f64, b: f64| {
        let z = log_points(a, b, 8);
        let u: Vec<f64> = z
            .iter()
            .map(|&x| u_cp(&atom, &SurfaceModel::PerfectMirror, x, &q).unwrap())
            .collect();
        log_slope(&z, &u)
    };
    let near = slope(5e-9, 20e-9);
    let far = slope(5e-6, 50e-6);
    verdict(
        (near + 3.0).abs() <= 0.05 && (far + 4.0).abs() <= 0.05,
        format!("slope [5, 20] nm = {near:.4} (want -3 +/- 0.05), [5, 50] um = {far:.4} (want -4 +/- 0.05)"),
    )
}

fn c6_fig3() -> Verdict {
    let (s, plan) = ScenarioConfig::preset("fig3").unwrap().build().unwrap();
    let with = scenario_extrema(&s, &plan).unwrap();
    let additive = scenario_extrema(&s.with_additive_only(true), &plan).unwrap();
    let has_min = with
        .iter()
        .any(|e| e.kind == ExtremumKind::Minimum && e.z_position > 100e-9 && e.z_position < 1e-6);
    let single_barrier = additive.len() == 1 && additive[0].kind == ExtremumKind::Maximum;
    let describe = |v: &[casimir_lcp::ExtremumRecord]| {
        v.iter()
            .map(|e| format!("{} {:.1} nm", e.kind.as_str(), e.z_position * 1e9))
            .collect::<Vec<_>>()
            .join(", ")
    };
    verdict(
        has_min && single_barrier,
        format!(
            "with U_LCP: [{}] (want a minimum in (100 nm, 1 um)); additive only: [{}]",
            describe(&with),
            describe(&additive)
        ),
    )
}

fn c7_fig4() -> Verdict {
    let (s, plan) = ScenarioConfig::preset("fig4").unwrap().build().unwrap();
    let reference = SweepPlan {
        powers: vec![10e-6, 39e-6, 100e-6, 400e-6],
        ..plan.clone()
    };
    let additive = power_sweep(&s.with_additive_only(true), &reference).unwrap();
    let barriers: Vec<f64> = reference
        .powers
        .iter()
        .map(|&p| {
            let r: Vec<_> = additive.at_power(p).collect();
            if r.len() == 1 && r[0].kind == ExtremumKind::Maximum {
                r[0].z_position
            } else {
                f64::NAN
            }
        })
        .collect();
    let decreasing = barriers.iter().all(|z| z.is_finite()) && barriers.windows(2).all(|w| w[1] < w[0]);
    let full = power_sweep(&s, &plan).unwrap();
    let threshold = full.minimum_threshold();
    let below_clean = threshold.is_some_and(|t| {
        full.records
            .iter()
            .filter(|r| r.kind == ExtremumKind::Minimum)
            .all(|r| r.power >= t)
    });
    let ok = decreasing && full.failures.is_empty() && threshold == Some(FIG4_THRESHOLD_W) && below_clean;
    verdict(
        ok,
        format!(
            "additive barriers {:?} nm; first minimum at {:?} uW (golden {} uW)",
            barriers.iter().map(|z| (z * 1e11).round() / 100.0).collect::<Vec<_>>(),
            threshold.map(|t| t * 1e6),
            FIG4_THRESHOLD_W * 1e6
        ),
    )
}

fn c8_self_consistency() -> Verdict {
    let atom = AtomSpecies::rubidium();
    let glass = SurfaceModel::constant_eps(2.286).unwrap();
    let laser = uniform(5e4);
    let coarse = QuadratureConfig::default();
    let fine = coarse.with_rel_tol(0.5 * coarse.rel_tol);
    let mut worst: f64 = 0.0;
    for z in log_points(10e-9, 1e-6, 10) {
        let a = u_cp(&atom, &glass, z, &coarse).unwrap();
        let b = u_cp(&atom, &glass, z, &fine).unwrap();
        let c = u_lcp(&atom, &glass, &laser, z, &coarse, PolarizabilityModel::TwoLevel).unwrap();
        let d = u_lcp(&atom, &glass, &laser, z, &fine, PolarizabilityModel::TwoLevel).unwrap();
        worst = worst.max((a - b).abs() / b.abs()).max((c - d).abs() / d.abs());
    }
    verdict(
        worst < coarse.rel_tol,
        format!("max relative change {worst:.2e} (tol {:.0e})", coarse.rel_tol),
    )
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

fn c9_determinism() -> Verdict {
    let curve = |name: &str| {
        let cfg = ScenarioConfig::preset(name).unwrap();
        let mut buf = Vec::new();
        write_curve(&cfg, &mut buf).unwrap();
        buf
    };
    let extrema = || {
        let cfg = ScenarioConfig::preset("fig4").unwrap();
        let mut buf = Vec::new();
        write_extrema(&cfg, &mut buf).unwrap();
        buf
    };
    let mut ok = true;
    let mut sizes = Vec::new();
    for name in ["fig2", "fig3"] {
        let runs = [
            curve(name),
            curve(name),
            in_pool(1, || curve(name)),
            in_pool(8, || curve(name)),
        ];
        ok &= runs.iter().all(|r| *r == runs[0]);
        sizes.push(runs[0].len());
    }
    let runs = [extrema(), extrema(), in_pool(1, extrema), in_pool(8, extrema)];
    ok &= runs.iter().all(|r| *r == runs[0]);
    sizes.push(runs[0].len());
    verdict(
        ok,
        format!("fig2/fig3 curves and fig4 extrema identical over 2 runs and 1/8 threads ({sizes:?} bytes)"),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("C3 reproduction", Duration::from_millis(1), c1_c3),
        ("product identity", Duration::from_secs(1), c2_identity),
        ("nonretarded convergence", Duration::from_secs(10), c3_convergence),
        ("Green-tensor oracle", Duration::from_secs(10), c4_green_oracle),
        ("CP scaling laws", Duration::from_secs(30), c5_scaling),
        ("fig3 dip", Duration::from_secs(5), c6_fig3),
        ("fig4 trend", Duration::from_secs(10), c7_fig4),
        (
            "quadrature self-consistency",
            Duration::from_secs(10),
            c8_self_consistency,
        ),
        ("determinism", Duration::MAX, c9_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let v = run();
        let dt = t0.elapsed();
        let in_time = dt < *limit;
        let passed = v.passed && in_time;
        if !passed {
            failed += 1;
        }
        let budget = if *limit == Duration::MAX {
            String::new()
        } else {
            format!(" < {limit:?}")
        };
        println!(
            "criterion {} {}: {} | {} | {:.3?}{}{}",
            i + 1,
            name,
            if passed { "PASS" } else { "FAIL" },
            v.detail,
            dt,
            budget,
            if in_time { "" } else { " (over budget)" }
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
