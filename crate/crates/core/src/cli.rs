//! Command implementations behind the `lcp` binary: CSV curves, extremum
//! tables and the consistency report.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::analysis::{potential_curve, power_sweep, SweepPlan, SweepReport};
use crate::config::{EnergyUnit, ScenarioConfig};
use crate::domain::{AtomSpecies, FieldModel, LaserSpec, HBAR};
use crate::error::{Error, Result};
use crate::greens::{
    perfect_mirror_imag, perfect_mirror_real, scattering_green_imag, scattering_green_nonretarded_imag,
    scattering_green_real, GreensDiag,
};
use crate::material::{rp_nonretarded, SurfaceModel};
use crate::potentials::{
    c3_perfect_conductor, identity_residual_with_c3, u_lcp, u_lcp_nonretarded, Mode, PolarizabilityModel,
};
use crate::quadrature::QuadratureConfig;

/// Command-line adjustments applied on top of a config.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub mode: Option<Mode>,
    pub additive_only: bool,
}

impl Overrides {
    pub fn apply(&self, cfg: &mut ScenarioConfig) {
        if let Some(m) = self.mode {
            cfg.sweep.mode = m.into();
        }
        if self.additive_only {
            cfg.potential.additive_only = true;
        }
    }
}

/// 17 significant digits; negative zero is written as zero.
pub fn format_value(v: f64) -> String {
    format!("{:.16e}", if v == 0.0 { 0.0 } else { v })
}

pub const CURVE_HEADER: &str = "z_m,u_cp_J,u_l_J,u_lcp_J,u_tot_J";
pub const EXTREMA_HEADER: &str = "power_W,kind,z_m,value_J";

/// Write the potential curve of `cfg` as CSV.
pub fn write_curve<W: Write>(cfg: &ScenarioConfig, out: &mut W) -> Result<()> {
    let (scenario, plan) = cfg.build()?;
    let curve = potential_curve(&scenario, &plan)?;
    let scale = match cfg.output.unit {
        EnergyUnit::J => None,
        EnergyUnit::HbarDelta => Some(HBAR * scenario.laser.detuning().abs()),
    };
    write!(out, "{CURVE_HEADER}")?;
    if scale.is_some() {
        write!(out, ",u_cp_hbar_delta,u_l_hbar_delta,u_lcp_hbar_delta,u_tot_hbar_delta")?;
    }
    writeln!(out)?;
    for i in 0..curve.len() {
        let cols = [curve.u_cp[i], curve.u_l[i], curve.u_lcp[i], curve.u_tot[i]];
        write!(out, "{}", format_value(curve.z_grid[i]))?;
        for v in cols {
            write!(out, ",{}", format_value(v))?;
        }
        if let Some(s) = scale {
            for v in cols {
                write!(out, ",{}", format_value(v / s))?;
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

fn sweep_plan(cfg: &ScenarioConfig) -> Result<SweepPlan> {
    let mut plan = cfg.plan()?;
    if plan.powers.is_empty() {
        match cfg.laser()?.power() {
            Some(p) => plan.powers.push(p),
            None => return Err(Error::invalid("extrema needs an evanescent laser field")),
        }
    }
    Ok(plan)
}

/// Write the extremum table of `cfg` as CSV and return the full report.
///
/// Records from powers that evaluated are written even when others failed;
/// the caller decides how to report the failures.
pub fn write_extrema<W: Write>(cfg: &ScenarioConfig, out: &mut W) -> Result<SweepReport> {
    let scenario = cfg.scenario()?;
    let plan = sweep_plan(cfg)?;
    let report = power_sweep(&scenario, &plan)?;
    writeln!(out, "{EXTREMA_HEADER}")?;
    for r in &report.records {
        writeln!(
            out,
            "{},{},{},{}",
            format_value(r.power),
            r.kind.as_str(),
            format_value(r.z_position),
            format_value(r.value)
        )?;
    }
    Ok(report)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

/// Curve CSV to `out`, the config's output path, or standard output.
pub fn cmd_curve(cfg: &ScenarioConfig, out: Option<&Path>) -> Result<()> {
    let mut w = open_output(out.or(cfg.output.path.as_deref()))?;
    write_curve(cfg, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Extremum CSV; fails after writing if any power failed to evaluate.
pub fn cmd_extrema(cfg: &ScenarioConfig, out: Option<&Path>) -> Result<()> {
    let mut w = open_output(out.or(cfg.output.path.as_deref()))?;
    let report = write_extrema(cfg, &mut w)?;
    w.flush()?;
    match report.failures.into_iter().next() {
        Some(f) => Err(f.error),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} max_residual={:.3e} tol={:.1e} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.max_residual,
            self.tolerance,
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CheckReport {
    pub checks: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn outcome(name: &'static str, tolerance: f64, r: Result<(f64, String)>) -> CheckOutcome {
    match r {
        Ok((max_residual, detail)) => CheckOutcome {
            name,
            passed: max_residual < tolerance,
            max_residual,
            tolerance,
            detail,
        },
        Err(e) => CheckOutcome {
            name,
            passed: false,
            max_residual: f64::NAN,
            tolerance,
            detail: format!("error: {e}"),
        },
    }
}

pub const IDENTITY_TOL: f64 = 1e-6;
pub const CONVERGENCE_TOL: f64 = 0.01;
pub const MIRROR_ORACLE_TOL: f64 = 1e-3;
pub const SURFACE_ORACLE_TOL: f64 = 1e-3;

/// Largest relative component deviation of `got` from `want`.
pub fn tensor_deviation(got: &GreensDiag, want: &GreensDiag) -> f64 {
    got.components()
        .iter()
        .zip(want.components().iter())
        .map(|(g, w)| {
            if *w == Complex64::new(0.0, 0.0) {
                g.norm()
            } else {
                (g - w).norm() / w.norm()
            }
        })
        .fold(0.0, f64::max)
}

/// Max residual of the product identity over the standard window.
pub fn identity_sweep(atom: &AtomSpecies, surface: &SurfaceModel, laser: &LaserSpec, c3: f64) -> Result<(f64, usize)> {
    let q = rp_nonretarded(surface, Complex64::new(laser.omega_l(atom), 0.0)).re;
    let lasers: Vec<LaserSpec> = match laser.field() {
        FieldModel::Evanescent { .. } => [1e-6, 10e-6, 39e-6, 100e-6]
            .iter()
            .map(|&p| laser.with_power(p))
            .collect::<Result<_>>()?,
        FieldModel::Uniform { .. } => vec![*laser],
    };
    let z = SweepPlan::standard(Mode::Nonretarded).grid_points();
    let mut worst: f64 = 0.0;
    for l in &lasers {
        for &zi in &z {
            worst = worst.max(identity_residual_with_c3(atom, l, q, zi, c3).map_err(|e| e.at("identity", zi))?);
        }
    }
    Ok((worst, lasers.len() * z.len()))
}

/// Worst relative gap between the retarded and quasi-static laser-induced
/// potentials for ω_L z/c ∈ {0.005, 0.01, 0.02}, θ = π/2.
pub fn convergence_gap(
    atom: &AtomSpecies,
    surface: &SurfaceModel,
    detuning: f64,
    quad: &QuadratureConfig,
) -> Result<f64> {
    let laser = LaserSpec::new(
        detuning,
        FieldModel::Uniform { intensity: 5e4 },
        std::f64::consts::FRAC_PI_2,
    )?;
    let wl = laser.omega_l(atom);
    let re_rp = rp_nonretarded(surface, Complex64::new(wl, 0.0)).re;
    let mut worst: f64 = 0.0;
    for frac in [0.005, 0.01, 0.02] {
        let z = frac * crate::domain::C / wl;
        let full = u_lcp(atom, surface, &laser, z, quad, PolarizabilityModel::TwoLevel)?;
        let closed = u_lcp_nonretarded(atom, &laser, re_rp, z)?;
        let gap = if closed == 0.0 {
            full.abs()
        } else {
            (full / closed - 1.0).abs()
        };
        worst = worst.max(gap);
    }
    Ok(worst)
}

/// Worst component deviation of a strongly reflecting dielectric from the
/// mirror image solution over z ∈ {10 nm, 100 nm, 1 µm}, real and imaginary ω.
pub fn mirror_oracle_gap(omega: f64, quad: &QuadratureConfig) -> Result<f64> {
    let metal = SurfaceModel::constant_eps(1e8)?;
    let mut worst: f64 = 0.0;
    for z in [10e-9, 100e-9, 1e-6] {
        let re = scattering_green_real(&metal, z, omega, quad)?;
        let im = scattering_green_imag(&metal, z, omega, quad)?;
        worst = worst
            .max(tensor_deviation(&re, &perfect_mirror_real(z, omega)))
            .max(tensor_deviation(&im, &perfect_mirror_imag(z, omega)));
    }
    Ok(worst)
}

/// Quadrature against the electrostatic image tensor deep in the
/// quasi-static regime (ξ z/c = 1e-3, ξ = ω̃₁₀).
pub fn surface_oracle_gap(surface: &SurfaceModel, omega: f64, quad: &QuadratureConfig) -> Result<f64> {
    let z = 1e-3 * crate::domain::C / omega;
    let g = scattering_green_imag(surface, z, omega, quad)?;
    let rp = rp_nonretarded(surface, Complex64::new(0.0, omega));
    let image = scattering_green_nonretarded_imag(rp, z, omega);
    Ok(tensor_deviation(&g, &image))
}

/// Run the consistency suite for `cfg`.
pub fn run_checks(cfg: &ScenarioConfig) -> Result<CheckReport> {
    let scenario = cfg.scenario()?;
    let atom = &scenario.atom;
    let quad = scenario.options.quad;
    let c3 = cfg.potential.c3.unwrap_or_else(|| c3_perfect_conductor(atom));
    let retarded_surface = match scenario.surface {
        SurfaceModel::PlasmonDirect { .. } => None,
        s => Some(s),
    };
    let glass = SurfaceModel::constant_eps(2.286)?;

    let mut checks = Vec::new();
    checks.push(outcome(
        "identity",
        IDENTITY_TOL,
        identity_sweep(atom, &scenario.surface, &scenario.laser, c3)
            .map(|(r, n)| (r, format!("points={n} c3={c3:.6e}"))),
    ));
    let conv_surface = retarded_surface.unwrap_or(glass);
    checks.push(outcome(
        "nonretarded_convergence",
        CONVERGENCE_TOL,
        convergence_gap(atom, &conv_surface, scenario.laser.detuning(), &quad)
            .map(|r| (r, format!("surface={}", conv_surface.name()))),
    ));
    checks.push(outcome(
        "mirror_oracle",
        MIRROR_ORACLE_TOL,
        mirror_oracle_gap(atom.omega10(), &quad).map(|r| (r, "eps=1e8".to_string())),
    ));
    match retarded_surface {
        Some(s) => checks.push(outcome(
            "surface_green_oracle",
            SURFACE_ORACLE_TOL,
            surface_oracle_gap(&s, atom.omega10(), &quad).map(|r| (r, format!("surface={}", s.name()))),
        )),
        None => checks.push(CheckOutcome {
            name: "surface_green_oracle",
            passed: true,
            max_residual: 0.0,
            tolerance: SURFACE_ORACLE_TOL,
            detail: "skipped: surface has no retarded response".to_string(),
        }),
    }
    Ok(CheckReport { checks })
}

/// Print the check report; errors if any check failed.
pub fn cmd_check<W: Write>(cfg: &ScenarioConfig, out: &mut W) -> Result<CheckReport> {
    let report = run_checks(cfg)?;
    for c in &report.checks {
        writeln!(out, "{c}")?;
    }
    Ok(report)
}
