//! Casimir–Polder, optical dipole and laser-induced Casimir–Polder
//! potentials, their quasi-static closed forms, the total, and the force.
//!
//! The full potential is `U_tot = U_CP + U_L + U_LCP`. The remaining two
//! lowest-order terms of `−½⟨d·E⟩` (free dipole with free field, induced
//! dipole with induced field) vanish for a coherent source and are not
//! represented.

use std::f64::consts::PI;

use log::warn;
use num_complex::Complex64;

use crate::domain::{AtomSpecies, FieldModel, LaserSpec, C, EPS0, HBAR, MU0};
use crate::error::{Error, Result};
use crate::greens::{scattering_green_imag, scattering_green_nonretarded, scattering_green_real, GreensDiag};
use crate::material::{rp_nonretarded, SurfaceModel};
use crate::optics::{evanescent_potential, field_squared, intensity_at};
use crate::quadrature::{integrate_scalar, QuadratureConfig};

/// How the potentials are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Quasi-static closed forms: `−C3/z³` and the `I(z)/z³` laser-induced term.
    Nonretarded,
    /// Frequency and wavevector quadrature of the retarded Green's tensor.
    Full,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Nonretarded => "nonretarded",
            Mode::Full => "full",
        }
    }
}

/// Polarizability used at the laser frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PolarizabilityModel {
    /// `−α_DC ω̃₁₀ / (2Δ)`.
    #[default]
    TwoLevel,
    /// Sum over transitions, evaluated at ω_L = ω̃₁₀ + Δ.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub mode: Mode,
    pub polarizability: PolarizabilityModel,
    /// Replaces the surface-derived C3 in nonretarded mode.
    pub c3_override: Option<f64>,
    /// Drop the laser-induced term, leaving `U_CP + U_L`.
    pub additive_only: bool,
    pub quad: QuadratureConfig,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Nonretarded,
            polarizability: PolarizabilityModel::TwoLevel,
            c3_override: None,
            additive_only: false,
            quad: QuadratureConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialComponents {
    pub u_cp: f64,
    pub u_l: f64,
    pub u_lcp: f64,
    pub u_tot: f64,
}

impl PotentialComponents {
    pub fn new(u_cp: f64, u_l: f64, u_lcp: f64) -> Self {
        Self {
            u_cp,
            u_l,
            u_lcp,
            u_tot: u_cp + u_l + u_lcp,
        }
    }
}

/// Which potential a force or derivative refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Component {
    #[default]
    Total,
    CasimirPolder,
    Laser,
    LaserInduced,
}

impl Component {
    pub fn pick(&self, u: &PotentialComponents) -> f64 {
        match self {
            Component::Total => u.u_tot,
            Component::CasimirPolder => u.u_cp,
            Component::Laser => u.u_l,
            Component::LaserInduced => u.u_lcp,
        }
    }
}

fn check_height(z: f64) -> Result<()> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("atom-surface distance must be > 0, got {z}")))
    }
}

/// Isotropic ground-state polarizability at a real or purely imaginary frequency.
///
/// The effective upward transition contributes `ω̃₁₀|d|²/(ω̃₁₀² − ω²)`; each
/// downward transition enters with a negative transition frequency.
pub fn polarizability(atom: &AtomSpecies, omega: Complex64) -> Result<f64> {
    if omega.re != 0.0 && omega.im != 0.0 {
        return Err(Error::invalid("frequency must be real or purely imaginary"));
    }
    let w2 = (omega * omega).re;
    let term = |freq: f64, dipole: f64| -> Result<f64> {
        let denom = freq * freq - w2;
        if denom.abs() <= f64::EPSILON * freq * freq {
            return Err(Error::Pole { omega: freq });
        }
        Ok(freq * dipole * dipole / denom)
    };
    let mut sum = term(atom.omega10(), atom.dipole())?;
    for t in atom.downward_transitions() {
        sum -= term(t.frequency, t.dipole)?;
    }
    Ok(2.0 * sum / (3.0 * HBAR))
}

/// Near-resonant two-level polarizability `−α_DC ω̃₁₀ / (2Δ)`.
pub fn polarizability_two_level(atom: &AtomSpecies, detuning: f64) -> Result<f64> {
    if detuning == 0.0 {
        return Err(Error::Pole { omega: atom.omega10() });
    }
    if detuning.abs() / atom.omega10() > 0.01 {
        warn!(
            "|detuning|/omega10 = {:.3e}; two-level polarizability assumes near resonance",
            detuning.abs() / atom.omega10()
        );
    }
    Ok(-atom.alpha_dc() * atom.omega10() / (2.0 * detuning))
}

fn laser_polarizability(atom: &AtomSpecies, laser: &LaserSpec, model: PolarizabilityModel) -> Result<f64> {
    match model {
        PolarizabilityModel::TwoLevel => polarizability_two_level(atom, laser.detuning()),
        PolarizabilityModel::Full => polarizability(atom, Complex64::new(laser.omega_l(atom), 0.0)),
    }
}

/// Map (0, 1) onto (0, ∞) with ξ = ω t/(1 − t); returns (ξ, dξ/dt).
fn half_line(omega: f64, t: f64) -> (f64, f64) {
    let s = 1.0 - t;
    (omega * t / s, omega / (s * s))
}

/// Ordinary Casimir–Polder potential by frequency quadrature.
///
/// A `PlasmonDirect` surface has no retarded response; its Casimir–Polder
/// part is evaluated against the perfect mirror, matching the perfect-
/// conductor C3 it uses in nonretarded mode.
pub fn u_cp(atom: &AtomSpecies, surface: &SurfaceModel, z: f64, quad: &QuadratureConfig) -> Result<f64> {
    check_height(z)?;
    let surface = match surface {
        SurfaceModel::PlasmonDirect { .. } => &SurfaceModel::PerfectMirror,
        s => s,
    };
    let w = atom.omega10();
    let xi_max = quad.freq_cutoff_factor * C / (2.0 * z);
    let t_max = xi_max / (xi_max + w);
    let inner = quad.with_rel_tol(0.1 * quad.rel_tol);
    let prefactor = HBAR * MU0 / (2.0 * PI);
    let outer = QuadratureConfig {
        abs_tol: quad.abs_tol / prefactor,
        ..*quad
    };

    let integrand = |t: f64| -> Result<f64> {
        let (xi, jac) = half_line(w, t);
        if xi == 0.0 {
            // ξ² Tr G stays finite; the integrand is never sampled at t = 0.
            return Ok(0.0);
        }
        let alpha = polarizability(atom, Complex64::new(0.0, xi))?;
        let g = scattering_green_imag(surface, z, xi, &inner)?;
        Ok(xi * xi * alpha * g.trace().re * jac)
    };
    // The quadrature driver takes infallible integrands; the first inner
    // failure is captured and surfaced after the outer pass.
    let failure = std::cell::RefCell::new(None);
    let (value, _) = integrate_scalar(
        |t| match integrand(t) {
            Ok(v) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        },
        0.0,
        t_max,
        &outer,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let off_resonant = prefactor * value;

    let mut resonant = 0.0;
    for tr in atom.downward_transitions() {
        let g = scattering_green_real(surface, z, tr.frequency, quad)?;
        resonant -= MU0 / 3.0 * tr.frequency * tr.frequency * tr.dipole * tr.dipole * g.trace().re;
    }
    Ok(off_resonant + resonant)
}

/// Perfect-conductor C3 of an undamped single-transition atom, J·m³.
pub fn c3_perfect_conductor(atom: &AtomSpecies) -> f64 {
    atom.alpha_dc() * HBAR * atom.omega10() / (32.0 * PI * EPS0)
}

/// C3 = ħ/(16π²ε0) ∫ dξ α(iξ) r_p(iξ) for a surface with a quasi-static response.
pub fn c3_surface(atom: &AtomSpecies, surface: &SurfaceModel, quad: &QuadratureConfig) -> Result<f64> {
    match surface {
        SurfaceModel::PerfectMirror | SurfaceModel::PlasmonDirect { .. } if atom.is_ground_state() => {
            return Ok(c3_perfect_conductor(atom));
        }
        _ => {}
    }
    let w = atom.omega10();
    let prefactor = HBAR / (16.0 * PI * PI * EPS0);
    let cfg = QuadratureConfig {
        abs_tol: quad.abs_tol / prefactor,
        ..*quad
    };
    let failure = std::cell::RefCell::new(None);
    let (value, _) = integrate_scalar(
        |t| {
            let (xi, jac) = half_line(w, t);
            let rp = match surface {
                SurfaceModel::PlasmonDirect { .. } => 1.0,
                s => rp_nonretarded(s, Complex64::new(0.0, xi)).re,
            };
            match polarizability(atom, Complex64::new(0.0, xi)) {
                Ok(a) => a * rp * jac,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    0.0
                }
            }
        },
        0.0,
        1.0,
        &cfg,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(prefactor * value)
}

pub fn u_cp_nonretarded(c3: f64, z: f64) -> f64 {
    -c3 / z.powi(3)
}

/// Optical dipole potential.
pub fn u_l(atom: &AtomSpecies, laser: &LaserSpec, z: f64, model: PolarizabilityModel) -> Result<f64> {
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::invalid(format!("z must be >= 0, got {z}")));
    }
    match laser.field() {
        FieldModel::Uniform { .. } => {
            let alpha = laser_polarizability(atom, laser, model)?;
            Ok(-0.25 * alpha * field_squared(laser, atom, z)?)
        }
        FieldModel::Evanescent { c0, power, z0 } => Ok(evanescent_potential(c0, power, z0, z)),
    }
}

fn lcp_from_tensor(
    atom: &AtomSpecies,
    laser: &LaserSpec,
    z: f64,
    model: PolarizabilityModel,
    g: &GreensDiag,
) -> Result<f64> {
    let alpha = laser_polarizability(atom, laser, model)?;
    let e2 = field_squared(laser, atom, z)?;
    let wl = laser.omega_l(atom);
    Ok(-0.5 * MU0 * wl * wl * alpha * alpha * e2 * g.projected(laser.theta()).re)
}

/// Laser-induced Casimir–Polder potential with the retarded tensor at ω_L.
///
/// `PlasmonDirect` surfaces use the quasi-static tensor with Re r_p = ±q.
pub fn u_lcp(
    atom: &AtomSpecies,
    surface: &SurfaceModel,
    laser: &LaserSpec,
    z: f64,
    quad: &QuadratureConfig,
    model: PolarizabilityModel,
) -> Result<f64> {
    check_height(z)?;
    if laser.detuning() == 0.0 {
        return Err(Error::Pole { omega: atom.omega10() });
    }
    let wl = laser.omega_l(atom);
    let g = match surface {
        SurfaceModel::PlasmonDirect { .. } => {
            let rp = rp_nonretarded(surface, Complex64::new(wl, 0.0));
            scattering_green_nonretarded(rp, z, wl)
        }
        s => scattering_green_real(s, z, wl, quad)?,
    };
    lcp_from_tensor(atom, laser, z, model, &g)
}

/// Quasi-static laser-induced potential
/// `−ω̃₁₀² α_DC² I(z) Re r_p / (128 π ε0² c Δ² z³)`.
pub fn u_lcp_nonretarded(atom: &AtomSpecies, laser: &LaserSpec, re_rp: f64, z: f64) -> Result<f64> {
    check_height(z)?;
    let delta = laser.detuning();
    if delta == 0.0 {
        return Err(Error::Pole { omega: atom.omega10() });
    }
    let intensity = intensity_at(laser, atom, z)?;
    let w = atom.omega10();
    let a = atom.alpha_dc();
    Ok(-(w * w * a * a * intensity * re_rp) / (128.0 * EPS0 * EPS0 * PI * C * delta * delta * z.powi(3)))
}

/// Relative residual of `U_LCP ħΔ = U_L U_CP Q` with the perfect-conductor C3.
///
/// `q` carries the sign of Re r_p.
pub fn identity_residual(atom: &AtomSpecies, laser: &LaserSpec, q: f64, z: f64) -> Result<f64> {
    identity_residual_with_c3(atom, laser, q, z, c3_perfect_conductor(atom))
}

pub fn identity_residual_with_c3(atom: &AtomSpecies, laser: &LaserSpec, q: f64, z: f64, c3: f64) -> Result<f64> {
    let lhs = u_lcp_nonretarded(atom, laser, q, z)? * HBAR * laser.detuning();
    let rhs = u_l(atom, laser, z, PolarizabilityModel::TwoLevel)? * u_cp_nonretarded(c3, z) * q;
    let scale = lhs.abs().max(rhs.abs());
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((lhs - rhs).abs() / scale)
}

/// Atom, surface, drive and evaluation options evaluated together.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub atom: AtomSpecies,
    pub surface: SurfaceModel,
    pub laser: LaserSpec,
    pub options: EvalOptions,
    c3: f64,
}

impl Scenario {
    pub fn new(atom: AtomSpecies, surface: SurfaceModel, laser: LaserSpec, options: EvalOptions) -> Result<Self> {
        surface.validate()?;
        options.quad.validate()?;
        let c3 = match options.c3_override {
            Some(c3) if c3.is_finite() => c3,
            Some(c3) => return Err(Error::invalid(format!("C3 override must be finite, got {c3}"))),
            None => c3_surface(&atom, &surface, &options.quad)?,
        };
        Ok(Self {
            atom,
            surface,
            laser,
            options,
            c3,
        })
    }

    /// C3 used for `U_CP` in nonretarded mode.
    pub fn c3(&self) -> f64 {
        self.c3
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        let mut s = self.clone();
        s.options.mode = mode;
        s
    }

    pub fn with_additive_only(&self, additive_only: bool) -> Self {
        let mut s = self.clone();
        s.options.additive_only = additive_only;
        s
    }

    pub fn with_power(&self, power: f64) -> Result<Self> {
        let mut s = self.clone();
        s.laser = self.laser.with_power(power)?;
        Ok(s)
    }

    pub fn components(&self, z: f64) -> Result<PotentialComponents> {
        total_potential(self, z)
    }
}

/// All three potentials and their sum at height `z`.
pub fn total_potential(s: &Scenario, z: f64) -> Result<PotentialComponents> {
    check_height(z)?;
    let opts = &s.options;
    let u_light = u_l(&s.atom, &s.laser, z, opts.polarizability)?;
    let (cp, lcp) = match opts.mode {
        Mode::Nonretarded => {
            let cp = u_cp_nonretarded(s.c3, z);
            let lcp = if opts.additive_only {
                0.0
            } else {
                let wl = s.laser.omega_l(&s.atom);
                let re_rp = rp_nonretarded(&s.surface, Complex64::new(wl, 0.0)).re;
                u_lcp_nonretarded(&s.atom, &s.laser, re_rp, z)?
            };
            (cp, lcp)
        }
        Mode::Full => {
            let cp = u_cp(&s.atom, &s.surface, z, &opts.quad)?;
            let lcp = if opts.additive_only {
                0.0
            } else {
                u_lcp(&s.atom, &s.surface, &s.laser, z, &opts.quad, opts.polarizability)?
            };
            (cp, lcp)
        }
    };
    Ok(PotentialComponents::new(cp, u_light, lcp))
}

/// Central-difference step used by [`force`].
pub fn force_step(z: f64) -> f64 {
    (1e-4 * z).max(1e-12)
}

/// Differentiate `u` at `z` with one level of Richardson extrapolation; returns −dU/dz.
pub fn force_of<F>(u: F, z: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = force_step(z);
    if !(z - h > 0.0) {
        return Err(Error::StencilDomain { z, step: h });
    }
    let central = |h: f64| -> Result<f64> { Ok((u(z + h)? - u(z - h)?) / (2.0 * h)) };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    Ok(-(4.0 * fine - coarse) / 3.0)
}

/// z-component of the force from the selected potential, N.
pub fn force(s: &Scenario, z: f64, which: Component) -> Result<f64> {
    force_of(|x| Ok(which.pick(&total_potential(s, x)?)), z)
}
