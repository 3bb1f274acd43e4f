//! Physical constants and the value types shared by every other module.
//!
//! Everything is SI: energies in J, lengths in m, angular frequencies in
//! rad/s, polarizabilities in C²·m²/J.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Vacuum permittivity, F/m (CODATA 2018).
pub const EPS0: f64 = 8.854_187_812_8e-12;
/// Vacuum permeability, N/A² (CODATA 2018).
pub const MU0: f64 = 1.256_637_062_12e-6;
/// Speed of light, m/s (exact).
pub const C: f64 = 299_792_458.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub eps0: f64,
    pub mu0: f64,
    pub c: f64,
}

impl PhysicalConstants {
    pub const CODATA2018: PhysicalConstants = PhysicalConstants {
        hbar: HBAR,
        eps0: EPS0,
        mu0: MU0,
        c: C,
    };

    /// Relative deviation of `mu0 * eps0 * c^2` from one.
    pub fn closure_residual(&self) -> f64 {
        (self.mu0 * self.eps0 * self.c * self.c - 1.0).abs()
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA2018
    }
}

/// Static polarizability `2 d² / (3 ħ ω)` of a single transition.
pub fn static_polarizability(omega: f64, dipole: f64) -> f64 {
    2.0 * dipole * dipole / (3.0 * HBAR * omega)
}

/// One dipole-allowed transition: angular frequency (positive) and
/// dipole matrix element magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub frequency: f64,
    pub dipole: f64,
}

/// An atom modelled by one effective upward transition out of the
/// initial state, plus optional transitions to lower-lying states.
///
/// `omega10` is the already surface-shifted transition frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomSpecies {
    omega10: f64,
    dipole: f64,
    downward_transitions: Vec<Transition>,
}

impl AtomSpecies {
    pub fn new(omega10: f64, dipole: f64) -> Result<Self> {
        Self::with_downward(omega10, dipole, Vec::new())
    }

    pub fn with_downward(omega10: f64, dipole: f64, downward_transitions: Vec<Transition>) -> Result<Self> {
        if !(omega10.is_finite() && omega10 > 0.0) {
            return Err(Error::invalid(format!("omega10 must be > 0, got {omega10}")));
        }
        if !(dipole.is_finite() && dipole > 0.0) {
            return Err(Error::invalid(format!("dipole must be > 0, got {dipole}")));
        }
        for t in &downward_transitions {
            if !(t.frequency > 0.0 && t.dipole >= 0.0) {
                return Err(Error::invalid(format!(
                    "downward transition needs frequency > 0 and dipole >= 0, got {t:?}"
                )));
            }
        }
        Ok(Self {
            omega10,
            dipole,
            downward_transitions,
        })
    }

    /// Rubidium as used throughout the evanescent-mirror scenarios:
    /// ω̃₁₀ = 2.37e15 rad/s, |d| = 2.53e-29 C·m.
    pub fn rubidium() -> Self {
        Self::new(2.37e15, 2.53e-29).expect("valid constants")
    }

    pub fn omega10(&self) -> f64 {
        self.omega10
    }

    pub fn dipole(&self) -> f64 {
        self.dipole
    }

    pub fn downward_transitions(&self) -> &[Transition] {
        &self.downward_transitions
    }

    pub fn is_ground_state(&self) -> bool {
        self.downward_transitions.is_empty()
    }

    /// Static polarizability of the effective transition.
    pub fn alpha_dc(&self) -> f64 {
        static_polarizability(self.omega10, self.dipole)
    }
}

/// Spatial profile of the driving field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldModel {
    /// Position-independent intensity, W/m².
    Uniform { intensity: f64 },
    /// Evanescent wave with dipole potential `c0 * power * exp(-2 z / z0)`.
    Evanescent { c0: f64, power: f64, z0: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaserSpec {
    detuning: f64,
    field: FieldModel,
    theta: f64,
}

impl LaserSpec {
    /// `detuning` is ω_L − ω̃₁₀; `theta` is the angle between the surface
    /// normal and the field polarisation.
    pub fn new(detuning: f64, field: FieldModel, theta: f64) -> Result<Self> {
        if !detuning.is_finite() {
            return Err(Error::invalid("detuning must be finite"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::invalid(format!("theta must lie in [0, pi], got {theta}")));
        }
        match field {
            FieldModel::Uniform { intensity } if !(intensity >= 0.0 && intensity.is_finite()) => {
                return Err(Error::invalid(format!("intensity must be >= 0, got {intensity}")));
            }
            FieldModel::Evanescent { c0, power, z0 } => {
                if !(power >= 0.0 && power.is_finite()) {
                    return Err(Error::invalid(format!("power must be >= 0, got {power}")));
                }
                if !(z0 > 0.0 && z0.is_finite()) {
                    return Err(Error::invalid(format!("z0 must be > 0, got {z0}")));
                }
                if !c0.is_finite() {
                    return Err(Error::invalid("c0 must be finite"));
                }
            }
            _ => {}
        }
        Ok(Self { detuning, field, theta })
    }

    pub fn detuning(&self) -> f64 {
        self.detuning
    }

    pub fn field(&self) -> FieldModel {
        self.field
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Laser angular frequency ω̃₁₀ + Δ.
    pub fn omega_l(&self, atom: &AtomSpecies) -> f64 {
        atom.omega10() + self.detuning
    }

    /// Evanescent laser power, if this is an evanescent field.
    pub fn power(&self) -> Option<f64> {
        match self.field {
            FieldModel::Evanescent { power, .. } => Some(power),
            FieldModel::Uniform { .. } => None,
        }
    }

    /// Copy of this laser with the evanescent power replaced.
    pub fn with_power(&self, power: f64) -> Result<Self> {
        match self.field {
            FieldModel::Evanescent { c0, z0, .. } => {
                Self::new(self.detuning, FieldModel::Evanescent { c0, power, z0 }, self.theta)
            }
            FieldModel::Uniform { .. } => Err(Error::invalid(
                "laser power is only defined for the evanescent field model",
            )),
        }
    }
}

/// Potential components sampled on a z-grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialCurve {
    pub z_grid: Vec<f64>,
    pub u_cp: Vec<f64>,
    pub u_l: Vec<f64>,
    pub u_lcp: Vec<f64>,
    pub u_tot: Vec<f64>,
}

impl PotentialCurve {
    /// Assemble a curve; `u_tot` is formed as the elementwise sum.
    pub fn from_components(z_grid: Vec<f64>, u_cp: Vec<f64>, u_l: Vec<f64>, u_lcp: Vec<f64>) -> Result<Self> {
        let n = z_grid.len();
        if u_cp.len() != n || u_l.len() != n || u_lcp.len() != n {
            return Err(Error::invalid("curve columns differ in length"));
        }
        if z_grid.iter().any(|&z| !(z > 0.0)) {
            return Err(Error::invalid("curve grid must be positive"));
        }
        if z_grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::invalid("curve grid must be strictly increasing"));
        }
        let u_tot = (0..n).map(|i| u_cp[i] + u_l[i] + u_lcp[i]).collect();
        Ok(Self {
            z_grid,
            u_cp,
            u_l,
            u_lcp,
            u_tot,
        })
    }

    pub fn len(&self) -> usize {
        self.z_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z_grid.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtremumKind {
    Minimum,
    Maximum,
}

impl ExtremumKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExtremumKind::Minimum => "minimum",
            ExtremumKind::Maximum => "maximum",
        }
    }
}

/// A located extremum of the total potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumRecord {
    pub power: f64,
    pub kind: ExtremumKind,
    pub z_position: f64,
    pub value: f64,
}
