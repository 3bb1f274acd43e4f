//! Laser intensity and squared field amplitude at the atom.
//!
//! `E` always denotes the peak amplitude of `E(r) cos(ω_L t)`, so
//! `I = ½ ε0 c |E|²` and the dipole potential is `−¼ α(ω_L) |E|²`.
//! For the evanescent wave the intensity is defined backwards from
//! `U_L(z) = C0 P exp(−2z/z0)` through that relation, using the
//! two-level polarizability at the laser frequency.

use crate::domain::{AtomSpecies, FieldModel, LaserSpec, C, EPS0};
use crate::error::{Error, Result};
use crate::potentials::polarizability_two_level;

fn check_z(z: f64) -> Result<()> {
    if z >= 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("z must be >= 0, got {z}")))
    }
}

/// Evanescent dipole potential `C0 P exp(−2z/z0)`.
pub(crate) fn evanescent_potential(c0: f64, power: f64, z0: f64, z: f64) -> f64 {
    c0 * power * (-2.0 * z / z0).exp()
}

/// Laser intensity at height `z`, W/m².
pub fn intensity_at(laser: &LaserSpec, atom: &AtomSpecies, z: f64) -> Result<f64> {
    check_z(z)?;
    match laser.field() {
        FieldModel::Uniform { intensity } => Ok(intensity),
        FieldModel::Evanescent { c0, power, z0 } => {
            let delta = laser.detuning();
            if !(delta > 0.0) {
                return Err(Error::DetuningSign { detuning: delta });
            }
            let alpha = polarizability_two_level(atom, delta)?;
            let u_l = evanescent_potential(c0, power, z0, z);
            Ok(-2.0 * EPS0 * C * u_l / alpha)
        }
    }
}

/// Squared peak field amplitude `2 I / (ε0 c)`, V²/m².
pub fn field_squared(laser: &LaserSpec, atom: &AtomSpecies, z: f64) -> Result<f64> {
    Ok(2.0 * intensity_at(laser, atom, z)? / (EPS0 * C))
}
