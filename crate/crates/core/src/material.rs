//! Electromagnetic response of the half-space below the atom.

use num_complex::Complex64;

use crate::domain::C;
use crate::error::{Error, Result};

/// Sign of Re r_p for a directly specified plasmonic enhancement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlasmonSign {
    Positive,
    Negative,
}

impl PlasmonSign {
    pub fn value(self) -> f64 {
        match self {
            PlasmonSign::Positive => 1.0,
            PlasmonSign::Negative => -1.0,
        }
    }

    pub fn from_i32(sign: i32) -> Result<Self> {
        match sign {
            1 => Ok(PlasmonSign::Positive),
            -1 => Ok(PlasmonSign::Negative),
            s => Err(Error::invalid(format!("plasmon sign must be +1 or -1, got {s}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfaceModel {
    /// r_s = -1, r_p = 1 at every frequency and wavevector.
    PerfectMirror,
    /// Dispersionless dielectric.
    ConstantEps { eps: f64 },
    /// ε(ω) = 1 + ω_P² / (ω_0² − ω² − iγω).
    DrudeLorentz { omega0: f64, omega_p: f64, gamma: f64 },
    /// Re r_p = sign·q imposed directly in the nonretarded formulas.
    PlasmonDirect { q: f64, sign: PlasmonSign },
}

impl SurfaceModel {
    pub fn constant_eps(eps: f64) -> Result<Self> {
        let s = SurfaceModel::ConstantEps { eps };
        s.validate()?;
        Ok(s)
    }

    pub fn drude_lorentz(omega0: f64, omega_p: f64, gamma: f64) -> Result<Self> {
        let s = SurfaceModel::DrudeLorentz { omega0, omega_p, gamma };
        s.validate()?;
        Ok(s)
    }

    pub fn plasmon_direct(q: f64, sign: PlasmonSign) -> Result<Self> {
        let s = SurfaceModel::PlasmonDirect { q, sign };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SurfaceModel::PerfectMirror => Ok(()),
            SurfaceModel::ConstantEps { eps } if eps >= 1.0 && eps.is_finite() => Ok(()),
            SurfaceModel::ConstantEps { eps } => {
                Err(Error::invalid(format!("constant permittivity must be >= 1, got {eps}")))
            }
            SurfaceModel::DrudeLorentz { omega0, omega_p, gamma } => {
                if !(gamma > 0.0 && gamma.is_finite()) {
                    return Err(Error::invalid(format!("Drude-Lorentz gamma must be > 0, got {gamma}")));
                }
                if !(omega0 >= 0.0 && omega_p >= 0.0 && omega0.is_finite() && omega_p.is_finite()) {
                    return Err(Error::invalid("Drude-Lorentz frequencies must be >= 0"));
                }
                Ok(())
            }
            SurfaceModel::PlasmonDirect { q, .. } if q > 0.0 && q.is_finite() => Ok(()),
            SurfaceModel::PlasmonDirect { q, .. } => {
                Err(Error::invalid(format!("plasmon quality factor must be > 0, got {q}")))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SurfaceModel::PerfectMirror => "perfect_mirror",
            SurfaceModel::ConstantEps { .. } => "constant_eps",
            SurfaceModel::DrudeLorentz { .. } => "drude_lorentz",
            SurfaceModel::PlasmonDirect { .. } => "plasmon_direct",
        }
    }
}

/// Relative permittivity at a real or imaginary angular frequency.
pub fn permittivity(surface: &SurfaceModel, omega: Complex64) -> Result<Complex64> {
    match *surface {
        SurfaceModel::ConstantEps { eps } => Ok(Complex64::new(eps, 0.0)),
        SurfaceModel::DrudeLorentz { omega0, omega_p, gamma } => {
            let i = Complex64::i();
            let denom = omega0 * omega0 - omega * omega - i * gamma * omega;
            Ok(1.0 + omega_p * omega_p / denom)
        }
        SurfaceModel::PerfectMirror | SurfaceModel::PlasmonDirect { .. } => Err(Error::NoPermittivity(surface.name())),
    }
}

/// Quasi-static p-polarised reflection coefficient (ε − 1)/(ε + 1).
pub fn rp_nonretarded(surface: &SurfaceModel, omega: Complex64) -> Complex64 {
    match *surface {
        SurfaceModel::PerfectMirror => Complex64::new(1.0, 0.0),
        SurfaceModel::PlasmonDirect { q, sign } => Complex64::new(sign.value() * q, 0.0),
        _ => {
            let eps = permittivity(surface, omega).expect("dielectric variants have a permittivity");
            (eps - 1.0) / (eps + 1.0)
        }
    }
}

/// Square root on the branch with Im ≥ 0 (decaying away from the interface).
pub(crate) fn kz_branch(x: Complex64) -> Complex64 {
    let r = x.sqrt();
    if r.im < 0.0 {
        -r
    } else {
        r
    }
}

/// Fresnel coefficients parametrised by the vacuum-side perpendicular
/// wavevector `kz`, at fixed `k0² = ω²/c²`.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Reflector {
    Mirror,
    Medium { eps: Complex64, k0sq: Complex64 },
}

impl Reflector {
    pub(crate) fn new(surface: &SurfaceModel, omega: Complex64) -> Result<Self> {
        match surface {
            SurfaceModel::PerfectMirror => Ok(Reflector::Mirror),
            SurfaceModel::PlasmonDirect { .. } => Err(Error::RetardedUndefined(surface.name())),
            _ => {
                let eps = permittivity(surface, omega)?;
                let k0 = omega / C;
                Ok(Reflector::Medium { eps, k0sq: k0 * k0 })
            }
        }
    }

    /// (r_s, r_p) at vacuum-side perpendicular wavevector `kz`.
    ///
    /// Numerators are written as differences of squares so that r_s stays
    /// accurate deep in the evanescent sector and both vanish exactly at ε = 1.
    pub(crate) fn at_kz(&self, kz: Complex64) -> (Complex64, Complex64) {
        match *self {
            Reflector::Mirror => (Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)),
            Reflector::Medium { eps, k0sq } => {
                let em1 = eps - 1.0;
                let kz1 = kz_branch(em1 * k0sq + kz * kz);
                let ds = kz + kz1;
                let dp = eps * kz + kz1;
                let rs = -em1 * k0sq / (ds * ds);
                let rp = em1 * ((eps + 1.0) * kz * kz - k0sq) / (dp * dp);
                (rs, rp)
            }
        }
    }
}

/// Half-space Fresnel coefficients (r_s, r_p) at in-plane wavevector `k_parallel`.
pub fn fresnel(surface: &SurfaceModel, omega: Complex64, k_parallel: f64) -> Result<(Complex64, Complex64)> {
    if !(k_parallel >= 0.0) {
        return Err(Error::invalid(format!("k_parallel must be >= 0, got {k_parallel}")));
    }
    let refl = Reflector::new(surface, omega)?;
    let k0 = omega / C;
    let kz = kz_branch(k0 * k0 - k_parallel * k_parallel);
    Ok(refl.at_kz(kz))
}

/// Plasmonic quality factor ω_S / 2γ with ω_S = sqrt(ω_0² + ω_P²/2).
pub fn quality_factor(surface: &SurfaceModel) -> Result<f64> {
    match *surface {
        SurfaceModel::DrudeLorentz { omega0, omega_p, gamma } => {
            Ok(surface_plasmon_frequency(omega0, omega_p) / (2.0 * gamma))
        }
        _ => Err(Error::QualityFactorUndefined(surface.name())),
    }
}

pub fn surface_plasmon_frequency(omega0: f64, omega_p: f64) -> f64 {
    (omega0 * omega0 + 0.5 * omega_p * omega_p).sqrt()
}
