//! Scattering part of the dyadic Green's tensor of a planar half-space,
//! evaluated at coincident points a height `z` above the interface.
//!
//! Convention: `G` solves `∇×∇×G − (ω/c)² G = δ(r − r′) 𝟙` and carries
//! units of 1/m. In the quasi-static limit
//! `G_xx = G_yy = c² r_p / (32π ω² z³)` and `G_zz = 2 G_xx`, which is the
//! form every potential in this crate is written against.
//!
//! In terms of the perpendicular vacuum wavevector `k_z = sqrt(k² − k∥²)`:
//!
//! ```text
//! G_xx = i/(8π) ∫ dk∥ (k∥/k_z) e^{2ik_z z} [r_s − (k_z²/k²) r_p]
//! G_zz = i/(4π) ∫ dk∥ (k∥³/(k² k_z)) e^{2ik_z z} r_p
//! ```
//!
//! Changing variables to `q = k_z` on the propagating sector and to
//! `κ = −i k_z` on the evanescent one absorbs the 1/k_z edge singularity
//! at k∥ = k; both pieces are then smooth on finite intervals.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::domain::C;
use crate::error::{Error, Result};
use crate::material::{Reflector, SurfaceModel};
use crate::quadrature::{integrate, QuadratureConfig, DAMPING_EFOLDS};

/// Diagonal of the coincident-point scattering tensor, 1/m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreensDiag {
    pub gxx: Complex64,
    pub gyy: Complex64,
    pub gzz: Complex64,
}

impl GreensDiag {
    pub fn zero() -> Self {
        Self::planar(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Tensor with the in-plane symmetry gxx = gyy.
    pub fn planar(parallel: Complex64, normal: Complex64) -> Self {
        Self {
            gxx: parallel,
            gyy: parallel,
            gzz: normal,
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.gxx + self.gyy + self.gzz
    }

    /// `ê·G·ê` for a unit vector at angle `theta` from the surface normal.
    pub fn projected(&self, theta: f64) -> Complex64 {
        let (s, c) = theta.sin_cos();
        self.gxx * (s * s) + self.gzz * (c * c)
    }

    pub fn components(&self) -> [Complex64; 3] {
        [self.gxx, self.gyy, self.gzz]
    }
}

fn check_height(z: f64) -> Result<()> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("atom-surface distance must be > 0, got {z}")))
    }
}

fn inner_config(quad: &QuadratureConfig, prefactor: f64) -> QuadratureConfig {
    QuadratureConfig {
        abs_tol: quad.abs_tol / prefactor.abs().max(f64::MIN_POSITIVE),
        ..*quad
    }
}

/// Real-frequency scattering tensor by Sommerfeld integration.
pub fn scattering_green_real(
    surface: &SurfaceModel,
    z: f64,
    omega: f64,
    quad: &QuadratureConfig,
) -> Result<GreensDiag> {
    check_height(z)?;
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::invalid(format!("omega must be > 0, got {omega}")));
    }
    let refl = Reflector::new(surface, Complex64::new(omega, 0.0))?;
    let k = omega / C;
    let k2 = k * k;
    let i = Complex64::i();
    let cfg = inner_config(quad, 1.0 / (8.0 * PI));

    // Propagating sector, q = k_z ∈ [0, k].
    let prop = integrate(
        |q| {
            let (rs, rp) = refl.at_kz(Complex64::new(q, 0.0));
            let phase = Complex64::from_polar(1.0, 2.0 * q * z);
            let t = q * q / k2;
            let xx = phase * (rs - rp * t);
            let zz = phase * rp * (1.0 - t);
            [xx.re, xx.im, zz.re, zz.im]
        },
        0.0,
        k,
        &cfg,
    )?;

    // Evanescent sector, κ = −i k_z ∈ [0, κ_max].
    let kappa_max = DAMPING_EFOLDS / (2.0 * z);
    let evan_f = |kappa: f64| {
        let (rs, rp) = refl.at_kz(Complex64::new(0.0, kappa));
        let damp = (-2.0 * kappa * z).exp();
        let t = kappa * kappa / k2;
        let xx = (rs + rp * t) * damp;
        let zz = rp * (1.0 + t) * damp;
        [xx.re, xx.im, zz.re, zz.im]
    };
    let mut evan = [0.0; 4];
    let breaks: Vec<f64> = if k < kappa_max {
        vec![0.0, k, kappa_max]
    } else {
        vec![0.0, kappa_max]
    };
    for w in breaks.windows(2) {
        let part = integrate(evan_f, w[0], w[1], &cfg)?;
        for (acc, v) in evan.iter_mut().zip(part.value) {
            *acc += v;
        }
    }

    let p_xx = Complex64::new(prop.value[0], prop.value[1]);
    let p_zz = Complex64::new(prop.value[2], prop.value[3]);
    let e_xx = Complex64::new(evan[0], evan[1]);
    let e_zz = Complex64::new(evan[2], evan[3]);
    let gxx = (i * p_xx + e_xx) / (8.0 * PI);
    let gzz = (i * p_zz + e_zz) / (4.0 * PI);
    Ok(GreensDiag::planar(gxx, gzz))
}

/// Scattering tensor at imaginary frequency iξ; all components are real.
pub fn scattering_green_imag(surface: &SurfaceModel, z: f64, xi: f64, quad: &QuadratureConfig) -> Result<GreensDiag> {
    check_height(z)?;
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::invalid(format!("xi must be > 0, got {xi}")));
    }
    let refl = Reflector::new(surface, Complex64::new(0.0, xi))?;
    let kxi = xi / C;
    // κ = kxi + s; the common factor e^{-2 kxi z} is pulled out.
    let s_max = DAMPING_EFOLDS / (2.0 * z);
    let cfg = inner_config(quad, 1.0 / (8.0 * PI));
    let est = integrate(
        |s| {
            let kappa = kxi + s;
            let (rs, rp) = refl.at_kz(Complex64::new(0.0, kappa));
            let damp = (-2.0 * s * z).exp();
            let t = (kappa / kxi) * (kappa / kxi);
            [(rs.re - t * rp.re) * damp, (t - 1.0) * rp.re * damp]
        },
        0.0,
        s_max,
        &cfg,
    )?;
    let common = (-2.0 * kxi * z).exp();
    let gxx = common * est.value[0] / (8.0 * PI);
    let gzz = -common * est.value[1] / (4.0 * PI);
    Ok(GreensDiag::planar(Complex64::new(gxx, 0.0), Complex64::new(gzz, 0.0)))
}

/// Quasi-static image tensor for a real frequency.
pub fn scattering_green_nonretarded(rp: Complex64, z: f64, omega: f64) -> GreensDiag {
    let gxx = rp * (C * C / (32.0 * PI * omega * omega * z.powi(3)));
    GreensDiag::planar(gxx, gxx * 2.0)
}

/// Quasi-static image tensor at imaginary frequency iξ (ω² = −ξ²).
pub fn scattering_green_nonretarded_imag(rp: Complex64, z: f64, xi: f64) -> GreensDiag {
    let gxx = -rp * (C * C / (32.0 * PI * xi * xi * z.powi(3)));
    GreensDiag::planar(gxx, gxx * 2.0)
}

/// Exact image-dipole tensor of a perfect mirror at real frequency.
pub fn perfect_mirror_real(z: f64, omega: f64) -> GreensDiag {
    let r = 2.0 * z;
    let u = omega * r / C;
    let i = Complex64::i();
    let pre = Complex64::from_polar(1.0, u) / (4.0 * PI * r);
    let gxx = -pre * (1.0 + i / u - 1.0 / (u * u));
    let gzz = pre * (-2.0 * i / u + 2.0 / (u * u));
    GreensDiag::planar(gxx, gzz)
}

/// Exact image-dipole tensor of a perfect mirror at imaginary frequency.
pub fn perfect_mirror_imag(z: f64, xi: f64) -> GreensDiag {
    let r = 2.0 * z;
    let v = xi * r / C;
    let pre = (-v).exp() / (4.0 * PI * r);
    let gxx = -pre * (1.0 + 1.0 / v + 1.0 / (v * v));
    let gzz = -2.0 * pre * (1.0 / v + 1.0 / (v * v));
    GreensDiag::planar(Complex64::new(gxx, 0.0), Complex64::new(gzz, 0.0))
}
