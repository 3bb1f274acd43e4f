//! Permittivity and reflection of the supported surface models.

use casimir_lcp::material::{fresnel, permittivity, quality_factor, rp_nonretarded, surface_plasmon_frequency};
use casimir_lcp::SurfaceModel;
use num_complex::Complex64;

fn main() {
    let glass = SurfaceModel::constant_eps(1.512f64.powi(2)).unwrap();
    let w = Complex64::new(2.37e15, 0.0);
    println!(
        "glass: eps = {}, quasi-static r_p = {:.4}",
        permittivity(&glass, w).unwrap(),
        rp_nonretarded(&glass, w).re
    );

    let (rs, rp) = fresnel(&glass, w, 0.5 * 2.37e15 / 299_792_458.0).unwrap();
    println!("glass at half the light cone: r_s = {rs:.4}, r_p = {rp:.4}");

    // A resonance tuned so Q = 60.
    let (w0, wp) = (2.0e15, 2.0e15);
    let ws = surface_plasmon_frequency(w0, wp);
    let metal = SurfaceModel::drude_lorentz(w0, wp, ws / 120.0).unwrap();
    println!(
        "Drude-Lorentz: w_S = {ws:e} rad/s, Q = {:.2}",
        quality_factor(&metal).unwrap()
    );
    for dw in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let omega = ws + dw * ws / 120.0;
        let rp = rp_nonretarded(&metal, Complex64::new(omega, 0.0));
        println!(
            "  w - w_S = {dw:+.1} gamma: Re r_p = {:+8.3}, Im r_p = {:+8.3}",
            rp.re, rp.im
        );
    }
    for xi in [1e13, 1e15, 1e17] {
        let eps = permittivity(&metal, Complex64::new(0.0, xi)).unwrap();
        println!("  eps(i {xi:e}) = {:.6}", eps.re);
    }
}
