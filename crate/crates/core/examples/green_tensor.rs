//! Scattering Green's tensor: quadrature against the image solution.

use casimir_lcp::greens::{
    perfect_mirror_imag, perfect_mirror_real, scattering_green_nonretarded, scattering_green_real,
};
use casimir_lcp::{QuadratureConfig, SurfaceModel};
use num_complex::Complex64;

fn main() {
    let q = QuadratureConfig::default();
    let w = 2.37e15;
    let metal = SurfaceModel::constant_eps(1e8).unwrap();
    println!("{:>10} {:>24} {:>24}", "z [m]", "G_xx (eps = 1e8)", "G_xx (mirror)");
    for z in [10e-9, 100e-9, 1e-6] {
        let g = scattering_green_real(&metal, z, w, &q).unwrap();
        let m = perfect_mirror_real(z, w);
        println!("{z:>10.1e} {:>24.6e} {:>24.6e}", g.gxx, m.gxx);
    }
    let im = perfect_mirror_imag(100e-9, w);
    println!("imaginary axis, 100 nm: G_xx = {:e}, G_zz = {:e}", im.gxx.re, im.gzz.re);

    let glass = SurfaceModel::constant_eps(2.286).unwrap();
    let z = 0.01 * 299_792_458.0 / w;
    let full = scattering_green_real(&glass, z, w, &q).unwrap();
    let image = scattering_green_nonretarded(Complex64::new(1.286 / 3.286, 0.0), z, w);
    println!(
        "glass at w z/c = 0.01: Re G_zz ratio to image form = {:.5}",
        full.gzz.re / image.gzz.re
    );
}
