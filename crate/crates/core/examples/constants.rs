//! Physical constants, Rb polarizability and the perfect-conductor C3.

use casimir_lcp::domain::{PhysicalConstants, HBAR};
use casimir_lcp::potentials::{c3_perfect_conductor, polarizability_two_level};
use casimir_lcp::AtomSpecies;

fn main() {
    let k = PhysicalConstants::CODATA2018;
    println!("hbar = {:e} J s, eps0 = {:e} F/m, c = {} m/s", k.hbar, k.eps0, k.c);
    println!("mu0 eps0 c^2 - 1 = {:e}", k.closure_residual());

    let rb = AtomSpecies::rubidium();
    let delta = 2.0 * std::f64::consts::PI * 1e8;
    println!("alpha_DC      = {:e} C^2 m^2/J", rb.alpha_dc());
    println!(
        "alpha(w_L)    = {:e} C^2 m^2/J",
        polarizability_two_level(&rb, delta).unwrap()
    );
    let c3 = c3_perfect_conductor(&rb);
    println!("C3            = {:e} J m^3", c3);
    println!("C3 / (hbar Delta) at 100 nm = {:.4}", c3 / 1e-21 / (HBAR * delta));
}
