//! Build a scenario from TOML text and evaluate it at a few heights.

use casimir_lcp::ScenarioConfig;

const SCENARIO: &str = r#"
[atom]
omega10 = 2.37e15
dipole = 2.53e-29

[surface]
model = "drude_lorentz"
omega0 = 2.0e15
omega_p = 2.0e15
gamma = 2.041241452319315e13

[laser]
detuning = 6.283185307179586e8
theta = 1.5707963267948966
field = "evanescent"
c0 = 4.51e-23
power = 39e-6
z0 = 430e-9

[sweep]
mode = "full"
"#;

fn main() {
    let cfg = ScenarioConfig::parse(SCENARIO).unwrap();
    let s = cfg.scenario().unwrap();
    println!("surface C3 = {:e} J m^3", s.c3());
    for z in [50e-9, 200e-9, 1e-6] {
        let u = s.components(z).unwrap();
        println!(
            "z = {:6.0} nm: U_CP = {:+.4e}  U_L = {:+.4e}  U_LCP = {:+.4e}",
            z * 1e9,
            u.u_cp,
            u.u_l,
            u.u_lcp
        );
    }
    print!("{}", cfg.to_toml().unwrap());
}
