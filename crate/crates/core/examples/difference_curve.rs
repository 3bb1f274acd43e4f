//! U_CP - U_LCP above a perfect mirror under uniform illumination.

use casimir_lcp::analysis::delta_u;
use casimir_lcp::ScenarioConfig;

fn main() {
    let mut cfg = ScenarioConfig::preset("fig2").unwrap();
    cfg.sweep.z_points = 24;
    let (scenario, plan) = cfg.build().unwrap();
    println!("z [nm]     U_CP - U_LCP [J]");
    for (z, d) in delta_u(&scenario, &plan).unwrap() {
        println!("{:8.1}   {:+.6e}", z * 1e9, d);
    }
}
