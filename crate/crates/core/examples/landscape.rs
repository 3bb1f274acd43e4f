//! Potential landscape at 39 uW with and without the laser-induced term.

use casimir_lcp::analysis::{potential_curve, scenario_extrema};
use casimir_lcp::ScenarioConfig;

fn main() {
    let (scenario, plan) = ScenarioConfig::preset("fig3").unwrap().build().unwrap();
    let curve = potential_curve(&scenario, &plan).unwrap();
    println!(
        "{:>9} {:>12} {:>12} {:>12} {:>12}",
        "z [nm]", "U_CP", "U_L", "U_LCP", "U_tot"
    );
    for i in (0..curve.len()).step_by(64) {
        println!(
            "{:9.1} {:12.4e} {:12.4e} {:12.4e} {:12.4e}",
            curve.z_grid[i] * 1e9,
            curve.u_cp[i],
            curve.u_l[i],
            curve.u_lcp[i],
            curve.u_tot[i]
        );
    }
    for (label, s) in [
        ("with U_LCP", scenario.clone()),
        ("additive only", scenario.with_additive_only(true)),
    ] {
        let ext = scenario_extrema(&s, &plan).unwrap();
        println!("{label}: {} extrema", ext.len());
        for e in ext {
            println!("  {} at {:.2} nm, {:e} J", e.kind.as_str(), e.z_position * 1e9, e.value);
        }
    }
}
