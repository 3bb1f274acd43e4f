//! Extrema of the total potential against laser power.

use casimir_lcp::analysis::power_sweep;
use casimir_lcp::ScenarioConfig;

fn main() {
    let (scenario, plan) = ScenarioConfig::preset("fig4").unwrap().build().unwrap();
    let report = power_sweep(&scenario, &plan).unwrap();
    for r in &report.records {
        println!(
            "{:7.2} uW  {:7}  z = {:8.2} nm  U = {:+.4e} J",
            r.power * 1e6,
            r.kind.as_str(),
            r.z_position * 1e9,
            r.value
        );
    }
    match report.minimum_threshold() {
        Some(p) => println!("first minimum at P = {:.2} uW", p * 1e6),
        None => println!("no minimum in the sweep"),
    }

    let additive = power_sweep(&scenario.with_additive_only(true), &plan).unwrap();
    for p in [10e-6, 39e-6, 100e-6, 400e-6] {
        for r in additive.at_power(p) {
            println!("additive {:5.0} uW: barrier at {:.2} nm", p * 1e6, r.z_position * 1e9);
        }
    }
}
