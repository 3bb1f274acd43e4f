//! The product-identity and oracle suite, including an injected fault.

use casimir_lcp::cli::run_checks;
use casimir_lcp::potentials::c3_perfect_conductor;
use casimir_lcp::{AtomSpecies, ScenarioConfig};

fn main() {
    let cfg = ScenarioConfig::preset("fig3").unwrap();
    for c in run_checks(&cfg).unwrap().checks {
        println!("{c}");
    }
    let mut bad = cfg;
    bad.potential.c3 = Some(2.0 * c3_perfect_conductor(&AtomSpecies::rubidium()));
    println!("with C3 doubled:");
    for c in run_checks(&bad).unwrap().checks.iter().take(1) {
        println!("{c}");
    }
}
