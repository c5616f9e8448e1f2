// Checks that the 9-node network keeps the attractors of the 14-node one.

use std::collections::BTreeMap;

use boolnet::network::bundled;
use boolnet::reduction::{verify_reduction, ReductionOptions};

pub fn run_example() -> boolnet::Result<()> {
    let check = verify_reduction(
        &bundled::net14(),
        &bundled::net09(),
        &BTreeMap::new(),
        &ReductionOptions::default(),
    )?;
    println!("shared nodes: {}", check.shared_nodes.join(", "));
    for a in &check.large_attractors {
        println!(
            "  {:<32} -> {:<22} matches {:?}",
            a.states.join(" "),
            a.projected.join(" "),
            a.matches
        );
    }
    println!(
        "fixed points match: {}, cycles match: {}",
        check.fixed_points_match, check.cycles_match
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
