// Counts block-sequential schedules and lists one representative per
// equivalence class for a three-node network.

use boolnet::network::InteractionDigraph;
use boolnet::schedule::{count_schedules, enumerate_representatives, DEFAULT_MAX_LABELINGS};
use boolnet::Network;

pub fn run_example() -> boolnet::Result<()> {
    for n in 0..=6 {
        println!("T_{n} = {}", count_schedules(n));
    }

    let net = Network::from_text("example", "targets, factors\nA, C\nB, C\nC, A & B\n")?;
    let g = InteractionDigraph::from_network(&net);
    let arcs: Vec<String> = (0..g.arc_count()).map(|k| g.arc_name(k)).collect();
    println!("arcs: {}", arcs.join(", "));
    for (labeling, schedule) in enumerate_representatives(&g, DEFAULT_MAX_LABELINGS)? {
        println!("  {labeling}  {schedule}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
