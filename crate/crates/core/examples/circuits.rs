// Signed elementary circuits of the 9-node network.

use boolnet::network::{bundled, enumerate_circuits, InteractionDigraph};

pub fn run_example() -> boolnet::Result<()> {
    let g = InteractionDigraph::from_network(&bundled::net09());
    let circuits = enumerate_circuits(&g, usize::MAX);
    for c in &circuits {
        println!("{c}");
    }
    let negative = circuits.iter().filter(|c| c.is_negative()).count();
    println!("{} circuits, {negative} negative", circuits.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
