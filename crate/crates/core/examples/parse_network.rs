// Parses a rule file, pins an input and prints the signed interaction
// digraph.

use boolnet::network::InteractionDigraph;
use boolnet::{Expr, Network};

const RULES: &str = "\
targets, factors
Input, Input
A, Input & !C
B, A | (B & !Input)
C, A & B
";

pub fn run_example() -> boolnet::Result<()> {
    let net = Network::from_text("toy", RULES)?;
    println!("{} nodes: {:?}", net.len(), net.nodes());

    let pinned = net.pin("Input", true)?;
    println!("pinned Input=1, state width {}", pinned.width());

    let g = InteractionDigraph::from_network(&pinned);
    for k in 0..g.arc_count() {
        println!("  arc {}", g.arc_name(k));
    }

    let rule = Expr::parse("!(A & B) | C")?;
    println!("parsed rule: {rule}, depends on {:?}", rule.dependencies());
    print!("{}", pinned.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
