// State transition graph in DOT and per-state basin labels for a small
// network.

use boolnet::dynamics::{basin_csv, export_stg};
use boolnet::{Network, UpdateSchedule};

pub fn run_example() -> boolnet::Result<()> {
    let net = Network::from_text("example", "targets, factors\nA, C\nB, C\nC, A & B\n")?;
    let schedule: UpdateSchedule = "(A)(C)(B)".parse()?;
    print!("{}", export_stg(&net, &schedule)?);
    print!("{}", basin_csv(&net, &schedule, 28)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
