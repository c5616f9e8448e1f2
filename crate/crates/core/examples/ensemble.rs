// Attractor statistics of the 9-node network over all representative
// schedules.

use boolnet::ensemble::{analyze_ensemble, EnsembleOptions};
use boolnet::network::bundled;

pub fn run_example() -> boolnet::Result<()> {
    let stats = analyze_ensemble(&bundled::net09(), &EnsembleOptions::default())?;
    println!(
        "{} schedules, {} with fixed points only ({:.2}%)",
        stats.total_schedules, stats.steady_only, stats.steady_only_percent
    );
    println!("cycles per schedule: {:?}", stats.cycle_histogram);
    print!("{}", stats.steady_csv());
    for c in stats.cycles.iter().take(3) {
        println!(
            "{:?} mean {:.2} sd {:.2} in {} schedules",
            c.configuration, c.mean_basin, c.sd_basin, c.count
        );
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
