// Attractors and basins of the 9-node network under the parallel schedule
// and one block-sequential schedule.

use boolnet::dynamics::find_attractors;
use boolnet::network::bundled;
use boolnet::UpdateSchedule;

pub fn run_example() -> boolnet::Result<()> {
    let net = bundled::net09();
    let schedules = [
        UpdateSchedule::parallel(&net.dynamic_nodes()),
        "(p53, p53_A, p53_K)(miR_145, Sp1, MALAT1, BMI1, KLF4, E2F1)".parse()?,
    ];
    for schedule in &schedules {
        let report = find_attractors(&net, schedule, 28)?;
        println!("{schedule}");
        for a in &report.attractors {
            let states: Vec<String> = a.states.iter().map(|s| s.to_string()).collect();
            println!(
                "  {:?} {:<22} basin {:>3} ({:.2}%)",
                a.kind,
                states.join(" "),
                a.basin,
                a.basin_percent
            );
        }
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
