// Searches replacement rules that remove the limit cycle of the 9-node
// network while keeping its fixed points.

use boolnet::fitting::{fit_rules, parallel_fixed_points, FitOptions};
use boolnet::network::bundled;

pub fn run_example() -> boolnet::Result<()> {
    let net = bundled::net09();
    let desired = parallel_fixed_points(&net, 28)?;
    let fit = fit_rules(
        &net,
        Some(&["BMI1", "p53"]),
        &desired,
        &FitOptions::default(),
    )?;
    for t in &fit.targets {
        println!(
            "{}: {} candidates, {} keep the fixed points, {} also drop the cycle",
            t.target, t.generated, t.local_passed, t.global_passed
        );
    }
    for c in fit.passing() {
        println!("  {} <- {}", c.target, c.expression);
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
