use std::fmt::Write as _;

use super::{basin_labels, State, Stepper};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::schedule::UpdateSchedule;

/// Largest width for which a state transition graph is drawn.
pub const MAX_STG_WIDTH: usize = 16;

/// State transition graph in DOT: one vertex per state, one arc per transition.
pub fn export_stg(net: &Network, schedule: &UpdateSchedule) -> Result<String> {
    let width = net.width();
    if width > MAX_STG_WIDTH {
        return Err(Error::WidthGuard {
            width,
            max: MAX_STG_WIDTH,
        });
    }
    let stepper = Stepper::new(net, schedule)?;
    let mut dot = String::new();
    writeln!(dot, "digraph \"{}\" {{", net.name().replace('"', "'")).unwrap();
    writeln!(dot, "  label=\"{} {}\";", net.name(), schedule).unwrap();
    writeln!(dot, "  node [shape=box, fontname=monospace];").unwrap();
    for code in 0..1u64 << width {
        writeln!(dot, "  s{code} [label=\"{}\"];", State::new(code, width)).unwrap();
    }
    for code in 0..1u64 << width {
        writeln!(dot, "  s{code} -> s{};", stepper.step(code)).unwrap();
    }
    dot.push_str("}\n");
    Ok(dot)
}

/// Basin membership as CSV rows `state,attractor_id`; ids index the
/// attractors in report order.
pub fn basin_csv(net: &Network, schedule: &UpdateSchedule, max_width: usize) -> Result<String> {
    let stepper = Stepper::new(net, schedule)?;
    let (_, labels) = basin_labels(&stepper, max_width)?;
    let width = stepper.width();
    let mut out = String::with_capacity(labels.len() * (width + 4));
    out.push_str("state,attractor_id\n");
    for (code, id) in labels.iter().enumerate() {
        writeln!(out, "{},{id}", State::new(code as u64, width)).unwrap();
    }
    Ok(out)
}
