//! Deterministic dynamics: stepping under a schedule and exhaustive attractor
//! analysis of the full state space.

mod attractors;
mod export;
mod state;
mod stepper;

use std::collections::BTreeMap;

use crate::error::Result;
use crate::network::Network;
use crate::schedule::UpdateSchedule;

pub use attractors::{
    analyze, basin_labels, find_attractors, find_parallel_attractors, max_width_from_env,
    Attractor, AttractorKind, AttractorReport, ReportedAttractor, DEFAULT_MAX_WIDTH,
};
pub use export::{basin_csv, export_stg, MAX_STG_WIDTH};
pub use state::State;
pub use stepper::Stepper;

/// One pass of `schedule` from state `s`.
pub fn step(net: &Network, s: State, schedule: &UpdateSchedule) -> Result<State> {
    let stepper = Stepper::new(net, schedule)?;
    Ok(State::new(stepper.step(s.code()), s.width()))
}

/// Values of the output nodes in state `s`.
pub fn phenotype_projection(net: &Network, s: State) -> BTreeMap<String, bool> {
    let dynamic = net.dynamic_nodes();
    net.output_indices()
        .map(|i| {
            let rule = net.effective_rule(i);
            let value = rule
                .evaluate_with(&|name| {
                    dynamic
                        .iter()
                        .position(|d| *d == name)
                        .map(|p| s.bit(p))
                        .or_else(|| net.pinned_value(name))
                })
                .expect("output rules only read state and pinned nodes");
            (net.nodes()[i].clone(), value)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Expr;
    use crate::network::bundled;

    fn example1() -> Network {
        Network::new(
            "example1",
            [
                ("A", Expr::parse("C").unwrap()),
                ("B", Expr::parse("C").unwrap()),
                ("C", Expr::parse("A & B").unwrap()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example1_steps() {
        let net = example1();
        let par = UpdateSchedule::parse("(A,B,C)").unwrap();
        let s = step(&net, State::parse("110").unwrap(), &par).unwrap();
        assert_eq!(s.to_string(), "001");
        let s9 = UpdateSchedule::parse("(A)(C)(B)").unwrap();
        let s = step(&net, State::parse("011").unwrap(), &s9).unwrap();
        assert_eq!(s.to_string(), "111");
    }

    #[test]
    fn fixed_point_is_stable() {
        let net = bundled::net09();
        let par = UpdateSchedule::parallel(&net.dynamic_nodes());
        let fp = State::parse("011110001").unwrap();
        assert_eq!(step(&net, fp, &par).unwrap(), fp);
    }

    #[test]
    fn phenotypes_of_zero_state() {
        let net = bundled::net29();
        let zero = State::new(0, net.width());
        let ph = phenotype_projection(&net, zero);
        // Proliferation = CDK2_CycE & !p53, Drug_Resistance = MALAT1 & RB,
        // Senescence = p21 & !CDK2_CycE, Apoptosis = Caspase3
        assert_eq!(
            ph.into_iter().collect::<Vec<_>>(),
            vec![
                ("Apoptosis".to_string(), false),
                ("Drug_Resistance".to_string(), false),
                ("Proliferation".to_string(), false),
                ("Senescence".to_string(), false),
            ]
        );
    }

    #[test]
    fn phenotypes_use_pinned_values() {
        let net = Network::from_text(
            "p",
            "#! outputs: Out\ntargets, factors\nIn, In\nX, In\nOut, In & X\n",
        )
        .unwrap()
        .pin("In", true)
        .unwrap();
        let ph = phenotype_projection(&net, State::parse("1").unwrap());
        assert!(ph["Out"]);
        let ph = phenotype_projection(&net, State::parse("0").unwrap());
        assert!(!ph["Out"]);
    }
}
