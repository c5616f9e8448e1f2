//! Reference implementations used as test oracles. Everything here works on
//! plain `Vec<bool>` states and `HashMap` assignments, independently of the
//! bit-sliced engine.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use boolnet::{Expr, Network, UpdateSchedule};
use proptest::prelude::*;
use proptest::sample::select;

pub fn bitstring(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn bits_of(code: u64, width: usize) -> Vec<bool> {
    (0..width)
        .map(|p| code >> (width - 1 - p) & 1 == 1)
        .collect()
}

/// One pass of `schedule` from `state`, reading the raw rules with pinned
/// values supplied through the assignment.
pub fn oracle_step(net: &Network, schedule: &UpdateSchedule, state: &[bool]) -> Vec<bool> {
    let dynamic: Vec<String> = net.dynamic_nodes().iter().map(|s| s.to_string()).collect();
    let mut env: HashMap<String, bool> =
        dynamic.iter().cloned().zip(state.iter().copied()).collect();
    for (node, v) in net.pinned() {
        env.insert(node.to_string(), v);
    }
    for block in schedule.blocks() {
        let fresh: Vec<(String, bool)> = block
            .iter()
            .map(|n| (n.clone(), net.rule(n).unwrap().evaluate(&env).unwrap()))
            .collect();
        env.extend(fresh);
    }
    dynamic.iter().map(|n| env[n]).collect()
}

/// Attractors as (canonical bitstring cycle, basin), sorted.
pub fn oracle_attractors(net: &Network, schedule: &UpdateSchedule) -> Vec<(Vec<String>, u64)> {
    let width = net.width();
    oracle_attractors_from(net, schedule, (0..1u64 << width).map(|c| bits_of(c, width)))
}

pub fn oracle_attractors_from(
    net: &Network,
    schedule: &UpdateSchedule,
    starts: impl Iterator<Item = Vec<bool>>,
) -> Vec<(Vec<String>, u64)> {
    let mut basins: BTreeMap<Vec<String>, u64> = BTreeMap::new();
    for start in starts {
        let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
        let mut path = Vec::new();
        let mut cur = start;
        while !seen.contains_key(&cur) {
            seen.insert(cur.clone(), path.len());
            path.push(cur.clone());
            cur = oracle_step(net, schedule, &cur);
        }
        let mut cycle: Vec<String> = path[seen[&cur]..].iter().map(|s| bitstring(s)).collect();
        let first = (0..cycle.len()).min_by_key(|&i| cycle[i].clone()).unwrap();
        cycle.rotate_left(first);
        *basins.entry(cycle).or_insert(0) += 1;
    }
    basins.into_iter().collect()
}

/// Library attractors in the oracle's shape.
pub fn engine_attractors(net: &Network, schedule: &UpdateSchedule) -> Vec<(Vec<String>, u64)> {
    let stepper = boolnet::dynamics::Stepper::new(net, schedule).unwrap();
    let mut out: Vec<(Vec<String>, u64)> = boolnet::dynamics::analyze(&stepper, 32)
        .unwrap()
        .iter()
        .map(|a| (a.bitstrings(stepper.width()), a.basin()))
        .collect();
    out.sort();
    out
}

/// Every ordered set partition of `n` items as a vector of 1-based levels.
pub fn ordered_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut levels = vec![0; n];
    fn rec(i: usize, levels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = levels.len();
        if i == n {
            let mut used: Vec<usize> = levels.clone();
            used.sort_unstable();
            used.dedup();
            if used.len() == *used.last().unwrap_or(&0) {
                out.push(levels.clone());
            }
            return;
        }
        for l in 1..=n {
            levels[i] = l;
            rec(i + 1, levels, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(0, &mut levels, &mut out);
    out
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub fn expr_strategy(names: Vec<String>) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        12 => select(names).prop_map(Expr::var),
        1 => any::<bool>().prop_map(Expr::Const),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::or(a, b)),
        ]
    })
}

/// Networks of 1 to `max_nodes` nodes named `x0, x1, ...`.
pub fn network_strategy(max_nodes: usize) -> impl Strategy<Value = Network> {
    (1..=max_nodes).prop_flat_map(|n| {
        proptest::collection::vec(expr_strategy(names(n)), n)
            .prop_map(move |rules| Network::new("random", names(n).into_iter().zip(rules)).unwrap())
    })
}

/// A network together with a random block-sequential schedule of its nodes.
pub fn network_and_schedule(max_nodes: usize) -> impl Strategy<Value = (Network, UpdateSchedule)> {
    network_strategy(max_nodes).prop_flat_map(|net| {
        let n = net.len();
        proptest::collection::vec(1..=n, n).prop_map(move |levels| {
            let s = UpdateSchedule::from_levels(&net.dynamic_nodes(), &levels);
            (net.clone(), s)
        })
    })
}

/// Deterministic draws from a strategy, for non-proptest suites.
pub fn sample<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    use proptest::strategy::ValueTree;
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).unwrap().current())
        .collect()
}
