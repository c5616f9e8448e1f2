//! Checks that a reduced network keeps the attractors of a larger one.
//!
//! Both networks are analyzed under the parallel schedule, after pinning.
//! Every attractor is projected onto the dynamic nodes the two networks
//! share (by name). Projection can shorten a cycle whose states differ only
//! on removed nodes; such a cycle is reduced to its smallest period and
//! flagged as collapsed. The comparison is on projected states; basins are
//! reported but not compared.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::dynamics::{analyze, Attractor, State, Stepper};
use crate::error::{Error, Result};
use crate::network::Network;

#[derive(Debug, Clone, Copy)]
pub struct ReductionOptions {
    /// Cycles of the large network without a counterpart do not count as a
    /// mismatch.
    pub allow_extra_cycles_in_large: bool,
    pub max_width: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            allow_extra_cycles_in_large: false,
            max_width: crate::dynamics::max_width_from_env(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectedAttractor {
    /// States over the network's own dynamic nodes.
    pub states: Vec<String>,
    /// Canonical projection onto the shared nodes.
    pub projected: Vec<String>,
    pub collapsed: bool,
    pub basin: u64,
    pub basin_percent: f64,
    /// Indices of the attractors of the other network with the same
    /// projection.
    pub matches: Vec<usize>,
}

impl ProjectedAttractor {
    pub fn is_fixed_point(&self) -> bool {
        self.projected.len() == 1
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionCheck {
    pub large: String,
    pub small: String,
    pub shared_nodes: Vec<String>,
    pub pins: BTreeMap<String, u8>,
    pub allow_extra_cycles_in_large: bool,
    pub large_attractors: Vec<ProjectedAttractor>,
    pub small_attractors: Vec<ProjectedAttractor>,
    pub fixed_points_match: bool,
    pub cycles_match: bool,
    pub extra_cycles_in_large: usize,
    pub matches: bool,
}

impl ReductionCheck {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reduction check serializes")
    }
}

fn apply_pins(net: &Network, pins: &BTreeMap<String, bool>) -> Result<Network> {
    let mut out = net.clone();
    for (node, &v) in pins {
        if out.index_of(node).is_some() {
            out = out.pin(node, v)?;
        }
    }
    Ok(out)
}

/// Projects a cycle onto `positions` (bit positions in the source state) and
/// reduces it to its smallest period in canonical rotation.
fn project(a: &Attractor, width: usize, positions: &[usize]) -> (Vec<u64>, bool) {
    let k = positions.len();
    let seq: Vec<u64> = a
        .states()
        .iter()
        .map(|&s| {
            positions.iter().enumerate().fold(0u64, |acc, (q, &p)| {
                acc | ((s >> (width - 1 - p)) & 1) << (k - 1 - q)
            })
        })
        .collect();
    let n = seq.len();
    let period = (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| seq[i] == seq[(i + p) % n]))
        .unwrap();
    let reduced = Attractor::new(seq[..period].to_vec(), 0);
    (reduced.states().to_vec(), period < n)
}

struct Side {
    width: usize,
    attractors: Vec<Attractor>,
    projected: Vec<(Vec<u64>, bool)>,
}

fn side(net: &Network, shared: &[String], max_width: usize) -> Result<Side> {
    let stepper = Stepper::parallel(net)?;
    let width = stepper.width();
    let attractors = analyze(&stepper, max_width)?;
    let positions: Vec<usize> = shared
        .iter()
        .map(|s| stepper.nodes().iter().position(|n| n == s).unwrap())
        .collect();
    let projected = attractors
        .iter()
        .map(|a| project(a, width, &positions))
        .collect();
    Ok(Side {
        width,
        attractors,
        projected,
    })
}

fn report(this: &Side, other: &Side, k: usize) -> Vec<ProjectedAttractor> {
    let total = 1u64 << this.width;
    this.attractors
        .iter()
        .zip(&this.projected)
        .map(|(a, (p, collapsed))| ProjectedAttractor {
            states: a.bitstrings(this.width),
            projected: p.iter().map(|&c| State::new(c, k).to_string()).collect(),
            collapsed: *collapsed,
            basin: a.basin(),
            basin_percent: a.basin() as f64 * 100.0 / total as f64,
            matches: other
                .projected
                .iter()
                .enumerate()
                .filter(|(_, (q, _))| q == p)
                .map(|(j, _)| j)
                .collect(),
        })
        .collect()
}

/// Compares the parallel attractors of `large` and `small` on their shared
/// dynamic nodes. `pins` apply to every network that has the node.
pub fn verify_reduction(
    large: &Network,
    small: &Network,
    pins: &BTreeMap<String, bool>,
    options: &ReductionOptions,
) -> Result<ReductionCheck> {
    let large_p = apply_pins(large, pins)?;
    let small_p = apply_pins(small, pins)?;
    for net in [&large_p, &small_p] {
        if net.width() > options.max_width {
            return Err(Error::WidthGuard {
                width: net.width(),
                max: options.max_width,
            });
        }
    }
    let large_nodes: BTreeSet<&str> = large_p.dynamic_nodes().into_iter().collect();
    let shared: Vec<String> = small_p
        .dynamic_nodes()
        .into_iter()
        .filter(|n| large_nodes.contains(n))
        .map(str::to_string)
        .collect();
    if shared.is_empty() {
        return Err(Error::InvalidNetwork(
            "the networks share no dynamic nodes".into(),
        ));
    }
    let (l, s) = rayon::join(
        || side(&large_p, &shared, options.max_width),
        || side(&small_p, &shared, options.max_width),
    );
    let (l, s) = (l?, s?);
    let k = shared.len();
    let large_attractors = report(&l, &s, k);
    let small_attractors = report(&s, &l, k);

    let set = |side: &Side, fixed: bool| -> BTreeSet<Vec<u64>> {
        side.projected
            .iter()
            .filter(|(p, _)| (p.len() == 1) == fixed)
            .map(|(p, _)| p.clone())
            .collect()
    };
    let fixed_points_match = set(&l, true) == set(&s, true);
    let (lc, sc) = (set(&l, false), set(&s, false));
    let extra = lc.difference(&sc).count();
    let cycles_match = if options.allow_extra_cycles_in_large {
        sc.is_subset(&lc)
    } else {
        lc == sc
    };
    Ok(ReductionCheck {
        large: large.name().to_string(),
        small: small.name().to_string(),
        shared_nodes: shared,
        pins: pins
            .iter()
            .map(|(n, &v)| (n.clone(), u8::from(v)))
            .collect(),
        allow_extra_cycles_in_large: options.allow_extra_cycles_in_large,
        large_attractors,
        small_attractors,
        fixed_points_match,
        cycles_match,
        extra_cycles_in_large: extra,
        matches: fixed_points_match && cycles_match,
    })
}
