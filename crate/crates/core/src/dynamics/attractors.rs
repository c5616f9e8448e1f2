//! Exhaustive attractor and basin computation.
//!
//! Every state has exactly one successor, so the state transition graph is a
//! functional graph: each weakly connected component holds a single cycle (the
//! attractor) with trees hanging into it (the basin). The traversal follows
//! each unvisited state's trajectory, marking states as "on the current path",
//! until it meets either its own path (a new attractor) or an already
//! labeled state (a known attractor), then labels the whole path. Every state
//! is stepped exactly once.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{phenotype_projection, State, Stepper};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::schedule::UpdateSchedule;

/// Default upper bound on the dynamic width for exhaustive analysis.
pub const DEFAULT_MAX_WIDTH: usize = 28;

/// Width guard, overridable through `BOOLNET_MAX_WIDTH`. Never above 32.
pub fn max_width_from_env() -> usize {
    std::env::var("BOOLNET_MAX_WIDTH")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .map_or(DEFAULT_MAX_WIDTH, |w| w.min(32))
}

/// A fixed point or limit cycle with its basin size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attractor {
    states: Vec<u64>,
    basin: u64,
}

impl Attractor {
    /// Builds an attractor from its states in dynamical order, rotating the
    /// cycle so that the smallest code comes first.
    pub fn new(mut states: Vec<u64>, basin: u64) -> Attractor {
        assert!(!states.is_empty());
        let first = states
            .iter()
            .enumerate()
            .min_by_key(|(_, &s)| s)
            .map(|(i, _)| i)
            .unwrap();
        states.rotate_left(first);
        Attractor { states, basin }
    }

    pub fn states(&self) -> &[u64] {
        &self.states
    }

    pub fn basin(&self) -> u64 {
        self.basin
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_fixed_point(&self) -> bool {
        self.states.len() == 1
    }

    pub fn kind(&self) -> AttractorKind {
        if self.is_fixed_point() {
            AttractorKind::FixedPoint
        } else {
            AttractorKind::LimitCycle
        }
    }

    /// Bitstrings of the states, canonical rotation.
    pub fn bitstrings(&self, width: usize) -> Vec<String> {
        self.states
            .iter()
            .map(|&s| State::new(s, width).to_string())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AttractorKind {
    FixedPoint,
    LimitCycle,
}

trait Mark: Copy + Send + Sync + Default {
    const LIMIT: u64;
    fn of(v: u64) -> Self;
    fn get(self) -> u64;
}

impl Mark for u8 {
    const LIMIT: u64 = u8::MAX as u64;
    fn of(v: u64) -> u8 {
        v as u8
    }
    fn get(self) -> u64 {
        self as u64
    }
}

impl Mark for u32 {
    const LIMIT: u64 = u32::MAX as u64;
    fn of(v: u64) -> u32 {
        v as u32
    }
    fn get(self) -> u64 {
        self as u64
    }
}

const UNSEEN: u64 = 0;
const ON_PATH: u64 = 1;

/// Path-following traversal; `None` if the attractor ids overflow `M`.
fn traverse<M: Mark>(succ: &[u32]) -> Option<(Vec<Attractor>, Vec<M>)> {
    let mut marks = vec![M::default(); succ.len()];
    let mut attractors: Vec<Attractor> = Vec::new();
    let mut path: Vec<u32> = Vec::new();
    for start in 0..succ.len() {
        if marks[start].get() != UNSEEN {
            continue;
        }
        path.clear();
        let mut cur = start;
        let id = loop {
            match marks[cur].get() {
                UNSEEN => {
                    marks[cur] = M::of(ON_PATH);
                    path.push(cur as u32);
                    cur = succ[cur] as usize;
                }
                ON_PATH => {
                    let at = path.iter().rposition(|&s| s as usize == cur).unwrap();
                    let id = attractors.len() as u64;
                    if id + 2 > M::LIMIT {
                        return None;
                    }
                    let states = path[at..].iter().map(|&s| s as u64).collect();
                    attractors.push(Attractor::new(states, 0));
                    break id;
                }
                label => break label - 2,
            }
        };
        let mark = M::of(id + 2);
        for &s in &path {
            marks[s as usize] = mark;
        }
        attractors[id as usize].basin += path.len() as u64;
    }
    Some((attractors, marks))
}

fn sort_key(a: &Attractor) -> (std::cmp::Reverse<u64>, bool, u64) {
    (std::cmp::Reverse(a.basin), !a.is_fixed_point(), a.states[0])
}

fn check_width(width: usize, max_width: usize) -> Result<()> {
    if width > max_width || width > 32 {
        return Err(Error::WidthGuard {
            width,
            max: max_width.min(32),
        });
    }
    Ok(())
}

/// All attractors of the compiled dynamics, sorted by descending basin, then
/// fixed points before cycles, then by first state code.
pub fn analyze(stepper: &Stepper, max_width: usize) -> Result<Vec<Attractor>> {
    check_width(stepper.width(), max_width)?;
    let succ = stepper.successor_table();
    let mut attractors = match traverse::<u8>(&succ) {
        Some((a, _)) => a,
        None => traverse::<u32>(&succ).expect("u32 marks suffice").0,
    };
    attractors.sort_by_key(sort_key);
    Ok(attractors)
}

/// Attractors (sorted as in [`analyze`]) and the index of the attractor
/// reached from every state.
pub fn basin_labels(stepper: &Stepper, max_width: usize) -> Result<(Vec<Attractor>, Vec<u32>)> {
    check_width(stepper.width(), max_width)?;
    let succ = stepper.successor_table();
    let (attractors, marks) = traverse::<u32>(&succ).expect("u32 marks suffice");
    drop(succ);
    let mut order: Vec<usize> = (0..attractors.len()).collect();
    order.sort_by_key(|&i| sort_key(&attractors[i]));
    let mut rank = vec![0u32; attractors.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r as u32;
    }
    let labels = marks.into_iter().map(|m| rank[m as usize - 2]).collect();
    let sorted = order.into_iter().map(|i| attractors[i].clone()).collect();
    Ok((sorted, labels))
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportedAttractor {
    pub kind: AttractorKind,
    pub length: usize,
    pub states: Vec<State>,
    pub basin: u64,
    pub basin_percent: f64,
    /// Output-node values for each state of the attractor.
    pub phenotypes: Vec<BTreeMap<String, u8>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AttractorReport {
    pub network: String,
    pub schedule: UpdateSchedule,
    pub nodes: Vec<String>,
    pub pinned: BTreeMap<String, u8>,
    pub outputs: Vec<String>,
    pub width: usize,
    pub total_states: u64,
    pub attractors: Vec<ReportedAttractor>,
}

impl AttractorReport {
    pub fn fixed_points(&self) -> impl Iterator<Item = &ReportedAttractor> {
        self.attractors
            .iter()
            .filter(|a| a.kind == AttractorKind::FixedPoint)
    }

    pub fn limit_cycles(&self) -> impl Iterator<Item = &ReportedAttractor> {
        self.attractors
            .iter()
            .filter(|a| a.kind == AttractorKind::LimitCycle)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub(crate) fn report_from(
    net: &Network,
    schedule: &UpdateSchedule,
    width: usize,
    attractors: &[Attractor],
) -> AttractorReport {
    let total = 1u64 << width;
    let reported = attractors
        .iter()
        .map(|a| {
            let states: Vec<State> = a.states().iter().map(|&s| State::new(s, width)).collect();
            let phenotypes = states
                .iter()
                .map(|&s| {
                    phenotype_projection(net, s)
                        .into_iter()
                        .map(|(k, v)| (k, u8::from(v)))
                        .collect()
                })
                .collect();
            ReportedAttractor {
                kind: a.kind(),
                length: a.len(),
                states,
                basin: a.basin(),
                basin_percent: a.basin() as f64 * 100.0 / total as f64,
                phenotypes,
            }
        })
        .collect();
    AttractorReport {
        network: net.name().to_string(),
        schedule: schedule.clone(),
        nodes: net.dynamic_nodes().iter().map(|s| s.to_string()).collect(),
        pinned: net
            .pinned()
            .map(|(n, v)| (n.to_string(), u8::from(v)))
            .collect(),
        outputs: net.outputs().map(str::to_string).collect(),
        width,
        total_states: total,
        attractors: reported,
    }
}

/// Exhaustive attractor report of `net` under `schedule`.
pub fn find_attractors(
    net: &Network,
    schedule: &UpdateSchedule,
    max_width: usize,
) -> Result<AttractorReport> {
    check_width(net.width(), max_width)?;
    let stepper = Stepper::new(net, schedule)?;
    let attractors = analyze(&stepper, max_width)?;
    Ok(report_from(net, schedule, stepper.width(), &attractors))
}

/// [`find_attractors`] under the parallel schedule.
pub fn find_parallel_attractors(net: &Network, max_width: usize) -> Result<AttractorReport> {
    find_attractors(
        net,
        &UpdateSchedule::parallel(&net.dynamic_nodes()),
        max_width,
    )
}
