//! Attractor statistics over every representative update schedule.
//!
//! Each representative schedule is analyzed exhaustively; attractors are
//! keyed by their canonical state sequence and aggregated across schedules.
//! Means and standard deviations of basin sizes are taken over the schedules
//! in which the attractor occurs. The primary standard deviation is the
//! population one (divide by the occurrence count); the sample one is
//! reported alongside.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{analyze, Attractor, State, Stepper};
use crate::error::{Error, Result};
use crate::network::{InteractionDigraph, Network};
use crate::schedule::{enumerate_representatives, UpdateSchedule};

#[derive(Debug, Clone, Copy)]
pub struct EnsembleOptions {
    pub max_labelings: u128,
    pub max_width: usize,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for EnsembleOptions {
    fn default() -> Self {
        EnsembleOptions {
            max_labelings: crate::schedule::DEFAULT_MAX_LABELINGS,
            max_width: crate::dynamics::max_width_from_env(),
            threads: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AttractorStats {
    /// Canonical states as bitstrings.
    pub configuration: Vec<String>,
    #[serde(skip)]
    pub codes: Vec<u64>,
    /// Number of schedules in which the attractor occurs.
    pub count: u64,
    pub mean_basin: f64,
    pub sd_basin: f64,
    /// Standard deviation with the `n - 1` denominator.
    pub sd_basin_sample: f64,
    /// Share of all cycle occurrences, for limit cycles only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub percent: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnsembleStats {
    pub network: String,
    pub width: usize,
    pub total_schedules: u64,
    pub steady_only: u64,
    pub steady_only_percent: f64,
    pub with_cycles: u64,
    /// Number of limit cycles in a schedule → number of such schedules.
    pub cycle_histogram: BTreeMap<usize, u64>,
    /// Cycle length → number of cycle occurrences.
    pub cycle_lengths: BTreeMap<usize, u64>,
    pub total_cycle_occurrences: u64,
    pub sd_definition: &'static str,
    pub fixed_points: Vec<AttractorStats>,
    pub cycles: Vec<AttractorStats>,
}

#[derive(Debug, Default, Clone, Copy)]
struct Acc {
    count: u64,
    sum: u128,
    sum_sq: u128,
}

impl Acc {
    fn add(&mut self, basin: u64) {
        self.count += 1;
        self.sum += basin as u128;
        self.sum_sq += (basin as u128) * (basin as u128);
    }

    /// Mean, population SD and sample SD.
    fn moments(&self) -> (f64, f64, f64) {
        let n = self.count as f64;
        let mean = self.sum as f64 / n;
        // exact integer numerator: n * sum_sq - sum^2
        let num = (self.count as u128 * self.sum_sq - self.sum * self.sum) as f64;
        let sample = if self.count > 1 {
            (num / (n * (n - 1.0))).sqrt()
        } else {
            0.0
        };
        (mean, (num / (n * n)).sqrt(), sample)
    }
}

/// Attractors of `net` under every schedule in `schedules`, in input order.
pub fn attractors_per_schedule(
    net: &Network,
    schedules: &[UpdateSchedule],
    options: &EnsembleOptions,
) -> Result<Vec<Vec<Attractor>>> {
    let run = || {
        schedules
            .par_iter()
            .map(|s| {
                let stepper = Stepper::new(net, s)?;
                analyze(&stepper, options.max_width)
            })
            .collect::<Result<Vec<_>>>()
    };
    match options.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Sweeps all representative schedules of `net` and aggregates attractors.
pub fn analyze_ensemble(net: &Network, options: &EnsembleOptions) -> Result<EnsembleStats> {
    let width = net.width();
    if width > options.max_width {
        return Err(Error::WidthGuard {
            width,
            max: options.max_width,
        });
    }
    let g = InteractionDigraph::from_network(net);
    let schedules: Vec<UpdateSchedule> = enumerate_representatives(&g, options.max_labelings)?
        .map(|(_, s)| s)
        .collect();
    let per_schedule = attractors_per_schedule(net, &schedules, options)?;
    Ok(aggregate(net.name(), width, &per_schedule))
}

/// Aggregates per-schedule attractor lists.
pub fn aggregate(network: &str, width: usize, per_schedule: &[Vec<Attractor>]) -> EnsembleStats {
    let mut fixed: HashMap<Vec<u64>, Acc> = HashMap::new();
    let mut cycles: HashMap<Vec<u64>, Acc> = HashMap::new();
    let mut histogram = BTreeMap::new();
    let mut lengths = BTreeMap::new();
    let mut steady_only = 0;
    for attractors in per_schedule {
        let mut n_cycles = 0;
        for a in attractors {
            let key = a.states().to_vec();
            if a.is_fixed_point() {
                fixed.entry(key).or_default().add(a.basin());
            } else {
                n_cycles += 1;
                *lengths.entry(a.len()).or_insert(0) += 1;
                cycles.entry(key).or_default().add(a.basin());
            }
        }
        if n_cycles == 0 {
            steady_only += 1;
        } else {
            *histogram.entry(n_cycles).or_insert(0u64) += 1;
        }
    }
    let total = per_schedule.len() as u64;
    let occurrences: u64 = cycles.values().map(|a| a.count).sum();
    let stats = |map: HashMap<Vec<u64>, Acc>, with_percent: bool| {
        let mut out: Vec<AttractorStats> = map
            .into_iter()
            .map(|(codes, acc)| {
                let (mean, sd, sample) = acc.moments();
                AttractorStats {
                    configuration: codes
                        .iter()
                        .map(|&c| State::new(c, width).to_string())
                        .collect(),
                    codes,
                    count: acc.count,
                    mean_basin: mean,
                    sd_basin: sd,
                    sd_basin_sample: sample,
                    percent: with_percent.then(|| acc.count as f64 * 100.0 / occurrences as f64),
                }
            })
            .collect();
        out.sort_by(|a, b| {
            b.count
                .cmp(&a.count)
                .then(b.mean_basin.total_cmp(&a.mean_basin))
                .then(a.codes.cmp(&b.codes))
        });
        out
    };
    EnsembleStats {
        network: network.to_string(),
        width,
        total_schedules: total,
        steady_only,
        steady_only_percent: if total == 0 {
            0.0
        } else {
            steady_only as f64 * 100.0 / total as f64
        },
        with_cycles: total - steady_only,
        cycle_histogram: histogram,
        cycle_lengths: lengths,
        total_cycle_occurrences: occurrences,
        sd_definition: "population",
        fixed_points: stats(fixed, false),
        cycles: stats(cycles, true),
    }
}

impl EnsembleStats {
    pub fn fixed_point(&self, bitstring: &str) -> Option<&AttractorStats> {
        self.fixed_points
            .iter()
            .find(|s| s.configuration.len() == 1 && s.configuration[0] == bitstring)
    }

    /// Looks up a cycle by its states in any order.
    pub fn cycle(&self, bitstrings: &[&str]) -> Option<&AttractorStats> {
        let mut wanted: Vec<&str> = bitstrings.to_vec();
        wanted.sort_unstable();
        self.cycles.iter().find(|s| {
            let mut have: Vec<&str> = s.configuration.iter().map(String::as_str).collect();
            have.sort_unstable();
            have == wanted
        })
    }

    /// Steady-state table: configuration, mean basin, SD, count.
    pub fn steady_csv(&self) -> String {
        let mut out = String::from("configuration,mean_basin,sd,sd_sample,count\n");
        for s in &self.fixed_points {
            writeln!(
                out,
                "{},{:.2},{:.2},{:.2},{}",
                s.configuration[0], s.mean_basin, s.sd_basin, s.sd_basin_sample, s.count
            )
            .unwrap();
        }
        out
    }

    /// Limit-cycle table: configuration, mean basin, SD, count, percent.
    pub fn cycles_csv(&self) -> String {
        let mut out = String::from("configuration,mean_basin,sd,sd_sample,count,percent\n");
        for s in &self.cycles {
            writeln!(
                out,
                "\"{}\",{:.2},{:.2},{:.2},{},{:.2}",
                s.configuration.join(", "),
                s.mean_basin,
                s.sd_basin,
                s.sd_basin_sample,
                s.count,
                s.percent.unwrap_or(0.0)
            )
            .unwrap();
        }
        out
    }

    pub fn summary_json(&self) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            network: &'a str,
            width: usize,
            total_schedules: u64,
            steady_only: u64,
            steady_only_percent: f64,
            with_cycles: u64,
            cycle_histogram: &'a BTreeMap<usize, u64>,
            cycle_lengths: &'a BTreeMap<usize, u64>,
            total_cycle_occurrences: u64,
            distinct_fixed_points: usize,
            distinct_cycles: usize,
            sd_definition: &'a str,
        }
        serde_json::to_string_pretty(&Summary {
            network: &self.network,
            width: self.width,
            total_schedules: self.total_schedules,
            steady_only: self.steady_only,
            steady_only_percent: self.steady_only_percent,
            with_cycles: self.with_cycles,
            cycle_histogram: &self.cycle_histogram,
            cycle_lengths: &self.cycle_lengths,
            total_cycle_occurrences: self.total_cycle_occurrences,
            distinct_fixed_points: self.fixed_points.len(),
            distinct_cycles: self.cycles.len(),
            sd_definition: self.sd_definition,
        })
        .expect("summary serializes")
    }
}
