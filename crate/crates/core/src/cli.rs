//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 guard exceeded,
//! 3 reduction mismatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dynamics::{
    basin_csv, export_stg, find_attractors, max_width_from_env, AttractorKind, AttractorReport,
};
use crate::ensemble::{analyze_ensemble, EnsembleOptions};
use crate::error::{Error, Result};
use crate::fitting::{fit_rules, parallel_fixed_points, FitOptions};
use crate::network::{bundled, enumerate_circuits, parse_pin, InteractionDigraph, Network};
use crate::reduction::{verify_reduction, ReductionOptions};
use crate::schedule::{count_schedules, enumerate_representatives, UpdateSchedule};

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "boolnet",
    version,
    about = "Exhaustive dynamics of Boolean regulatory networks"
)]
pub struct RunConfig {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// Largest dynamic width analyzed exhaustively (default: BOOLNET_MAX_WIDTH or 28).
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(1..=32))]
    pub max_width: Option<u8>,
    /// Largest number of non-loop arcs for schedule enumeration (2^N labelings).
    #[arg(long, global = true, default_value_t = 26, value_parser = clap::value_parser!(u8).range(1..=100))]
    pub max_arcs: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct NetArgs {
    /// Rule file path or bundled network name (see `nets list`).
    pub net: String,
    /// Clamp a node, e.g. `--pin DNA_Damage=1`. Repeatable.
    #[arg(long = "pin", value_name = "NODE=V")]
    pub pins: Vec<String>,
    /// Treat declared outputs as ordinary dynamic nodes.
    #[arg(long, conflicts_with = "detect_outputs")]
    pub include_outputs: bool,
    /// Declare every node with no outgoing arcs an output.
    #[arg(long)]
    pub detect_outputs: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Attractors and basins of a network under one schedule.
    Attractors {
        #[command(flatten)]
        net: NetArgs,
        /// Block-sequential schedule such as "(A)(B,C)"; parallel by default.
        #[arg(long)]
        schedule: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Attractor reached from every state, as CSV.
    Basins {
        #[command(flatten)]
        net: NetArgs,
        #[arg(long)]
        schedule: Option<String>,
        /// Output CSV file.
        #[arg(long)]
        csv: PathBuf,
    },
    /// State transition graph in DOT.
    Stg {
        #[command(flatten)]
        net: NetArgs,
        #[arg(long)]
        schedule: Option<String>,
        /// Output DOT file.
        #[arg(long)]
        dot: PathBuf,
    },
    /// Update-schedule counting and equivalence classes.
    Schedules {
        #[command(subcommand)]
        command: SchedulesCommand,
    },
    /// Attractor statistics over all representative schedules.
    Ensemble {
        #[command(flatten)]
        net: NetArgs,
        /// Directory for summary.json, steady.csv and cycles.csv.
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Search alternative rules keeping exactly the current fixed points.
    Fit {
        #[command(flatten)]
        net: NetArgs,
        /// Comma-separated target nodes (default: all dynamic nodes).
        #[arg(long, value_delimiter = ',')]
        targets: Vec<String>,
        /// Largest number of regulators per candidate rule.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
        max_regulators: u8,
        /// Compare fixed-point sets only in the global check.
        #[arg(long)]
        fixed_points_only: bool,
        /// JSON file with every candidate and its verdicts.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that SMALL keeps the attractors of LARGE on shared nodes.
    VerifyReduction {
        /// Larger network (file or bundled name).
        large: String,
        /// Reduced network (file or bundled name).
        small: String,
        /// Clamp a node in whichever networks have it. Repeatable.
        #[arg(long = "pin", value_name = "NODE=V")]
        pins: Vec<String>,
        /// Cycles of LARGE without a counterpart in SMALL are not a mismatch.
        #[arg(long)]
        allow_extra_cycles_in_large: bool,
        /// Write the full comparison as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Elementary circuits of the signed interaction digraph.
    Circuits {
        #[command(flatten)]
        net: NetArgs,
        /// Longest circuit (default: number of nodes).
        #[arg(long)]
        max_len: Option<usize>,
        /// Only circuits with an odd number of inhibitions.
        #[arg(long)]
        negative_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Bundled networks.
    Nets {
        #[command(subcommand)]
        command: NetsCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchedulesCommand {
    /// Number of block-sequential schedules on N nodes.
    Count { n: usize },
    /// One representative schedule per equivalence class, as CSV.
    Enumerate {
        #[command(flatten)]
        net: NetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Arc labeling of every class, one column per arc, as CSV.
    Classes {
        #[command(flatten)]
        net: NetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum NetsCommand {
    List,
    /// Print the rule file of a bundled network.
    Show {
        name: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    if let Some(n) = config.threads {
        // fails only if the global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global();
    }
    let mut out = String::new();
    let result = execute(&config, &mut out);
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_guard() {
                EXIT_GUARD
            } else {
                EXIT_USAGE
            }
        }
    }
}

impl RunConfig {
    fn max_width(&self) -> usize {
        self.max_width.map_or_else(max_width_from_env, usize::from)
    }

    fn max_labelings(&self) -> u128 {
        1u128 << self.max_arcs
    }
}

/// Resolves a file path or bundled name.
pub fn load_network(spec: &str) -> Result<Network> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{spec}: {e}")))?;
        let name = path
            .file_stem()
            .map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into_owned());
        return Network::from_text(name, &text);
    }
    bundled::get(spec).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "{spec} is neither a file nor a bundled network ({})",
            bundled::NAMES.join(", ")
        ))
    })
}

fn parse_pins(pins: &[String]) -> Result<BTreeMap<String, bool>> {
    pins.iter().map(|p| parse_pin(p)).collect()
}

fn prepare(args: &NetArgs) -> Result<Network> {
    let mut net = load_network(&args.net)?;
    if args.include_outputs {
        net = net.without_outputs();
    } else if args.detect_outputs {
        net = net.with_terminal_outputs();
    }
    for (node, v) in parse_pins(&args.pins)? {
        net = net.pin(&node, v)?;
    }
    Ok(net)
}

fn schedule_for(net: &Network, text: Option<&str>) -> Result<UpdateSchedule> {
    match text {
        Some(t) => UpdateSchedule::parse(t),
        None => Ok(UpdateSchedule::parallel(&net.dynamic_nodes())),
    }
}

/// Writes `text` to `path`, or appends it to the stdout buffer.
fn write_output(stdout: &mut String, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display()))),
        None => {
            stdout.push_str(text);
            Ok(())
        }
    }
}

fn execute(config: &RunConfig, buf: &mut String) -> Result<i32> {
    let max_width = config.max_width();
    match &config.command {
        Command::Attractors {
            net,
            schedule,
            format,
            out,
        } => {
            let net = prepare(net)?;
            let schedule = schedule_for(&net, schedule.as_deref())?;
            let report = find_attractors(&net, &schedule, max_width)?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => attractor_csv(&report),
                Format::Table => attractor_table(&report),
            };
            write_output(buf, out.as_deref(), &text)?;
        }
        Command::Basins { net, schedule, csv } => {
            let net = prepare(net)?;
            let schedule = schedule_for(&net, schedule.as_deref())?;
            write_output(buf, Some(csv), &basin_csv(&net, &schedule, max_width)?)?;
        }
        Command::Stg { net, schedule, dot } => {
            let net = prepare(net)?;
            let schedule = schedule_for(&net, schedule.as_deref())?;
            write_output(buf, Some(dot), &export_stg(&net, &schedule)?)?;
        }
        Command::Schedules { command } => match command {
            SchedulesCommand::Count { n } => say!(buf, "{}", count_schedules(*n)),
            SchedulesCommand::Enumerate { net, out } => {
                let net = prepare(net)?;
                let g = InteractionDigraph::from_network(&net);
                let mut text = String::from("class,labeling,schedule\n");
                let mut n = 0;
                for (k, (lab, s)) in
                    enumerate_representatives(&g, config.max_labelings())?.enumerate()
                {
                    writeln!(text, "{},{lab},{s}", k + 1).unwrap();
                    n += 1;
                }
                write_output(buf, out.as_deref(), &text)?;
                eprintln!("{n} representative schedules");
            }
            SchedulesCommand::Classes { net, out } => {
                let net = prepare(net)?;
                let g = InteractionDigraph::from_network(&net);
                let mut text = String::from("class");
                for k in 0..g.arc_count() {
                    write!(text, ",{}", g.arc_name(k)).unwrap();
                }
                text.push_str(",representative\n");
                for (k, (lab, s)) in
                    enumerate_representatives(&g, config.max_labelings())?.enumerate()
                {
                    write!(text, "{}", k + 1).unwrap();
                    for l in lab.to_string().chars() {
                        write!(text, ",{l}").unwrap();
                    }
                    writeln!(text, ",{s}").unwrap();
                }
                write_output(buf, out.as_deref(), &text)?;
            }
        },
        Command::Ensemble { net, out_dir } => {
            let net = prepare(net)?;
            let options = EnsembleOptions {
                max_labelings: config.max_labelings(),
                max_width,
                threads: None,
            };
            let stats = analyze_ensemble(&net, &options)?;
            std::fs::create_dir_all(out_dir)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", out_dir.display())))?;
            write_output(buf, Some(&out_dir.join("steady.csv")), &stats.steady_csv())?;
            write_output(buf, Some(&out_dir.join("cycles.csv")), &stats.cycles_csv())?;
            write_output(
                buf,
                Some(&out_dir.join("summary.json")),
                &(stats.summary_json() + "\n"),
            )?;
            say!(
                buf,
                "{} schedules, {} with fixed points only ({:.2}%), {} distinct cycles",
                stats.total_schedules,
                stats.steady_only,
                stats.steady_only_percent,
                stats.cycles.len()
            );
        }
        Command::Fit {
            net,
            targets,
            max_regulators,
            fixed_points_only,
            out,
        } => {
            let net = prepare(net)?;
            let desired = parallel_fixed_points(&net, max_width)?;
            let options = FitOptions {
                max_regulators: *max_regulators as usize,
                fixed_points_only: *fixed_points_only,
                max_width,
            };
            let targets: Vec<&str> = targets.iter().map(String::as_str).collect();
            let result = fit_rules(
                &net,
                (!targets.is_empty()).then_some(targets.as_slice()),
                &desired,
                &options,
            )?;
            write_output(buf, Some(out), &(result.to_json() + "\n"))?;
            for c in result.passing() {
                say!(buf, "{} <- {}", c.target, c.expression);
            }
            say!(buf, "{} passing candidates", result.passing_count());
        }
        Command::VerifyReduction {
            large,
            small,
            pins,
            allow_extra_cycles_in_large,
            report,
        } => {
            let large = load_network(large)?;
            let small = load_network(small)?;
            let options = ReductionOptions {
                allow_extra_cycles_in_large: *allow_extra_cycles_in_large,
                max_width,
            };
            let check = verify_reduction(&large, &small, &parse_pins(pins)?, &options)?;
            if let Some(path) = report {
                write_output(buf, Some(path), &(check.to_json() + "\n"))?;
            }
            say!(
                buf,
                "{} -> {}: fixed points {}, cycles {}, {} shared nodes",
                check.large,
                check.small,
                verdict(check.fixed_points_match),
                verdict(check.cycles_match),
                check.shared_nodes.len()
            );
            if !check.matches {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Circuits {
            net,
            max_len,
            negative_only,
            format,
        } => {
            let net = prepare(net)?;
            let g = InteractionDigraph::from_network(&net);
            let max_len = max_len.unwrap_or(g.vertex_count());
            let mut circuits = enumerate_circuits(&g, max_len);
            if *negative_only {
                circuits.retain(|c| c.is_negative());
            }
            match format {
                Format::Json => say!(
                    buf,
                    "{}",
                    serde_json::to_string_pretty(&circuits).expect("circuits serialize")
                ),
                Format::Csv => {
                    say!(buf, "sign,length,nodes");
                    for c in &circuits {
                        say!(buf, "{},{},{}", c.sign.symbol(), c.len(), c.nodes.join(" "));
                    }
                }
                Format::Table => {
                    for c in &circuits {
                        say!(buf, "{c}");
                    }
                    let negative = circuits.iter().filter(|c| c.is_negative()).count();
                    say!(buf, "{} circuits, {negative} negative", circuits.len());
                }
            }
        }
        Command::Nets { command } => match command {
            NetsCommand::List => {
                for name in bundled::NAMES {
                    say!(buf, "{name}");
                }
            }
            NetsCommand::Show { name } => match bundled::source(name) {
                Some(text) => buf.push_str(text),
                None => return Err(Error::InvalidArgument(format!("no bundled network {name}"))),
            },
        },
    }
    Ok(EXIT_OK)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

/// Fixed points first, then cycles, each in report order.
fn column_order(report: &AttractorReport) -> Vec<(String, usize)> {
    let mut cols = Vec::new();
    let (mut ss, mut lc) = (0, 0);
    for (i, a) in report.attractors.iter().enumerate() {
        if a.kind == AttractorKind::FixedPoint {
            ss += 1;
            cols.push((format!("SS{ss}"), i));
        }
    }
    for (i, a) in report.attractors.iter().enumerate() {
        if a.kind == AttractorKind::LimitCycle {
            lc += 1;
            cols.push((format!("LC{lc}"), i));
        }
    }
    cols
}

/// Components as rows, attractors as columns, one column per cycle state.
pub fn attractor_csv(report: &AttractorReport) -> String {
    let cols = column_order(report);
    let mut out = String::from("component");
    for (name, i) in &cols {
        let a = &report.attractors[*i];
        if a.length == 1 {
            write!(out, ",{name}").unwrap();
        } else {
            for t in 1..=a.length {
                write!(out, ",{name}.{t}").unwrap();
            }
        }
    }
    out.push('\n');
    for (p, node) in report.nodes.iter().enumerate() {
        out.push_str(node);
        for (_, i) in &cols {
            for s in &report.attractors[*i].states {
                write!(out, ",{}", u8::from(s.bit(p))).unwrap();
            }
        }
        out.push('\n');
    }
    for node in &report.outputs {
        out.push_str(node);
        for (_, i) in &cols {
            for ph in &report.attractors[*i].phenotypes {
                write!(out, ",{}", ph[node]).unwrap();
            }
        }
        out.push('\n');
    }
    out.push_str("basin_percent");
    for (_, i) in &cols {
        let a = &report.attractors[*i];
        for _ in 0..a.length {
            write!(out, ",{:.4}", a.basin_percent).unwrap();
        }
    }
    out.push('\n');
    out
}

/// Aligned text table in the same layout as [`attractor_csv`], cycle states
/// separated by spaces.
pub fn attractor_table(report: &AttractorReport) -> String {
    let cols = column_order(report);
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["Component".to_string()];
    header.extend(cols.iter().map(|(n, _)| n.clone()));
    rows.push(header);
    let cell = |i: usize, f: &dyn Fn(usize) -> u8| {
        (0..report.attractors[i].length)
            .map(|t| f(t).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for (p, node) in report.nodes.iter().enumerate() {
        let mut row = vec![node.clone()];
        for (_, i) in &cols {
            let states = &report.attractors[*i].states;
            row.push(cell(*i, &|t| u8::from(states[t].bit(p))));
        }
        rows.push(row);
    }
    for node in &report.outputs {
        let mut row = vec![node.clone()];
        for (_, i) in &cols {
            let ph = &report.attractors[*i].phenotypes;
            row.push(cell(*i, &|t| ph[t][node]));
        }
        rows.push(row);
    }
    let mut basin = vec!["Basin %".to_string()];
    basin.extend(
        cols.iter()
            .map(|(_, i)| format!("{:.2}", report.attractors[*i].basin_percent)),
    );
    rows.push(basin);
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!(
        "{}: {} states, schedule {}\n",
        report.network, report.total_states, report.schedule
    );
    for (k, row) in rows.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if k == 0 || k == rows.len() - 2 {
            out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::find_parallel_attractors;

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run(["boolnet", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["boolnet", "attractors"]), EXIT_USAGE);
        assert_eq!(run(["boolnet", "attractors", "no_such_net"]), EXIT_USAGE);
    }

    #[test]
    fn guard_exits_2() {
        assert_eq!(
            run(["boolnet", "--max-width", "20", "attractors", "net29"]),
            EXIT_GUARD
        );
        assert_eq!(
            run([
                "boolnet",
                "ensemble",
                "net14",
                "--out-dir",
                "/nonexistent/x"
            ]),
            EXIT_GUARD
        );
    }

    #[test]
    fn table_layout() {
        let report = find_parallel_attractors(&bundled::net09(), 28).unwrap();
        let table = attractor_table(&report);
        let basin = table.lines().last().unwrap();
        let cols: Vec<&str> = basin.split_whitespace().collect();
        assert_eq!(cols, ["Basin", "%", "98.44", "0.39", "0.39", "0.78"]);
        assert!(table
            .lines()
            .any(|l| l.starts_with("p53_A") && l.ends_with("0 1")));
    }

    #[test]
    fn csv_layout() {
        let report = find_parallel_attractors(&bundled::net09(), 28).unwrap();
        let csv = attractor_csv(&report);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "component,SS1,SS2,SS3,LC1.1,LC1.2");
        assert_eq!(lines.next().unwrap(), "miR_145,0,1,1,1,1");
        assert_eq!(csv.lines().count(), 1 + 9 + 1);
    }
}
