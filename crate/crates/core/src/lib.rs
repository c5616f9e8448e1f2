//! Exhaustive analysis of Boolean regulatory networks.
//!
//! * [`expr`]: rule expressions (`!`, `&`, `|`), parsing and evaluation;
//! * [`network`]: the network model, BoolNet rule files, bundled networks,
//!   the signed interaction digraph and its circuits;
//! * [`schedule`]: block-sequential update schedules, arc labelings and one
//!   representative schedule per equivalence class;
//! * [`dynamics`]: stepping and exhaustive attractor/basin analysis;
//! * [`ensemble`]: attractor statistics over all representative schedules;
//! * [`fitting`]: search for alternative rules preserving an attractor set;
//! * [`reduction`]: checks that a reduced network keeps the attractors of a
//!   larger one;
//! * [`cli`]: the `boolnet` command line.

pub mod cli;
pub mod dynamics;
pub mod ensemble;
pub mod error;
pub mod expr;
pub mod fitting;
pub mod network;
pub mod reduction;
pub mod schedule;

pub use error::{Error, Result};
pub use expr::Expr;
pub use network::Network;
pub use schedule::UpdateSchedule;
