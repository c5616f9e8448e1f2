use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expr::{Operand, Program};
use crate::network::Network;
use crate::schedule::UpdateSchedule;

/// Lane patterns for the six low code bits: lane `t` holds state `base + t`.
const LOW_BITS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// A network and a schedule compiled into a successor function over integer
/// state codes.
#[derive(Debug, Clone)]
pub struct Stepper {
    width: usize,
    nodes: Vec<String>,
    programs: Vec<Program>,
    blocks: Vec<Vec<usize>>,
    depth: usize,
}

impl Stepper {
    pub fn new(net: &Network, schedule: &UpdateSchedule) -> Result<Stepper> {
        let dynamic = net.dynamic_indices();
        let nodes: Vec<String> = dynamic.iter().map(|&i| net.nodes()[i].clone()).collect();
        if nodes.len() > 64 {
            return Err(Error::WidthGuard {
                width: nodes.len(),
                max: 64,
            });
        }
        let blocks = schedule.index_blocks(&nodes)?;
        let mut programs = Vec::with_capacity(nodes.len());
        for &i in &dynamic {
            let rule = net.effective_rule(i);
            let program = Program::compile(&rule, |name| {
                if let Some(p) = nodes.iter().position(|n| n == name) {
                    return Some(Operand::Slot(p));
                }
                net.pinned_value(name).map(Operand::Const)
            })?;
            programs.push(program);
        }
        let depth = programs.iter().map(Program::depth).max().unwrap_or(1);
        Ok(Stepper {
            width: nodes.len(),
            nodes,
            programs,
            blocks,
            depth,
        })
    }

    pub fn parallel(net: &Network) -> Result<Stepper> {
        Self::new(net, &UpdateSchedule::parallel(&net.dynamic_nodes()))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    fn apply_blocks(&self, lanes: &mut [u64], stack: &mut Vec<u64>, fresh: &mut Vec<u64>) {
        for block in &self.blocks {
            fresh.clear();
            fresh.extend(block.iter().map(|&p| self.programs[p].eval(lanes, stack)));
            for (&p, &v) in block.iter().zip(fresh.iter()) {
                lanes[p] = v;
            }
        }
    }

    /// Successor of a single state.
    pub fn step(&self, code: u64) -> u64 {
        let w = self.width;
        let mut lanes: Vec<u64> = (0..w)
            .map(|p| if code >> (w - 1 - p) & 1 == 1 { !0 } else { 0 })
            .collect();
        let mut stack = Vec::with_capacity(self.depth);
        let mut fresh = Vec::new();
        self.apply_blocks(&mut lanes, &mut stack, &mut fresh);
        lanes
            .iter()
            .enumerate()
            .fold(0, |acc, (p, &l)| acc | (l & 1) << (w - 1 - p))
    }

    /// Writes the successors of states `base .. base + out.len()` into `out`.
    /// `base` must be a multiple of 64 and `out.len() <= 64`.
    pub fn step_batch(&self, base: u64, out: &mut [u32]) {
        debug_assert!(base.is_multiple_of(64) && out.len() <= 64);
        let w = self.width;
        let mut lanes: Vec<u64> = (0..w)
            .map(|p| {
                let b = w - 1 - p;
                if b < 6 {
                    LOW_BITS[b]
                } else if base >> b & 1 == 1 {
                    !0
                } else {
                    0
                }
            })
            .collect();
        let mut stack = Vec::with_capacity(self.depth);
        let mut fresh = Vec::with_capacity(w);
        self.apply_blocks(&mut lanes, &mut stack, &mut fresh);
        out.fill(0);
        let valid = if out.len() == 64 {
            !0
        } else {
            (1u64 << out.len()) - 1
        };
        for (p, &lane) in lanes.iter().enumerate() {
            let bit = 1u32 << (w - 1 - p);
            let mut m = lane & valid;
            while m != 0 {
                out[m.trailing_zeros() as usize] |= bit;
                m &= m - 1;
            }
        }
    }

    /// Successor of every state, indexed by state code. Requires `width <= 32`.
    pub fn successor_table(&self) -> Vec<u32> {
        assert!(self.width <= 32, "successor table needs width <= 32");
        let n = 1usize << self.width;
        let mut succ = vec![0u32; n];
        succ.par_chunks_mut(1 << 12)
            .enumerate()
            .for_each(|(block, out)| {
                let base = block as u64 * (1 << 12);
                for (chunk, out) in out.chunks_mut(64).enumerate() {
                    self.step_batch(base + chunk as u64 * 64, out);
                }
            });
        succ
    }
}
