//! Deterministic (block-sequential) update schedules and their equivalence
//! classes.
//!
//! A schedule is an ordered partition `(A1)(A2)...(Ak)` of the dynamic nodes:
//! blocks are updated one after another, the nodes of a block simultaneously.
//! The parallel schedule has a single block.
//!
//! Two schedules produce the same dynamics whenever they induce the same
//! labeling of the interaction digraph, so one representative per valid
//! labeling suffices to cover every distinct deterministic dynamics.

mod count;
mod enumerate;
mod labeling;
mod scc;

use std::fmt;

use crate::error::{Error, Result};
use crate::expr;

pub use count::count_schedules;
pub use enumerate::{enumerate_representatives, Representatives, DEFAULT_MAX_LABELINGS};
pub use labeling::{
    is_update_digraph, label_of, schedule_from_labeling, Label, Labeling, UpdateDigraphChecker,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpdateSchedule {
    blocks: Vec<Vec<String>>,
}

impl UpdateSchedule {
    pub fn new(blocks: Vec<Vec<String>>) -> Result<UpdateSchedule> {
        let mut seen = std::collections::HashSet::new();
        if blocks.is_empty() {
            return Err(Error::InvalidSchedule("no blocks".into()));
        }
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidSchedule("empty block".into()));
            }
            for node in block {
                if !seen.insert(node.as_str()) {
                    return Err(Error::InvalidSchedule(format!(
                        "node `{node}` appears more than once"
                    )));
                }
            }
        }
        Ok(UpdateSchedule { blocks })
    }

    /// All nodes in one block.
    pub fn parallel<S: AsRef<str>>(nodes: &[S]) -> UpdateSchedule {
        UpdateSchedule {
            blocks: vec![nodes.iter().map(|n| n.as_ref().to_string()).collect()],
        }
    }

    /// Parses the block notation `(A)(B,C)`; whitespace is ignored.
    pub fn parse(text: &str) -> Result<UpdateSchedule> {
        let bad = |msg: &str| Error::InvalidSchedule(format!("{msg} in `{text}`"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = compact.as_str();
        let mut blocks = Vec::new();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = inner.find(')').ok_or_else(|| bad("unclosed block"))?;
            let block: Vec<String> = inner[..close].split(',').map(str::to_string).collect();
            if let Some(name) = block.iter().find(|n| !expr::is_identifier(n)) {
                return Err(bad(&format!("illegal node name `{name}`")));
            }
            blocks.push(block);
            rest = &inner[close + 1..];
        }
        UpdateSchedule::new(blocks)
    }

    /// Groups `vertices` by ascending level; nodes keep their order inside a block.
    pub fn from_levels<S: AsRef<str>>(vertices: &[S], levels: &[usize]) -> UpdateSchedule {
        let mut distinct: Vec<usize> = levels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let blocks = distinct
            .iter()
            .map(|&l| {
                vertices
                    .iter()
                    .zip(levels)
                    .filter(|(_, &x)| x == l)
                    .map(|(v, _)| v.as_ref().to_string())
                    .collect()
            })
            .collect();
        UpdateSchedule { blocks }
    }

    pub fn blocks(&self) -> &[Vec<String>] {
        &self.blocks
    }

    pub fn is_parallel(&self) -> bool {
        self.blocks.len() == 1
    }

    /// The 1-based block index `s(v)` of every vertex. The schedule must
    /// cover exactly `vertices`.
    pub fn levels<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Vec<usize>> {
        let mut levels = vec![0usize; vertices.len()];
        let mut covered = 0;
        for (b, block) in self.blocks.iter().enumerate() {
            for node in block {
                let i = vertices
                    .iter()
                    .position(|v| v.as_ref() == node)
                    .ok_or_else(|| {
                        Error::InvalidSchedule(format!("`{node}` is not a dynamic node"))
                    })?;
                levels[i] = b + 1;
                covered += 1;
            }
        }
        if covered != vertices.len() {
            let missing: Vec<&str> = vertices
                .iter()
                .zip(&levels)
                .filter(|(_, &l)| l == 0)
                .map(|(v, _)| v.as_ref())
                .collect();
            return Err(Error::InvalidSchedule(format!(
                "schedule does not cover {}",
                missing.join(", ")
            )));
        }
        Ok(levels)
    }

    /// Node-index blocks relative to `vertices`.
    pub fn index_blocks<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Vec<Vec<usize>>> {
        self.levels(vertices)?;
        Ok(self
            .blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|n| vertices.iter().position(|v| v.as_ref() == n).unwrap())
                    .collect()
            })
            .collect())
    }
}

impl fmt::Display for UpdateSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "({})", block.join(","))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for UpdateSchedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<UpdateSchedule> {
        UpdateSchedule::parse(s)
    }
}

impl serde::Serialize for UpdateSchedule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notation_round_trip() {
        for text in ["(A,B,C)", "(A)(B,C)", "(C)(B)(A)"] {
            assert_eq!(UpdateSchedule::parse(text).unwrap().to_string(), text);
        }
        let s = UpdateSchedule::parse(" ( A ) ( B , C ) ").unwrap();
        assert_eq!(s.to_string(), "(A)(B,C)");
        assert!(UpdateSchedule::parse("(A,B,C)").unwrap().is_parallel());
    }

    #[test]
    fn malformed_notation() {
        assert!(UpdateSchedule::parse("(A)(B").is_err());
        assert!(UpdateSchedule::parse("A,B").is_err());
        assert!(UpdateSchedule::parse("(A)()").is_err());
        assert!(UpdateSchedule::parse("(A)(A)").is_err());
        assert!(UpdateSchedule::parse("").is_err());
    }

    #[test]
    fn levels_and_coverage() {
        let s = UpdateSchedule::parse("(C)(B)(A)").unwrap();
        assert_eq!(s.levels(&["A", "B", "C"]).unwrap(), vec![3, 2, 1]);
        assert!(s.levels(&["A", "B"]).is_err());
        assert!(s.levels(&["A", "B", "C", "D"]).is_err());
        let back = UpdateSchedule::from_levels(&["A", "B", "C"], &[3, 2, 1]);
        assert_eq!(back, s);
        assert_eq!(
            UpdateSchedule::from_levels(&["A", "B", "C"], &[1, 5, 5]).to_string(),
            "(A)(B,C)"
        );
    }
}
