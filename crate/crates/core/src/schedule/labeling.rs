use std::fmt;

use super::scc::Tarjan;
use super::UpdateSchedule;
use crate::error::{Error, Result};
use crate::network::InteractionDigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// `s(i) >= s(j)`: the target reads the source's current value.
    Plus,
    /// `s(i) < s(j)`: the source is updated first, the target sees the new value.
    Minus,
}

/// One label per arc of an interaction digraph, in arc order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<Label>,
}

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Labeling {
        Labeling { labels }
    }

    pub fn all_plus(arcs: usize) -> Labeling {
        Labeling {
            labels: vec![Label::Plus; arcs],
        }
    }

    /// Labeling whose arc `k` is `Minus` iff bit `k` of `mask` is set.
    pub fn from_mask(arcs: usize, mask: u128) -> Labeling {
        Labeling {
            labels: (0..arcs)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        Label::Minus
                    } else {
                        Label::Plus
                    }
                })
                .collect(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, arc: usize) -> Label {
        self.labels[arc]
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            f.write_str(match l {
                Label::Plus => "+",
                Label::Minus => "-",
            })?;
        }
        Ok(())
    }
}

/// `lab_s(i, j) = +` if `s(i) >= s(j)`, `-` otherwise.
pub fn label_of(schedule: &UpdateSchedule, g: &InteractionDigraph) -> Result<Labeling> {
    let levels = schedule.levels(g.vertices())?;
    Ok(label_from_levels(&levels, g))
}

pub(crate) fn label_from_levels(levels: &[usize], g: &InteractionDigraph) -> Labeling {
    Labeling {
        labels: g
            .arcs()
            .iter()
            .map(|a| {
                if levels[a.from] >= levels[a.to] {
                    Label::Plus
                } else {
                    Label::Minus
                }
            })
            .collect(),
    }
}

/// Validity test for labelings, reusing its buffers across calls.
///
/// A labeling is an update digraph iff, after reversing every `-` arc, no
/// cycle passes through a reversed arc; equivalently no strongly connected
/// component contains both endpoints of a `-` arc.
#[derive(Debug, Default)]
pub struct UpdateDigraphChecker {
    adj: Vec<Vec<usize>>,
    tarjan: Tarjan,
}

impl UpdateDigraphChecker {
    pub fn new() -> UpdateDigraphChecker {
        UpdateDigraphChecker::default()
    }

    pub fn check(&mut self, lab: &Labeling, g: &InteractionDigraph) -> bool {
        assert_eq!(lab.len(), g.arc_count(), "labeling does not match digraph");
        let n = g.vertex_count();
        self.adj.resize_with(n, Vec::new);
        self.adj.truncate(n);
        for a in &mut self.adj {
            a.clear();
        }
        for (arc, &label) in g.arcs().iter().zip(lab.labels()) {
            match label {
                Label::Plus => self.adj[arc.from].push(arc.to),
                Label::Minus => {
                    if arc.from == arc.to {
                        return false;
                    }
                    self.adj[arc.to].push(arc.from)
                }
            }
        }
        let comp = self.tarjan.run(&self.adj);
        g.arcs()
            .iter()
            .zip(lab.labels())
            .all(|(arc, &label)| label == Label::Plus || comp[arc.from] != comp[arc.to])
    }
}

pub fn is_update_digraph(lab: &Labeling, g: &InteractionDigraph) -> bool {
    UpdateDigraphChecker::new().check(lab, g)
}

/// Minimal-level schedule inducing `lab`.
///
/// Levels start at 1 and are raised until `s(i) >= s(j)` holds for every `+`
/// arc and `s(j) >= s(i) + 1` for every `-` arc; nodes sharing a level form a
/// block. Fails with [`Error::InvalidLabeling`] if the constraints are
/// infeasible.
pub fn schedule_from_labeling(lab: &Labeling, g: &InteractionDigraph) -> Result<UpdateSchedule> {
    if lab.len() != g.arc_count() {
        return Err(Error::InvalidArgument(format!(
            "labeling has {} arcs, digraph has {}",
            lab.len(),
            g.arc_count()
        )));
    }
    let n = g.vertex_count();
    let mut levels = vec![1usize; n];
    loop {
        let mut changed = false;
        for (arc, &label) in g.arcs().iter().zip(lab.labels()) {
            let (i, j) = (arc.from, arc.to);
            match label {
                Label::Plus if levels[i] < levels[j] => {
                    levels[i] = levels[j];
                    changed = true;
                }
                Label::Minus if levels[j] <= levels[i] => {
                    levels[j] = levels[i] + 1;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
        // every valid labeling has a solution with at most n levels
        if levels.iter().any(|&l| l > n) {
            return Err(Error::InvalidLabeling);
        }
    }
    let schedule = UpdateSchedule::from_levels(g.vertices(), &levels);
    let check = label_of(&schedule, g)?;
    if &check != lab {
        return Err(Error::InvalidLabeling);
    }
    Ok(schedule)
}
