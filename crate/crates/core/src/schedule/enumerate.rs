use super::labeling::{Label, Labeling, UpdateDigraphChecker};
use super::{schedule_from_labeling, UpdateSchedule};
use crate::error::{Error, Result};
use crate::network::InteractionDigraph;

/// Default cap on the number of raw labelings scanned (2^26).
pub const DEFAULT_MAX_LABELINGS: u128 = 1 << 26;

/// Stream of one representative schedule per valid labeling, in increasing
/// order of the labeling's bit mask over the non-loop arcs (bit `k` set means
/// the `k`-th non-loop arc is labeled `-`). The first item is the parallel
/// schedule.
pub struct Representatives<'g> {
    g: &'g InteractionDigraph,
    free_arcs: Vec<usize>,
    next: u128,
    end: u128,
    checker: UpdateDigraphChecker,
}

impl Representatives<'_> {
    /// Number of raw labelings that will be scanned.
    pub fn labelings(&self) -> u128 {
        self.end
    }
}

impl Iterator for Representatives<'_> {
    type Item = (Labeling, UpdateSchedule);

    fn next(&mut self) -> Option<Self::Item> {
        let arcs = self.g.arc_count();
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let mut labels = vec![Label::Plus; arcs];
            for (bit, &k) in self.free_arcs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    labels[k] = Label::Minus;
                }
            }
            let lab = Labeling::new(labels);
            if self.checker.check(&lab, self.g) {
                let schedule =
                    schedule_from_labeling(&lab, self.g).expect("valid labeling is realizable");
                return Some((lab, schedule));
            }
        }
        None
    }
}

/// Enumerates representatives of all schedule equivalence classes of `g`.
///
/// Self-loops are always `+` and contribute no free bit. Fails if
/// `2^(non-loop arcs)` exceeds `max_labelings`.
pub fn enumerate_representatives(
    g: &InteractionDigraph,
    max_labelings: u128,
) -> Result<Representatives<'_>> {
    let free_arcs: Vec<usize> = g
        .arcs()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.from != a.to)
        .map(|(k, _)| k)
        .collect();
    if free_arcs.len() >= 127 || (1u128 << free_arcs.len()) > max_labelings {
        return Err(Error::Guard {
            what: "labelings",
            items: if free_arcs.len() >= 127 {
                u128::MAX
            } else {
                1u128 << free_arcs.len()
            },
            max: max_labelings,
        });
    }
    Ok(Representatives {
        g,
        end: 1u128 << free_arcs.len(),
        free_arcs,
        next: 0,
        checker: UpdateDigraphChecker::new(),
    })
}
