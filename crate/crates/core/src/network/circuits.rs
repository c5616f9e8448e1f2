//! Elementary circuits of the signed interaction digraph.

use serde::Serialize;

use super::{ArcSign, InteractionDigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CircuitSign {
    Positive,
    Negative,
    /// The circuit runs through a dual arc.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedCircuit {
    /// Vertices in traversal order, starting at the smallest vertex index.
    pub nodes: Vec<String>,
    /// Arc indices; arc `k` leaves `nodes[k]`.
    #[serde(skip)]
    pub arcs: Vec<usize>,
    pub sign: CircuitSign,
}

impl CircuitSign {
    pub fn symbol(self) -> char {
        match self {
            CircuitSign::Positive => '+',
            CircuitSign::Negative => '-',
            CircuitSign::Both => '±',
        }
    }
}

impl SignedCircuit {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: &str) -> bool {
        self.nodes.iter().any(|n| n == node)
    }

    pub fn is_negative(&self) -> bool {
        self.sign == CircuitSign::Negative
    }
}

impl std::fmt::Display for SignedCircuit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.sign.symbol(), self.nodes.join(" -> "))?;
        if let Some(first) = self.nodes.first() {
            write!(f, " -> {first}")?;
        }
        Ok(())
    }
}

fn make_circuit(g: &InteractionDigraph, vertices: &[usize], arcs: &[usize]) -> SignedCircuit {
    let mut inhibitions = 0;
    let mut dual = false;
    for &k in arcs {
        match g.arcs()[k].sign {
            ArcSign::Activating => {}
            ArcSign::Inhibiting => inhibitions += 1,
            ArcSign::Dual => dual = true,
        }
    }
    let sign = if dual {
        CircuitSign::Both
    } else if inhibitions % 2 == 1 {
        CircuitSign::Negative
    } else {
        CircuitSign::Positive
    };
    SignedCircuit {
        nodes: vertices.iter().map(|&v| g.vertices()[v].clone()).collect(),
        arcs: arcs.to_vec(),
        sign,
    }
}

struct Johnson<'g> {
    g: &'g InteractionDigraph,
    start: usize,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    path: Vec<usize>,
    path_arcs: Vec<usize>,
    out: Vec<SignedCircuit>,
}

impl Johnson<'_> {
    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        let waiting = std::mem::take(&mut self.blocked_by[u]);
        for w in waiting {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    fn circuit(&mut self, v: usize) -> bool {
        let mut found = false;
        self.path.push(v);
        self.blocked[v] = true;
        for &(w, k) in self.g.successors(v) {
            if w < self.start {
                continue;
            }
            self.path_arcs.push(k);
            if w == self.start {
                self.out
                    .push(make_circuit(self.g, &self.path, &self.path_arcs));
                found = true;
            } else if !self.blocked[w] && self.circuit(w) {
                found = true;
            }
            self.path_arcs.pop();
        }
        if found {
            self.unblock(v);
        } else {
            for &(w, _) in self.g.successors(v) {
                if w >= self.start && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.path.pop();
        found
    }
}

struct Bounded<'g> {
    g: &'g InteractionDigraph,
    start: usize,
    max_len: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    path_arcs: Vec<usize>,
    out: Vec<SignedCircuit>,
}

impl Bounded<'_> {
    fn extend(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        for &(w, k) in self.g.successors(v) {
            if w < self.start {
                continue;
            }
            if w == self.start {
                self.path_arcs.push(k);
                self.out
                    .push(make_circuit(self.g, &self.path, &self.path_arcs));
                self.path_arcs.pop();
            } else if !self.on_path[w] && self.path.len() < self.max_len {
                self.path_arcs.push(k);
                self.extend(w);
                self.path_arcs.pop();
            }
        }
        self.on_path[v] = false;
        self.path.pop();
    }
}

/// All elementary circuits with at most `max_len` vertices.
///
/// Circuits are grouped by their smallest vertex; uses Johnson's algorithm
/// when the length is unbounded and a bounded depth-first search otherwise.
pub fn enumerate_circuits(g: &InteractionDigraph, max_len: usize) -> Vec<SignedCircuit> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    if max_len >= n {
        for start in 0..n {
            let mut j = Johnson {
                g,
                start,
                blocked: vec![false; n],
                blocked_by: vec![Vec::new(); n],
                path: Vec::new(),
                path_arcs: Vec::new(),
                out: Vec::new(),
            };
            j.circuit(start);
            out.append(&mut j.out);
        }
    } else {
        for start in 0..n {
            let mut b = Bounded {
                g,
                start,
                max_len,
                on_path: vec![false; n],
                path: Vec::new(),
                path_arcs: Vec::new(),
                out: Vec::new(),
            };
            b.extend(start);
            out.append(&mut b.out);
        }
    }
    out
}
