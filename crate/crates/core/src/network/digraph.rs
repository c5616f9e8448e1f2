use serde::Serialize;

use super::Network;

/// Regulatory sign of an arc, read off the negation parity of the source's
/// occurrences in the target's rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcSign {
    Activating,
    Inhibiting,
    /// The source occurs both negated and unnegated.
    Dual,
}

impl ArcSign {
    pub fn symbol(self) -> char {
        match self {
            ArcSign::Activating => '+',
            ArcSign::Inhibiting => '-',
            ArcSign::Dual => '±',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub sign: ArcSign,
}

/// The interaction digraph of the dynamic part of a network: an arc `(i, j)`
/// for every `i` that the (pin-folded) rule of `j` mentions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteractionDigraph {
    vertices: Vec<String>,
    arcs: Vec<Arc>,
    successors: Vec<Vec<(usize, usize)>>,
}

impl InteractionDigraph {
    /// Arcs are ordered by target in declaration order, then by first
    /// appearance of the source in the target's rule.
    pub fn from_network(net: &Network) -> InteractionDigraph {
        let dynamic = net.dynamic_indices();
        let vertices: Vec<String> = dynamic.iter().map(|&i| net.nodes()[i].clone()).collect();
        let position = |name: &str| vertices.iter().position(|v| v == name);
        let mut arcs = Vec::new();
        for (to, &node) in dynamic.iter().enumerate() {
            let rule = net.effective_rule(node);
            let occurrences = rule.occurrences();
            for dep in rule.dependencies() {
                let Some(from) = position(&dep) else { continue };
                let mut pos = false;
                let mut neg = false;
                for o in occurrences.iter().filter(|o| o.name == dep) {
                    if o.negated {
                        neg = true;
                    } else {
                        pos = true;
                    }
                }
                let sign = match (pos, neg) {
                    (true, false) => ArcSign::Activating,
                    (false, true) => ArcSign::Inhibiting,
                    _ => ArcSign::Dual,
                };
                arcs.push(Arc { from, to, sign });
            }
        }
        Self::build(vertices, arcs)
    }

    /// A digraph given by explicit arcs, all activating.
    pub fn from_arcs<S: AsRef<str>>(vertices: &[S], arcs: &[(S, S)]) -> Option<InteractionDigraph> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let position = |name: &str| vertices.iter().position(|v| v == name);
        let mut list = Vec::new();
        for (a, b) in arcs {
            list.push(Arc {
                from: position(a.as_ref())?,
                to: position(b.as_ref())?,
                sign: ArcSign::Activating,
            });
        }
        Some(Self::build(vertices, list))
    }

    fn build(vertices: Vec<String>, arcs: Vec<Arc>) -> InteractionDigraph {
        let mut successors = vec![Vec::new(); vertices.len()];
        for (k, a) in arcs.iter().enumerate() {
            successors[a.from].push((a.to, k));
        }
        InteractionDigraph {
            vertices,
            arcs,
            successors,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Outgoing `(target, arc index)` pairs of `v`.
    pub fn successors(&self, v: usize) -> &[(usize, usize)] {
        &self.successors[v]
    }

    pub fn arc_name(&self, k: usize) -> String {
        let a = self.arcs[k];
        format!("{}->{}", self.vertices[a.from], self.vertices[a.to])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::bundled;

    #[test]
    fn arc_counts_of_bundled_nets() {
        assert_eq!(
            InteractionDigraph::from_network(&bundled::net09()).arc_count(),
            17
        );
        assert_eq!(
            InteractionDigraph::from_network(&bundled::net09_fitted()).arc_count(),
            19
        );
    }

    #[test]
    fn signs_follow_negation_parity() {
        let g = InteractionDigraph::from_network(&bundled::net09());
        let find = |a: &str, b: &str| {
            let (i, j) = (g.vertex_index(a).unwrap(), g.vertex_index(b).unwrap());
            g.arcs()
                .iter()
                .find(|x| x.from == i && x.to == j)
                .unwrap()
                .sign
        };
        assert_eq!(find("p53_K", "p53_A"), ArcSign::Inhibiting);
        assert_eq!(find("p53", "p53_A"), ArcSign::Activating);
        assert_eq!(find("miR_145", "Sp1"), ArcSign::Inhibiting);
        assert_eq!(find("BMI1", "Sp1"), ArcSign::Activating);
    }

    #[test]
    fn dual_sign() {
        let net = Network::new(
            "x",
            [
                ("A", crate::expr::parse("(A & !B) | (!A & B)").unwrap()),
                ("B", crate::expr::parse("A").unwrap()),
            ],
        )
        .unwrap();
        let g = InteractionDigraph::from_network(&net);
        assert_eq!(g.arcs()[0].sign, ArcSign::Dual);
        assert_eq!(g.arcs()[1].sign, ArcSign::Dual);
        assert_eq!(g.arcs()[2].sign, ArcSign::Activating);
    }

    #[test]
    fn pinned_nodes_leave_the_digraph() {
        let net = bundled::net29().pin("DNA_Damage", true).unwrap();
        let g = InteractionDigraph::from_network(&net);
        assert_eq!(g.vertex_count(), 24);
        assert!(g.vertex_index("DNA_Damage").is_none());
        // HDAC1 folds to a constant and loses its only input
        let hdac1 = g.vertex_index("HDAC1").unwrap();
        assert!(g.arcs().iter().all(|a| a.to != hdac1));
    }
}
