//! The Boolean network model.
//!
//! A [`Network`] is an ordered list of named nodes, one rule per node, plus two
//! annotations that shape the dynamic state space:
//!
//! * **pinned** nodes are clamped to a constant; the constant is substituted
//!   into every rule and the node leaves the dynamic state;
//! * **output** nodes (phenotypes) are evaluated from the dynamic state but
//!   never feed back into it, so they are excluded from the state as well.
//!
//! The remaining nodes, in declaration order, form the dynamic state.

pub mod bundled;
mod circuits;
mod digraph;
mod format;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::expr::{self, Expr};

pub use circuits::{enumerate_circuits, CircuitSign, SignedCircuit};
pub use digraph::{Arc, ArcSign, InteractionDigraph};
pub use format::parse_network;
pub(crate) use format::parse_pin;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    name: String,
    nodes: Vec<String>,
    rules: Vec<Expr>,
    index: HashMap<String, usize>,
    pinned: BTreeMap<usize, bool>,
    outputs: BTreeSet<usize>,
}

impl Network {
    /// Builds a network from `(node, rule)` pairs in declaration order.
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        rules: impl IntoIterator<Item = (S, Expr)>,
    ) -> Result<Network> {
        let mut nodes = Vec::new();
        let mut exprs = Vec::new();
        let mut index = HashMap::new();
        for (node, rule) in rules {
            let node = node.into();
            if !expr::is_identifier(&node) {
                return Err(Error::InvalidNetwork(format!("illegal node name `{node}`")));
            }
            if index.insert(node.clone(), nodes.len()).is_some() {
                return Err(Error::DuplicateNode(node));
            }
            nodes.push(node);
            exprs.push(rule);
        }
        if nodes.is_empty() {
            return Err(Error::InvalidNetwork("no nodes".into()));
        }
        let net = Network {
            name: name.into(),
            nodes,
            rules: exprs,
            index,
            pinned: BTreeMap::new(),
            outputs: BTreeSet::new(),
        };
        net.check_dependencies()?;
        Ok(net)
    }

    /// Parses a BoolNet-style rule file; see [`parse_network`].
    pub fn from_text(name: impl Into<String>, text: &str) -> Result<Network> {
        parse_network(name, text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Network {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn index_of(&self, node: &str) -> Option<usize> {
        self.index.get(node).copied()
    }

    fn require(&self, node: &str) -> Result<usize> {
        self.index_of(node)
            .ok_or_else(|| Error::UnknownNode(node.to_string()))
    }

    /// The rule as declared, without pin substitution.
    pub fn rule(&self, node: &str) -> Option<&Expr> {
        self.index_of(node).map(|i| &self.rules[i])
    }

    pub fn rules(&self) -> impl Iterator<Item = (&str, &Expr)> {
        self.nodes.iter().map(String::as_str).zip(self.rules.iter())
    }

    /// The rule of node `i` with pinned values substituted and folded.
    pub fn effective_rule(&self, i: usize) -> Expr {
        let rule = &self.rules[i];
        let touched = self.pinned.keys().any(|&p| rule.mentions(&self.nodes[p]));
        if !touched {
            return rule.clone();
        }
        let mut e = rule.clone();
        for (&p, &value) in &self.pinned {
            e = e.substitute(&self.nodes[p], value);
        }
        e.simplify()
    }

    pub fn pinned(&self) -> impl Iterator<Item = (&str, bool)> {
        self.pinned
            .iter()
            .map(|(&i, &v)| (self.nodes[i].as_str(), v))
    }

    pub fn pinned_value(&self, node: &str) -> Option<bool> {
        self.index_of(node)
            .and_then(|i| self.pinned.get(&i).copied())
    }

    pub fn outputs(&self) -> impl Iterator<Item = &str> {
        self.outputs.iter().map(|&i| self.nodes[i].as_str())
    }

    pub(crate) fn output_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.outputs.iter().copied()
    }

    pub fn is_output(&self, node: &str) -> bool {
        self.index_of(node)
            .is_some_and(|i| self.outputs.contains(&i))
    }

    pub fn is_dynamic_index(&self, i: usize) -> bool {
        !self.outputs.contains(&i) && !self.pinned.contains_key(&i)
    }

    /// Indices of the nodes forming the dynamic state, in declaration order.
    pub fn dynamic_indices(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.is_dynamic_index(i))
            .collect()
    }

    pub fn dynamic_nodes(&self) -> Vec<&str> {
        self.dynamic_indices()
            .into_iter()
            .map(|i| self.nodes[i].as_str())
            .collect()
    }

    /// Number of bits in the dynamic state.
    pub fn width(&self) -> usize {
        (0..self.nodes.len())
            .filter(|&i| self.is_dynamic_index(i))
            .count()
    }

    /// Nodes whose rule is exactly their own name.
    pub fn inputs(&self) -> Vec<&str> {
        self.rules()
            .filter(|(n, r)| matches!(r, Expr::Var(v) if v == n))
            .map(|(n, _)| n)
            .collect()
    }

    /// Clamps `node` to `value`. Pinning an already pinned node overrides its value.
    pub fn pin(&self, node: &str, value: bool) -> Result<Network> {
        let i = self.require(node)?;
        if self.outputs.contains(&i) {
            return Err(Error::InvalidNetwork(format!(
                "output node `{node}` cannot be pinned"
            )));
        }
        let mut net = self.clone();
        net.pinned.insert(i, value);
        Ok(net)
    }

    pub fn unpin(&self, node: &str) -> Result<Network> {
        let i = self.require(node)?;
        let mut net = self.clone();
        net.pinned.remove(&i);
        Ok(net)
    }

    /// Declares `nodes` as outputs, replacing any previous declaration.
    pub fn with_outputs<S: AsRef<str>>(&self, nodes: &[S]) -> Result<Network> {
        let mut outputs = BTreeSet::new();
        for n in nodes {
            let i = self.require(n.as_ref())?;
            if self.pinned.contains_key(&i) {
                return Err(Error::InvalidNetwork(format!(
                    "pinned node `{}` cannot be an output",
                    n.as_ref()
                )));
            }
            outputs.insert(i);
        }
        let mut net = self.clone();
        net.outputs = outputs;
        net.check_outputs()?;
        Ok(net)
    }

    /// Treats every node as part of the dynamic state.
    pub fn without_outputs(&self) -> Network {
        let mut net = self.clone();
        net.outputs.clear();
        net
    }

    /// Marks every unpinned node that no other node depends on as an output.
    pub fn with_terminal_outputs(&self) -> Network {
        let mut used = vec![false; self.nodes.len()];
        for (j, rule) in self.rules.iter().enumerate() {
            for d in rule.dependencies() {
                let i = self.index[&d];
                if i != j {
                    used[i] = true;
                }
            }
        }
        let mut net = self.clone();
        net.outputs = (0..self.nodes.len())
            .filter(|&i| !used[i] && !self.pinned.contains_key(&i))
            .filter(|&i| !self.rules[i].mentions(&self.nodes[i]))
            .collect();
        net
    }

    /// Replaces the rule of `target`.
    pub fn apply_rule(&self, target: &str, rule: Expr) -> Result<Network> {
        let i = self.require(target)?;
        let mut net = self.clone();
        net.rules[i] = rule;
        net.check_dependencies()?;
        net.check_outputs()?;
        Ok(net)
    }

    fn check_dependencies(&self) -> Result<()> {
        for (node, rule) in self.nodes.iter().zip(&self.rules) {
            for d in rule.dependencies() {
                if !self.index.contains_key(&d) {
                    return Err(Error::UndeclaredDependency {
                        node: node.clone(),
                        dependency: d,
                    });
                }
            }
        }
        Ok(())
    }

    fn check_outputs(&self) -> Result<()> {
        for (j, (node, rule)) in self.nodes.iter().zip(&self.rules).enumerate() {
            for d in rule.dependencies() {
                let i = self.index[&d];
                if self.outputs.contains(&i) {
                    let role = if self.outputs.contains(&j) {
                        "output"
                    } else {
                        "state"
                    };
                    return Err(Error::InvalidNetwork(format!(
                        "output node `{d}` is a dependency of {role} node `{node}`"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Renders the network as a rule file that [`parse_network`] reads back.
    pub fn to_text(&self) -> String {
        format::write_network(self)
    }
}
