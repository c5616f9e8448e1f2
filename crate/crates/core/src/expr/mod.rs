//! Boolean rule expressions: the local update function of a node.
//!
//! The concrete syntax is the one used by BoolNet rule files: identifiers made
//! of `[A-Za-z0-9_]`, the operators `!`, `&`, `|` (in decreasing order of
//! precedence) and parentheses. The tokens `0` and `1` denote constants.

mod parser;
mod program;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use parser::parse;
pub use program::{Operand, Program};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(bool),
    Var(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

/// One syntactic occurrence of a variable and whether it sits under an odd
/// number of negations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence<'a> {
    pub name: &'a str,
    pub negated: bool,
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        parse(text)
    }

    pub fn var(name: impl Into<String>) -> Expr {
        Expr::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::Or(Box::new(a), Box::new(b))
    }

    /// Literal `name` or `!name`.
    pub fn literal(name: &str, negated: bool) -> Expr {
        let v = Expr::var(name);
        if negated {
            Expr::not(v)
        } else {
            v
        }
    }

    /// Evaluates with variable values supplied by `lookup`.
    pub fn evaluate_with<F>(&self, lookup: &F) -> Result<bool>
    where
        F: Fn(&str) -> Option<bool>,
    {
        Ok(match self {
            Expr::Const(b) => *b,
            Expr::Var(name) => lookup(name).ok_or_else(|| Error::MissingVariable(name.clone()))?,
            Expr::Not(e) => !e.evaluate_with(lookup)?,
            Expr::And(a, b) => a.evaluate_with(lookup)? & b.evaluate_with(lookup)?,
            Expr::Or(a, b) => a.evaluate_with(lookup)? | b.evaluate_with(lookup)?,
        })
    }

    pub fn evaluate(&self, assignment: &HashMap<String, bool>) -> Result<bool> {
        self.evaluate_with(&|name| assignment.get(name).copied())
    }

    /// Referenced identifiers in order of first appearance, without duplicates.
    pub fn dependencies(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for occ in self.occurrences() {
            if !out.iter().any(|d| d == occ.name) {
                out.push(occ.name.to_string());
            }
        }
        out
    }

    /// Every variable occurrence, left to right, with its negation parity.
    pub fn occurrences(&self) -> Vec<Occurrence<'_>> {
        fn walk<'a>(e: &'a Expr, negated: bool, out: &mut Vec<Occurrence<'a>>) {
            match e {
                Expr::Const(_) => {}
                Expr::Var(name) => out.push(Occurrence { name, negated }),
                Expr::Not(inner) => walk(inner, !negated, out),
                Expr::And(a, b) | Expr::Or(a, b) => {
                    walk(a, negated, out);
                    walk(b, negated, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, false, &mut out);
        out
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.occurrences().iter().any(|o| o.name == name)
    }

    /// Replaces every occurrence of `name` by the constant `value`.
    pub fn substitute(&self, name: &str, value: bool) -> Expr {
        match self {
            Expr::Var(v) if v == name => Expr::Const(value),
            Expr::Const(_) | Expr::Var(_) => self.clone(),
            Expr::Not(e) => Expr::not(e.substitute(name, value)),
            Expr::And(a, b) => Expr::and(a.substitute(name, value), b.substitute(name, value)),
            Expr::Or(a, b) => Expr::or(a.substitute(name, value), b.substitute(name, value)),
        }
    }

    /// Constant folding. The result either is a single constant or contains
    /// no constants at all.
    pub fn simplify(&self) -> Expr {
        match self {
            Expr::Const(_) | Expr::Var(_) => self.clone(),
            Expr::Not(e) => match e.simplify() {
                Expr::Const(b) => Expr::Const(!b),
                Expr::Not(inner) => *inner,
                other => Expr::not(other),
            },
            Expr::And(a, b) => match (a.simplify(), b.simplify()) {
                (Expr::Const(false), _) | (_, Expr::Const(false)) => Expr::Const(false),
                (Expr::Const(true), x) | (x, Expr::Const(true)) => x,
                (x, y) => Expr::and(x, y),
            },
            Expr::Or(a, b) => match (a.simplify(), b.simplify()) {
                (Expr::Const(true), _) | (_, Expr::Const(true)) => Expr::Const(true),
                (Expr::Const(false), x) | (x, Expr::Const(false)) => x,
                (x, y) => Expr::or(x, y),
            },
        }
    }

    pub fn as_const(&self) -> Option<bool> {
        match self {
            Expr::Const(b) => Some(*b),
            _ => None,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Or(..) => 1,
            Expr::And(..) => 2,
            Expr::Not(_) => 3,
            Expr::Const(_) | Expr::Var(_) => 4,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Renders in rule-file syntax. Binary chains are left-associative, so a
/// right operand with the same operator is parenthesized; conjunctions inside
/// a disjunction are parenthesized as well, matching how rules are usually
/// written (`(!p53_A & !p53_K) | E2F1`).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(b) => write!(f, "{}", u8::from(*b)),
            Expr::Var(name) => f.write_str(name),
            Expr::Not(e) => {
                f.write_str("!")?;
                write_operand(f, e, e.precedence() < 3)
            }
            Expr::And(a, b) => {
                write_operand(f, a, a.precedence() < 2)?;
                f.write_str(" & ")?;
                write_operand(f, b, b.precedence() <= 2)
            }
            Expr::Or(a, b) => {
                write_operand(f, a, a.precedence() == 2)?;
                f.write_str(" | ")?;
                write_operand(f, b, b.precedence() <= 2)
            }
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        parse(s)
    }
}

/// True if `name` is a legal node identifier.
pub fn is_identifier(name: &str) -> bool {
    !name.is_empty()
        && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
        && name != "0"
        && name != "1"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assign(pairs: &[(&str, bool)]) -> HashMap<String, bool> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn evaluate_basic_rules() {
        let e = Expr::parse("(!p53_A & !p53_K) | E2F1").unwrap();
        let a = assign(&[("p53_A", false), ("p53_K", false), ("E2F1", false)]);
        assert!(e.evaluate(&a).unwrap());

        let e = Expr::parse("A & !A").unwrap();
        assert!(!e.evaluate(&assign(&[("A", true)])).unwrap());
    }

    #[test]
    fn evaluate_reports_missing_variable() {
        let e = Expr::parse("A | B").unwrap();
        let err = e.evaluate(&assign(&[("A", false)])).unwrap_err();
        assert_eq!(err, Error::MissingVariable("B".into()));
    }

    #[test]
    fn mir145_rule_on_drug_resistance_state() {
        // 9-node order: miR_145 Sp1 MALAT1 BMI1 KLF4 p53 p53_A p53_K E2F1
        let names = [
            "miR_145", "Sp1", "MALAT1", "BMI1", "KLF4", "p53", "p53_A", "p53_K", "E2F1",
        ];
        let a: HashMap<String, bool> = names
            .iter()
            .zip("011110001".chars())
            .map(|(n, c)| (n.to_string(), c == '1'))
            .collect();
        let e = Expr::parse("p53 & !MALAT1 & !BMI1").unwrap();
        assert!(!e.evaluate(&a).unwrap());
    }

    #[test]
    fn dependencies_in_first_appearance_order() {
        assert_eq!(Expr::parse("Sp1").unwrap().dependencies(), vec!["Sp1"]);
        assert_eq!(
            Expr::parse("(BMI1 & Myc) | !miR_145")
                .unwrap()
                .dependencies(),
            vec!["BMI1", "Myc", "miR_145"]
        );
        assert_eq!(Expr::parse("A & A").unwrap().dependencies(), vec!["A"]);
    }

    #[test]
    fn occurrences_track_negation_parity() {
        let e = Expr::parse("!(A & !B) | B").unwrap();
        let occ: Vec<_> = e
            .occurrences()
            .iter()
            .map(|o| (o.name, o.negated))
            .collect();
        assert_eq!(occ, vec![("A", true), ("B", false), ("B", false)]);
    }

    #[test]
    fn substitute_and_fold() {
        let e = Expr::parse("!DNA_Damage").unwrap();
        assert_eq!(
            e.substitute("DNA_Damage", true).simplify(),
            Expr::Const(false)
        );

        let atm = Expr::parse("DNA_Damage & (!HDAC1 | !Wip1 | E2F1 | !BMI1)").unwrap();
        assert_eq!(
            atm.substitute("DNA_Damage", false).simplify(),
            Expr::Const(false)
        );
        let folded = atm.substitute("DNA_Damage", true).simplify();
        assert_eq!(folded.to_string(), "!HDAC1 | !Wip1 | E2F1 | !BMI1");
    }

    #[test]
    fn render_groups_and_inside_or() {
        let cases = [
            ("(!p53_A & !p53_K) | E2F1", "(!p53_A & !p53_K) | E2F1"),
            ("!A & B | C", "(!A & B) | C"),
            ("(A | !B) & !C", "(A | !B) & !C"),
            ("A & (B & C)", "A & (B & C)"),
            ("!(A | B)", "!(A | B)"),
            ("(BMI1) | !miR_145", "BMI1 | !miR_145"),
            ("A | B | C", "A | B | C"),
        ];
        for (input, rendered) in cases {
            assert_eq!(Expr::parse(input).unwrap().to_string(), rendered, "{input}");
        }
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("p53_A"));
        assert!(is_identifier("CDK46_CycD"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("a-b"));
        assert!(!is_identifier("1"));
    }
}
