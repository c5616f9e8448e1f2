//! Exhaustive search for alternative local rules that keep exactly a desired
//! set of fixed points.
//!
//! For every target node and every set of one to three regulators (other
//! dynamic nodes, in declaration order) a small grammar of candidate
//! expressions is generated. A candidate first has to reproduce the target's
//! value on every desired fixed point (local check). Only then is the rule
//! substituted and the complete parallel attractor set recomputed (global
//! check).

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{analyze, State, Stepper};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::network::Network;

/// Candidate expressions over `regulators`.
///
/// One regulator gives `v, !v`; two give every sign assignment combined with
/// `&` and `|` (8 expressions); three give, per sign assignment, `x & y & z`,
/// `x | y | z`, `(x & y) | z` and `(x | y) & z` (32 expressions). Signs vary
/// with the first regulator outermost, positive before negative.
pub fn generate_candidates<S: AsRef<str>>(regulators: &[S]) -> Result<Vec<Expr>> {
    let n = regulators.len();
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "candidate generation needs 1 to 3 regulators, got {n}"
        )));
    }
    let mut out = Vec::with_capacity([2, 8, 32][n - 1]);
    for signs in 0..1u32 << n {
        let lit = |k: usize| Expr::literal(regulators[k].as_ref(), signs >> (n - 1 - k) & 1 == 1);
        match n {
            1 => out.push(lit(0)),
            2 => {
                out.push(Expr::and(lit(0), lit(1)));
                out.push(Expr::or(lit(0), lit(1)));
            }
            _ => {
                out.push(Expr::and(Expr::and(lit(0), lit(1)), lit(2)));
                out.push(Expr::or(Expr::or(lit(0), lit(1)), lit(2)));
                out.push(Expr::or(Expr::and(lit(0), lit(1)), lit(2)));
                out.push(Expr::and(Expr::or(lit(0), lit(1)), lit(2)));
            }
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|e| seen.insert(e.to_string()));
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct FitOptions {
    pub max_regulators: usize,
    /// Compare only fixed-point sets in the global check, ignoring cycles.
    pub fixed_points_only: bool,
    pub max_width: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            max_regulators: 3,
            fixed_points_only: false,
            max_width: crate::dynamics::max_width_from_env(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateRule {
    pub target: String,
    pub expression: String,
    pub regulators: Vec<String>,
    pub local_pass: bool,
    pub global_pass: bool,
    #[serde(skip)]
    pub expr: Expr,
}

#[derive(Debug, Clone, Serialize)]
pub struct TargetFit {
    pub target: String,
    pub original_rule: String,
    pub generated: usize,
    pub local_passed: usize,
    pub global_passed: usize,
    /// Candidates that passed the local check, with the global verdict.
    pub candidates: Vec<CandidateRule>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FitResult {
    pub network: String,
    pub desired: Vec<State>,
    pub fixed_points_only: bool,
    pub max_regulators: usize,
    pub targets: Vec<TargetFit>,
}

impl FitResult {
    /// Candidates that passed both checks, in search order.
    pub fn passing(&self) -> impl Iterator<Item = &CandidateRule> {
        self.targets
            .iter()
            .flat_map(|t| t.candidates.iter().filter(|c| c.global_pass))
    }

    pub fn passing_count(&self) -> usize {
        self.passing().count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fit result serializes")
    }
}

/// Fixed points of `net` under the parallel schedule.
pub fn parallel_fixed_points(net: &Network, max_width: usize) -> Result<Vec<State>> {
    let stepper = Stepper::parallel(net)?;
    let width = stepper.width();
    let mut fps: Vec<State> = analyze(&stepper, max_width)?
        .into_iter()
        .filter(|a| a.is_fixed_point())
        .map(|a| State::new(a.states()[0], width))
        .collect();
    fps.sort_by_key(|s| s.code());
    Ok(fps)
}

fn global_check(
    net: &Network,
    target: &str,
    expr: &Expr,
    desired: &BTreeSet<u64>,
    options: &FitOptions,
) -> Result<bool> {
    let candidate = net.apply_rule(target, expr.clone())?;
    let attractors = analyze(&Stepper::parallel(&candidate)?, options.max_width)?;
    let mut fixed = BTreeSet::new();
    for a in &attractors {
        if a.is_fixed_point() {
            fixed.insert(a.states()[0]);
        } else if !options.fixed_points_only {
            return Ok(false);
        }
    }
    Ok(fixed == *desired)
}

/// Searches replacement rules for each of `targets` (all dynamic nodes when
/// `None`) that keep exactly the fixed points `desired`.
pub fn fit_rules(
    net: &Network,
    targets: Option<&[&str]>,
    desired: &[State],
    options: &FitOptions,
) -> Result<FitResult> {
    if desired.is_empty() {
        return Err(Error::InvalidArgument(
            "desired attractor set is empty".into(),
        ));
    }
    let width = net.width();
    if width > options.max_width {
        return Err(Error::WidthGuard {
            width,
            max: options.max_width,
        });
    }
    if !(1..=3).contains(&options.max_regulators) {
        return Err(Error::InvalidArgument(format!(
            "max regulators must be 1 to 3, got {}",
            options.max_regulators
        )));
    }
    if let Some(s) = desired.iter().find(|s| s.width() != width) {
        return Err(Error::InvalidState(format!(
            "{s} has {} bits, the network has {width} dynamic nodes",
            s.width()
        )));
    }
    let dynamic: Vec<String> = net.dynamic_nodes().iter().map(|s| s.to_string()).collect();
    let targets: Vec<String> = match targets {
        None => dynamic.clone(),
        Some(list) => {
            for t in list {
                if !dynamic.iter().any(|d| d == t) {
                    return Err(Error::UnknownNode(t.to_string()));
                }
            }
            dynamic
                .iter()
                .filter(|d| list.contains(&d.as_str()))
                .cloned()
                .collect()
        }
    };
    let desired_codes: BTreeSet<u64> = desired.iter().map(|s| s.code()).collect();

    let mut fits = Vec::with_capacity(targets.len());
    for target in &targets {
        let t = dynamic.iter().position(|d| d == target).unwrap();
        let inputs: Vec<&String> = dynamic.iter().filter(|d| *d != target).collect();
        let mut generated = 0;
        let mut local: Vec<CandidateRule> = Vec::new();
        for r in 1..=options.max_regulators.min(inputs.len()) {
            for regulators in inputs.iter().copied().combinations(r) {
                for expr in generate_candidates(&regulators)? {
                    generated += 1;
                    let reproduces = desired.iter().all(|s| {
                        let value = expr
                            .evaluate_with(&|name| {
                                dynamic.iter().position(|d| d == name).map(|p| s.bit(p))
                            })
                            .expect("regulators are dynamic nodes");
                        value == s.bit(t)
                    });
                    if reproduces {
                        local.push(CandidateRule {
                            target: target.clone(),
                            expression: expr.to_string(),
                            regulators: regulators.iter().map(|s| s.to_string()).collect(),
                            local_pass: true,
                            global_pass: false,
                            expr,
                        });
                    }
                }
            }
        }
        let verdicts = local
            .par_iter()
            .map(|c| global_check(net, target, &c.expr, &desired_codes, options))
            .collect::<Result<Vec<bool>>>()?;
        for (c, ok) in local.iter_mut().zip(verdicts) {
            c.global_pass = ok;
        }
        let index = net.index_of(target).unwrap();
        fits.push(TargetFit {
            target: target.clone(),
            original_rule: net.effective_rule(index).to_string(),
            generated,
            local_passed: local.len(),
            global_passed: local.iter().filter(|c| c.global_pass).count(),
            candidates: local,
        });
    }
    Ok(FitResult {
        network: net.name().to_string(),
        desired: desired.to_vec(),
        fixed_points_only: options.fixed_points_only,
        max_regulators: options.max_regulators,
        targets: fits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: Vec<Expr>) -> Vec<String> {
        v.iter().map(Expr::to_string).collect()
    }

    #[test]
    fn grammar_sizes() {
        assert_eq!(strings(generate_candidates(&["X"]).unwrap()), ["X", "!X"]);
        let two = strings(generate_candidates(&["X", "Y"]).unwrap());
        assert_eq!(two.len(), 8);
        for e in ["X & Y", "!X & Y", "X | !Y", "!X | !Y"] {
            assert!(two.iter().any(|s| s == e), "{e}");
        }
        let three = strings(generate_candidates(&["X", "Y", "Z"]).unwrap());
        assert_eq!(three.len(), 32);
        for e in [
            "(!X & Y) | Z",
            "(X | !Y) & !Z",
            "(X & Y) | !Z",
            "!X | Y | Z",
            "!X & !Y & Z",
        ] {
            assert!(three.iter().any(|s| s == e), "{e}");
        }
        assert!(generate_candidates::<&str>(&[]).is_err());
        assert!(generate_candidates(&["A", "B", "C", "D"]).is_err());
    }

    #[test]
    fn candidates_parse_back() {
        for e in generate_candidates(&["X", "Y", "Z"]).unwrap() {
            assert_eq!(Expr::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn stage_one_filters() {
        let net = Network::from_text("t", "targets, factors\nA, B\nB, A\n").unwrap();
        let desired = [State::parse("11").unwrap()];
        let fit = fit_rules(&net, Some(&["A"]), &desired, &FitOptions::default()).unwrap();
        let t = &fit.targets[0];
        assert_eq!(t.generated, 2);
        assert_eq!(t.local_passed, 1);
        assert_eq!(t.candidates[0].expression, "B");
        // A = B keeps both 00 and 11 as fixed points
        assert!(!t.candidates[0].global_pass);
    }

    #[test]
    fn empty_desired_is_rejected() {
        let net = Network::from_text("t", "targets, factors\nA, B\nB, A\n").unwrap();
        assert!(fit_rules(&net, None, &[], &FitOptions::default()).is_err());
    }
}
