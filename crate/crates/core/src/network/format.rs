//! BoolNet-compatible rule files.
//!
//! ```text
//! # comment
//! #! outputs: Proliferation, Apoptosis
//! #! pin: DNA_Damage=1
//! targets, factors
//! ATM, DNA_Damage & (!HDAC1 | !Wip1)
//! DNA_Damage, DNA_Damage
//! ```
//!
//! `#!` lines are directives; BoolNet itself treats them as comments.

use super::Network;
use crate::error::{Error, Result};
use crate::expr::{self, Expr};

fn parse_bit(text: &str) -> Option<bool> {
    match text.trim() {
        "0" => Some(false),
        "1" => Some(true),
        _ => None,
    }
}

/// Parses `NODE=V` pin directives.
pub(crate) fn parse_pin(text: &str) -> Result<(String, bool)> {
    let (node, value) = text.split_once('=').ok_or_else(|| {
        Error::InvalidArgument(format!("pin `{text}` is not of the form NODE=0|1"))
    })?;
    let value = parse_bit(value)
        .ok_or_else(|| Error::InvalidArgument(format!("pin `{text}` has a non-binary value")))?;
    Ok((node.trim().to_string(), value))
}

pub fn parse_network(name: impl Into<String>, text: &str) -> Result<Network> {
    let mut header_seen = false;
    let mut rules: Vec<(String, Expr, usize)> = Vec::new();
    let mut outputs: Vec<(String, usize)> = Vec::new();
    let mut pins: Vec<(String, bool, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if let Some(directive) = line.strip_prefix("#!") {
            let (key, value) = directive.split_once(':').ok_or_else(|| {
                Error::InvalidNetwork("malformed directive".into()).at_line(lineno)
            })?;
            let items = value.split(',').map(str::trim).filter(|s| !s.is_empty());
            match key.trim() {
                "outputs" => outputs.extend(items.map(|s| (s.to_string(), lineno))),
                "pin" => {
                    for item in items {
                        let (node, v) = parse_pin(item).map_err(|e| e.at_line(lineno))?;
                        pins.push((node, v, lineno));
                    }
                }
                other => {
                    return Err(
                        Error::InvalidNetwork(format!("unknown directive `{other}`"))
                            .at_line(lineno),
                    )
                }
            }
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !header_seen {
            let normalized: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            if !normalized.eq_ignore_ascii_case("targets,factors") {
                return Err(
                    Error::InvalidNetwork("expected header `targets, factors`".into())
                        .at_line(lineno),
                );
            }
            header_seen = true;
            continue;
        }
        let (node, rule) = line.split_once(',').ok_or_else(|| {
            Error::InvalidNetwork("expected `node, expression`".into()).at_line(lineno)
        })?;
        let node = node.trim();
        if !expr::is_identifier(node) {
            return Err(
                Error::InvalidNetwork(format!("illegal node name `{node}`")).at_line(lineno)
            );
        }
        let rule = expr::parse(rule).map_err(|e| e.at_line(lineno))?;
        if rules.iter().any(|(n, _, _)| n == node) {
            return Err(Error::DuplicateNode(node.to_string()).at_line(lineno));
        }
        rules.push((node.to_string(), rule, lineno));
    }
    if !header_seen {
        return Err(Error::InvalidNetwork(
            "missing header `targets, factors`".into(),
        ));
    }

    let line_of = |node: &str| rules.iter().find(|(n, _, _)| n == node).map(|r| r.2);
    for (node, rule, lineno) in &rules {
        for d in rule.dependencies() {
            if line_of(&d).is_none() {
                return Err(Error::UndeclaredDependency {
                    node: node.clone(),
                    dependency: d,
                }
                .at_line(*lineno));
            }
        }
    }

    let mut net = Network::new(name, rules.iter().map(|(n, r, _)| (n.clone(), r.clone())))?;
    if !outputs.is_empty() {
        let names: Vec<&str> = outputs.iter().map(|(n, _)| n.as_str()).collect();
        net = net
            .with_outputs(&names)
            .map_err(|e| e.at_line(outputs[0].1))?;
    }
    for (node, value, lineno) in pins {
        net = net.pin(&node, value).map_err(|e| e.at_line(lineno))?;
    }
    Ok(net)
}

pub(crate) fn write_network(net: &Network) -> String {
    let mut out = String::new();
    let outputs: Vec<&str> = net.outputs().collect();
    if !outputs.is_empty() {
        out.push_str(&format!("#! outputs: {}\n", outputs.join(", ")));
    }
    let pins: Vec<String> = net
        .pinned()
        .map(|(n, v)| format!("{n}={}", u8::from(v)))
        .collect();
    if !pins.is_empty() {
        out.push_str(&format!("#! pin: {}\n", pins.join(", ")));
    }
    out.push_str("targets, factors\n");
    for (node, rule) in net.rules() {
        out.push_str(&format!("{node}, {rule}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_directives_and_comments() {
        let text = "# demo\n#! outputs: C\n#! pin: A=1\ntargets, factors\nA, A\nB, A & !B # inline\nC, B\n";
        let net = parse_network("demo", text).unwrap();
        assert_eq!(net.nodes(), ["A", "B", "C"]);
        assert_eq!(net.outputs().collect::<Vec<_>>(), vec!["C"]);
        assert_eq!(net.pinned_value("A"), Some(true));
        assert_eq!(net.dynamic_nodes(), vec!["B"]);

        let again = parse_network("demo", &net.to_text()).unwrap();
        assert_eq!(again, net);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_network("x", "targets, factors\nA, B\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Line { line: 2, ref source } if matches!(**source, Error::UndeclaredDependency { .. })
        ));

        let err = parse_network("x", "targets, factors\nA, A\nB, (A &\n").unwrap_err();
        assert!(
            matches!(err, Error::Line { line: 3, ref source } if matches!(**source, Error::Syntax { .. }))
        );

        let err = parse_network("x", "targets, factors\nA, A\nA, !A\n").unwrap_err();
        assert!(matches!(err, Error::Line { line: 3, .. }));

        assert!(parse_network("x", "A, A\n").is_err());
        assert!(parse_network("x", "").is_err());
    }

    #[test]
    fn pin_syntax() {
        assert_eq!(
            parse_pin("DNA_Damage=1").unwrap(),
            ("DNA_Damage".into(), true)
        );
        assert_eq!(parse_pin(" X = 0 ").unwrap(), ("X".into(), false));
        assert!(parse_pin("X=2").is_err());
        assert!(parse_pin("X").is_err());
    }
}
