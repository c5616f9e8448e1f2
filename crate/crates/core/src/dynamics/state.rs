use std::fmt;

use crate::error::{Error, Result};

/// A configuration of the dynamic nodes.
///
/// Node `p` (declaration order among dynamic nodes) is bit `width - 1 - p`
/// of the integer code, so the bitstring reads left to right in node order and
/// the leftmost node is the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    code: u64,
    width: usize,
}

impl State {
    pub fn new(code: u64, width: usize) -> State {
        assert!(width <= 64, "state width {width} exceeds 64");
        assert!(
            width == 64 || code >> width == 0,
            "code {code} wider than {width} bits"
        );
        State { code, width }
    }

    pub fn from_bits(bits: &[bool]) -> State {
        let width = bits.len();
        let code = bits.iter().fold(0u64, |acc, &b| (acc << 1) | u64::from(b));
        State::new(code, width)
    }

    /// Parses a bitstring such as `011110001`.
    pub fn parse(text: &str) -> Result<State> {
        let text = text.trim();
        if text.is_empty() || text.len() > 64 || !text.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::InvalidState(text.to_string()));
        }
        Ok(State::from_bits(
            &text.bytes().map(|b| b == b'1').collect::<Vec<_>>(),
        ))
    }

    pub fn code(self) -> u64 {
        self.code
    }

    pub fn width(self) -> usize {
        self.width
    }

    /// Value of the node at dynamic position `p`.
    pub fn bit(self, p: usize) -> bool {
        assert!(p < self.width);
        self.code >> (self.width - 1 - p) & 1 == 1
    }

    pub fn bits(self) -> Vec<bool> {
        (0..self.width).map(|p| self.bit(p)).collect()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.width {
            f.write_str(if self.bit(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl serde::Serialize for State {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn leftmost_is_most_significant() {
        let s = State::parse("011110001").unwrap();
        assert_eq!(s.code(), 0b011110001);
        assert_eq!(s.width(), 9);
        assert!(!s.bit(0));
        assert!(s.bit(8));
        assert_eq!(s.to_string(), "011110001");
    }

    #[test]
    fn rejects_garbage() {
        assert!(State::parse("").is_err());
        assert!(State::parse("0120").is_err());
    }

    proptest! {
        #[test]
        fn bitstring_round_trip(width in 1usize..=64, raw in any::<u64>()) {
            let code = if width == 64 { raw } else { raw & ((1u64 << width) - 1) };
            let s = State::new(code, width);
            let back = State::parse(&s.to_string()).unwrap();
            prop_assert_eq!(back, s);
            prop_assert_eq!(State::from_bits(&s.bits()), s);
        }
    }
}
