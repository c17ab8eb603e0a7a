use serde::{Deserialize, Serialize};

use super::text::Text;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    CommonSubstring,
    Palindrome,
    UlamEstimate,
}

/// An answer together with the interval that certifies it.
///
/// Positions are 1-based. An empty witness has length 0 and positions 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchWitness {
    pub kind: WitnessKind,
    pub pos_a: usize,
    pub pos_b: usize,
    pub length: usize,
    pub value: f64,
}

impl MatchWitness {
    /// Common substring of `len` symbols starting at 0-based offsets.
    pub fn common(start_a: usize, start_b: usize, len: usize) -> Self {
        if len == 0 {
            return Self::empty_common();
        }
        MatchWitness {
            kind: WitnessKind::CommonSubstring,
            pos_a: start_a + 1,
            pos_b: start_b + 1,
            length: len,
            value: len as f64,
        }
    }

    pub fn empty_common() -> Self {
        MatchWitness {
            kind: WitnessKind::CommonSubstring,
            pos_a: 0,
            pos_b: 0,
            length: 0,
            value: 0.0,
        }
    }

    /// Palindrome of `len` symbols starting at 0-based offset `start`.
    pub fn palindrome(start: usize, len: usize) -> Self {
        MatchWitness {
            kind: WitnessKind::Palindrome,
            pos_a: start + 1,
            pos_b: 0,
            length: len,
            value: len as f64,
        }
    }

    pub fn ulam(value: f64) -> Self {
        MatchWitness {
            kind: WitnessKind::UlamEstimate,
            pos_a: 0,
            pos_b: 0,
            length: 0,
            value,
        }
    }

    /// 0-based start in the first string.
    pub fn start_a(&self) -> usize {
        self.pos_a.saturating_sub(1)
    }

    /// 0-based start in the second string.
    pub fn start_b(&self) -> usize {
        self.pos_b.saturating_sub(1)
    }

    /// Direct comparison of the two indicated intervals.
    pub fn verify_common(&self, a: &Text, b: &Text) -> bool {
        if self.kind != WitnessKind::CommonSubstring {
            return false;
        }
        if self.length == 0 {
            return true;
        }
        let (sa, sb, len) = (self.start_a(), self.start_b(), self.length);
        if self.pos_a == 0 || self.pos_b == 0 || sa + len > a.len() || sb + len > b.len() {
            return false;
        }
        a.symbols()[sa..sa + len] == b.symbols()[sb..sb + len]
    }

    /// Reads the indicated interval forwards and backwards.
    pub fn verify_palindrome(&self, a: &Text) -> bool {
        if self.kind != WitnessKind::Palindrome || self.pos_a == 0 {
            return false;
        }
        let (s, len) = (self.start_a(), self.length);
        if len == 0 || s + len > a.len() {
            return false;
        }
        let w = &a.symbols()[s..s + len];
        w.iter().eq(w.iter().rev())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        let w = MatchWitness::common(2, 0, 3);
        assert_eq!((w.pos_a, w.pos_b), (3, 1));
        let a = Text::from_utf8("ababc").unwrap();
        let b = Text::from_utf8("abcba").unwrap();
        assert!(w.verify_common(&a, &b));
        assert!(!MatchWitness::common(0, 0, 3).verify_common(&a, &b));
    }

    #[test]
    fn palindrome_verification() {
        let a = Text::from_utf8("xabbay").unwrap();
        assert!(MatchWitness::palindrome(1, 4).verify_palindrome(&a));
        assert!(!MatchWitness::palindrome(0, 4).verify_palindrome(&a));
        assert!(!MatchWitness::palindrome(3, 4).verify_palindrome(&a));
    }

    #[test]
    fn empty_common_is_trivially_valid() {
        let a = Text::from_utf8("a").unwrap();
        let b = Text::from_utf8("b").unwrap();
        assert!(MatchWitness::empty_common().verify_common(&a, &b));
        assert_eq!(MatchWitness::common(4, 4, 0).pos_a, 0);
    }
}
