use std::ops::Range;

use super::sim::{log_factor, Sim};
use crate::strings::{QueryReader, Symbol};

/// A read-through window onto a text, optionally reversed.
#[derive(Clone, Copy)]
pub struct View<'a> {
    reader: QueryReader<'a>,
    start: usize,
    len: usize,
    reversed: bool,
}

impl<'a> View<'a> {
    pub fn new(reader: QueryReader<'a>, range: Range<usize>) -> Self {
        assert!(range.start <= range.end && range.end <= reader.len());
        View {
            reader,
            start: range.start,
            len: range.end - range.start,
            reversed: false,
        }
    }

    pub fn reversed(mut self) -> Self {
        self.reversed = !self.reversed;
        self
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Symbol {
        debug_assert!(i < self.len);
        if self.reversed {
            self.reader.get(self.start + self.len - 1 - i)
        } else {
            self.reader.get(self.start + i)
        }
    }

    fn read_all(&self) -> Vec<Symbol> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Leftmost,
    Rightmost,
}

/// Offset of the leftmost or rightmost occurrence of `pattern` in `text`.
///
/// Charges `(sqrt m + sqrt p) * log(m + p)`; the simulation is a linear-time
/// matcher reading both views once.
pub fn pattern_match(sim: &Sim, text: View<'_>, pattern: View<'_>, side: Side) -> Option<usize> {
    let (m, p) = (text.len(), pattern.len());
    assert!(p >= 1, "empty pattern");
    sim.charge(
        "pattern_match",
        ((m as f64).sqrt() + (p as f64).sqrt()) * log_factor(m + p),
    );
    if p > m {
        return None;
    }
    let pat = pattern.read_all();
    let hay = text.read_all();
    let found = match side {
        Side::Leftmost => kmp_find(&hay, &pat, false),
        Side::Rightmost => kmp_find(&hay, &pat, true),
    };
    if found.is_some() && sim.inject_failure() {
        return None;
    }
    found
}

fn kmp_find(hay: &[Symbol], pat: &[Symbol], last: bool) -> Option<usize> {
    let mut fail = vec![0usize; pat.len()];
    for i in 1..pat.len() {
        let mut k = fail[i - 1];
        while k > 0 && pat[i] != pat[k] {
            k = fail[k - 1];
        }
        if pat[i] == pat[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut found = None;
    let mut k = 0;
    for (i, &c) in hay.iter().enumerate() {
        while k > 0 && c != pat[k] {
            k = fail[k - 1];
        }
        if c == pat[k] {
            k += 1;
        }
        if k == pat.len() {
            found = Some(i + 1 - pat.len());
            if !last {
                return found;
            }
            k = fail[k - 1];
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::Text;
    use proptest::prelude::*;

    fn run(text: &str, pat: &str, side: Side) -> Option<usize> {
        let sim = Sim::new(0);
        let (t, p) = (Text::from_utf8(text).unwrap(), Text::from_utf8(pat).unwrap());
        let (rt, rp) = (sim.reader(&t), sim.reader(&p));
        pattern_match(&sim, View::new(rt, 0..t.len()), View::new(rp, 0..p.len()), side)
    }

    #[test]
    fn examples() {
        assert_eq!(run("ababa", "aba", Side::Leftmost), Some(0));
        assert_eq!(run("ababa", "aba", Side::Rightmost), Some(2));
        assert_eq!(run("ababa", "abc", Side::Leftmost), None);
        assert_eq!(run("ab", "abc", Side::Rightmost), None);
    }

    #[test]
    fn reversed_view_and_charge() {
        let sim = Sim::new(0);
        let t = Text::from_utf8("xxcbayy").unwrap();
        let p = Text::from_utf8("abc").unwrap();
        let pv = View::new(sim.reader(&p), 0..3).reversed();
        let tv = View::new(sim.reader(&t), 0..7);
        assert_eq!(pattern_match(&sim, tv, pv, Side::Leftmost), Some(2));
        let want = (7f64.sqrt() + 3f64.sqrt()) * 4.0;
        assert!((sim.ledger().charged_cost() - want).abs() < 1e-12);
    }

    fn naive(hay: &[u32], pat: &[u32]) -> Vec<usize> {
        if pat.len() > hay.len() {
            return vec![];
        }
        (0..=hay.len() - pat.len())
            .filter(|&i| hay[i..i + pat.len()] == *pat)
            .collect()
    }

    proptest! {
        #[test]
        fn agrees_with_naive_scan(
            hay in prop::collection::vec(0u32..2, 1..60),
            pat in prop::collection::vec(0u32..2, 1..6),
        ) {
            let occ = naive(&hay, &pat);
            prop_assert_eq!(kmp_find(&hay, &pat, false), occ.first().copied());
            prop_assert_eq!(kmp_find(&hay, &pat, true), occ.last().copied());
        }
    }
}
