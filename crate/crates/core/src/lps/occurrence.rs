use std::ops::Range;

use crate::qsim::{pattern_match, Side, Sim, View};
use crate::strings::QueryReader;

/// Occurrences of `P = reverse(A[r..r + p_len))` in the window
/// `S = A[r..r + s_len)`, recovered from the rightmost and second-rightmost
/// occurrences. Offsets are relative to the window start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceSet {
    pub r: usize,
    pub s_len: usize,
    pub p_len: usize,
    pub rightmost: usize,
    pub second: Option<usize>,
}

impl OccurrenceSet {
    /// Gap between consecutive occurrences, when there are several.
    pub fn period(&self) -> Option<usize> {
        self.second.map(|o| self.rightmost - o)
    }

    /// All occurrence offsets, ascending.
    pub fn members(&self) -> Vec<usize> {
        match self.period() {
            None => vec![self.rightmost],
            Some(q) => (0..=self.rightmost / q).rev().map(|i| self.rightmost - i * q).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.period().map_or(1, |q| self.rightmost / q + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Doubled centre of the palindrome that pairs the pattern's source
    /// with the occurrence at offset `e`.
    pub fn center2(&self, e: usize) -> usize {
        2 * self.r + e + self.p_len - 1
    }

    /// Candidate centres in doubled coordinates, ascending and spaced by
    /// the period.
    pub fn centers(&self) -> CandidateCenters {
        CandidateCenters {
            doubled: self.members().into_iter().map(|e| self.center2(e)).collect(),
        }
    }

    pub fn window(&self) -> Range<usize> {
        self.r..self.r + self.s_len
    }
}

/// Possible palindrome centres as doubled integers, so that a value `c`
/// stands for the position `c / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateCenters {
    pub doubled: Vec<usize>,
}

/// Window length and pattern length used when checking position `r`.
pub(crate) fn shape(n: usize, r: usize, d: usize) -> (usize, usize) {
    (d.min(n - r), d.div_ceil(2))
}

/// Finds the occurrence set for position `r` and target length `d`, or
/// `None` when the pattern does not occur in the window.
pub fn occurrence_set(sim: &Sim, reader: QueryReader<'_>, r: usize, d: usize) -> Option<OccurrenceSet> {
    let (s_len, p_len) = shape(reader.len(), r, d);
    if p_len > s_len {
        return None;
    }
    let pattern = View::new(reader, r..r + p_len).reversed();
    let rightmost = pattern_match(sim, View::new(reader, r..r + s_len), pattern, Side::Rightmost)?;
    let before = rightmost + p_len - 1;
    let second = if before >= p_len {
        pattern_match(sim, View::new(reader, r..r + before), pattern, Side::Rightmost)
    } else {
        None
    };
    Some(OccurrenceSet {
        r,
        s_len,
        p_len,
        rightmost,
        second,
    })
}

/// Every occurrence offset by direct comparison.
pub fn naive_occurrences(s: &[crate::strings::Symbol], r: usize, d: usize) -> Vec<usize> {
    let (s_len, p_len) = shape(s.len(), r, d);
    if p_len > s_len {
        return Vec::new();
    }
    let pattern: Vec<_> = s[r..r + p_len].iter().rev().copied().collect();
    (0..=s_len - p_len)
        .filter(|&e| s[r + e..r + e + p_len] == pattern[..])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{periodic_text, random_text};
    use crate::strings::Text;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn complete_on(t: &Text, d: usize) {
        let sim = Sim::new(0);
        let n = t.len();
        for r in 0..n {
            let naive = naive_occurrences(t.symbols(), r, d);
            let got = occurrence_set(&sim, sim.reader(t), r, d).map(|o| o.members()).unwrap_or_default();
            assert_eq!(got, naive, "r = {r}, d = {d}");
        }
    }

    #[test]
    fn complete_on_periodic_texts() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for i in 0..60 {
            let t = periodic_text(&mut rng, 60, 1 + i % 5, 3, i % 4);
            for d in 2..=30 {
                complete_on(&t, d);
            }
        }
    }

    #[test]
    fn abacaba_whole_string() {
        let t = Text::from_utf8("abacaba").unwrap();
        let sim = Sim::new(0);
        let occ = occurrence_set(&sim, sim.reader(&t), 0, 7).unwrap();
        // P = reverse("abac") = "caba", found at offset 3
        assert_eq!(occ.members(), vec![3]);
        assert_eq!(occ.centers().doubled, vec![6]);
    }

    proptest! {
        #[test]
        fn complete_on_random_binary(seed in any::<u64>(), d in 2usize..24) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = random_text(&mut rng, 40, 2);
            complete_on(&t, d);
        }
    }
}
