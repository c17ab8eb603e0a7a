use std::ops::Range;

use super::text::{QueryReader, Symbol};

/// Smallest `q > 0` with `s[i] == s[i + q]` for every valid `i`.
pub fn period(s: &[Symbol]) -> usize {
    assert!(!s.is_empty(), "period of an empty string");
    let mut border = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = border[i - 1];
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    s.len() - border[s.len() - 1]
}

pub fn is_periodic(s: &[Symbol], q: usize) -> bool {
    q > 0 && (0..s.len().saturating_sub(q)).all(|i| s[i] == s[i + q])
}

/// Grows a `q`-periodic anchor to a maximal `q`-periodic interval,
/// moving each endpoint at most `limit` positions. Right end first.
pub fn extend_periodic(
    reader: &QueryReader<'_>,
    anchor: Range<usize>,
    q: usize,
    limit: usize,
) -> Range<usize> {
    assert!(q > 0 && anchor.start < anchor.end && anchor.end <= reader.len());
    let n = reader.len();
    let (mut x, mut y) = (anchor.start, anchor.end);
    let stop = y.saturating_add(limit).min(n);
    while y < stop && (y < x + q || reader.get(y) == reader.get(y - q)) {
        y += 1;
    }
    let stop = x.saturating_sub(limit);
    while x > stop && (x - 1 + q >= y || reader.get(x - 1) == reader.get(x - 1 + q)) {
        x -= 1;
    }
    x..y
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Length of the agreeing run between two aligned positions.
///
/// `Forward` compares `a[i+k]` with `b[j+k]` for `k = 0, 1, ..`;
/// `Backward` compares `a[i-1-k]` with `b[j-1-k]`. Stops at `limit`.
pub fn extend_match(
    a: &QueryReader<'_>,
    i: usize,
    b: &QueryReader<'_>,
    j: usize,
    dir: Direction,
    limit: usize,
) -> usize {
    let room = match dir {
        Direction::Forward => (a.len().saturating_sub(i)).min(b.len().saturating_sub(j)),
        Direction::Backward => i.min(j),
    };
    let cap = room.min(limit);
    let mut k = 0;
    while k < cap {
        let same = match dir {
            Direction::Forward => a.get(i + k) == b.get(j + k),
            Direction::Backward => a.get(i - 1 - k) == b.get(j - 1 - k),
        };
        if !same {
            break;
        }
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::Text;
    use proptest::prelude::*;
    use std::cell::Cell;

    fn syms(s: &str) -> Vec<Symbol> {
        s.chars().map(u32::from).collect()
    }

    #[test]
    fn period_examples() {
        assert_eq!(period(&syms("ababab")), 2);
        assert_eq!(period(&syms("aaaa")), 1);
        assert_eq!(period(&syms("abcab")), 3);
        assert_eq!(period(&syms("a")), 1);
    }

    #[test]
    fn extend_periodic_examples() {
        let t = Text::from_utf8("xababababy").unwrap();
        let reads = Cell::new(0);
        let r = QueryReader::new(&t, &reads);
        assert_eq!(extend_periodic(&r, 1..5, 2, 10), 1..9);
        assert_eq!(extend_periodic(&r, 1..9, 2, 10), 1..9);
        assert_eq!(extend_periodic(&r, 3..7, 2, 0), 3..7);
        assert_eq!(extend_periodic(&r, 3..7, 2, 1), 2..8);
        assert!(reads.get() > 0);
    }

    #[test]
    fn extend_match_both_ways() {
        let a = Text::from_utf8("zzabcdq").unwrap();
        let b = Text::from_utf8("abcdrr").unwrap();
        let reads = Cell::new(0);
        let (ra, rb) = (QueryReader::new(&a, &reads), QueryReader::new(&b, &reads));
        assert_eq!(extend_match(&ra, 3, &rb, 1, Direction::Forward, 10), 3);
        assert_eq!(extend_match(&ra, 3, &rb, 1, Direction::Backward, 10), 1);
        assert_eq!(extend_match(&ra, 3, &rb, 1, Direction::Forward, 2), 2);
    }

    /// Every q with s q-periodic, by scanning.
    fn periods(s: &[Symbol]) -> Vec<usize> {
        (1..=s.len()).filter(|&q| is_periodic(s, q)).collect()
    }

    proptest! {
        #[test]
        fn period_is_minimal_and_divides_short_periods(s in prop::collection::vec(0u32..2, 1..40)) {
            let p = period(&s);
            let all = periods(&s);
            prop_assert_eq!(all[0], p);
            for q in all {
                if q <= s.len() / 2 {
                    prop_assert_eq!(q % p, 0);
                }
            }
        }

        #[test]
        fn extension_is_periodic_and_maximal(
            s in prop::collection::vec(0u32..2, 4..60),
            q in 1usize..4,
            start in 0usize..60,
            len in 1usize..8,
            limit in 0usize..30,
        ) {
            let start = start % s.len();
            let end = (start + len).min(s.len());
            prop_assume!(is_periodic(&s[start..end], q));
            let t = Text::new(s.clone(), 2).unwrap();
            let reads = Cell::new(0);
            let r = QueryReader::new(&t, &reads);
            let out = extend_periodic(&r, start..end, q, limit);
            prop_assert!(out.start <= start && out.end >= end);
            prop_assert!(start - out.start <= limit && out.end - end <= limit);
            prop_assert!(is_periodic(&s[out.clone()], q));
            if out.start > 0 && start - out.start < limit {
                prop_assert!(!is_periodic(&s[out.start - 1..out.end], q));
            }
            if out.end < s.len() && out.end - end < limit {
                prop_assert!(!is_periodic(&s[out.start..out.end + 1], q));
            }
        }
    }
}
