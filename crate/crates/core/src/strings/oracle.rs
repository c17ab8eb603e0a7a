//! Exact classical answers. These read raw symbols and never touch a ledger.

use std::collections::HashMap;

use super::text::{Symbol, Text};
use super::witness::MatchWitness;
use crate::error::{Error, Result};

struct SuffixAutomaton {
    len: Vec<usize>,
    link: Vec<Option<usize>>,
    first_end: Vec<usize>,
    next: Vec<HashMap<Symbol, usize>>,
}

impl SuffixAutomaton {
    fn build(s: &[Symbol]) -> Self {
        let mut sa = SuffixAutomaton {
            len: vec![0],
            link: vec![None],
            first_end: vec![0],
            next: vec![HashMap::new()],
        };
        let mut last = 0;
        for (i, &c) in s.iter().enumerate() {
            let cur = sa.push(sa.len[last] + 1, i);
            let mut p = Some(last);
            while let Some(pp) = p {
                if sa.next[pp].contains_key(&c) {
                    break;
                }
                sa.next[pp].insert(c, cur);
                p = sa.link[pp];
            }
            match p {
                None => sa.link[cur] = Some(0),
                Some(pp) => {
                    let q = sa.next[pp][&c];
                    if sa.len[pp] + 1 == sa.len[q] {
                        sa.link[cur] = Some(q);
                    } else {
                        let clone = sa.push(sa.len[pp] + 1, sa.first_end[q]);
                        sa.link[clone] = sa.link[q];
                        sa.next[clone] = sa.next[q].clone();
                        let mut p2 = Some(pp);
                        while let Some(x) = p2 {
                            match sa.next[x].get(&c) {
                                Some(&t) if t == q => {
                                    sa.next[x].insert(c, clone);
                                    p2 = sa.link[x];
                                }
                                _ => break,
                            }
                        }
                        sa.link[q] = Some(clone);
                        sa.link[cur] = Some(clone);
                    }
                }
            }
            last = cur;
        }
        sa
    }

    fn push(&mut self, len: usize, first_end: usize) -> usize {
        self.len.push(len);
        self.link.push(None);
        self.first_end.push(first_end);
        self.next.push(HashMap::new());
        self.len.len() - 1
    }
}

/// Longest common substring via a suffix automaton of `a`.
///
/// Ties resolve to the earliest end position in `b`.
pub fn lcs_oracle(a: &Text, b: &Text) -> MatchWitness {
    lcs_slices(a.symbols(), b.symbols())
}

pub(crate) fn lcs_slices(a: &[Symbol], b: &[Symbol]) -> MatchWitness {
    let sa = SuffixAutomaton::build(a);
    let (mut state, mut cur) = (0usize, 0usize);
    let (mut best, mut best_state, mut best_end_b) = (0usize, 0usize, 0usize);
    for (j, &c) in b.iter().enumerate() {
        loop {
            if let Some(&to) = sa.next[state].get(&c) {
                state = to;
                cur += 1;
                break;
            }
            match sa.link[state] {
                Some(l) => {
                    state = l;
                    cur = sa.len[state];
                }
                None => {
                    cur = 0;
                    break;
                }
            }
        }
        if cur > best {
            best = cur;
            best_state = state;
            best_end_b = j;
        }
    }
    if best == 0 {
        return MatchWitness::empty_common();
    }
    let end_a = sa.first_end[best_state];
    MatchWitness::common(end_a + 1 - best, best_end_b + 1 - best, best)
}

/// Longest palindromic substring (Manacher). Ties resolve leftmost.
pub fn lps_oracle(a: &Text) -> MatchWitness {
    let (start, len) = lps_slice(a.symbols());
    MatchWitness::palindrome(start, len)
}

/// Returns the leftmost longest palindrome as (0-based start, length).
pub(crate) fn lps_slice(s: &[Symbol]) -> (usize, usize) {
    let radii = manacher(s);
    let mut best = (0usize, 1usize);
    for (c2, &r) in radii.iter().enumerate() {
        // r is the palindrome length centred at doubled index c2
        if r > best.1 || (r == best.1 && (c2 + 1 - r) / 2 < best.0) {
            best = ((c2 + 1 - r) / 2, r);
        }
    }
    best
}

/// Palindrome lengths at every doubled centre `0..2n-1`: even indices are
/// symbols, odd indices the gaps between them.
pub fn manacher(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    let m = 2 * n - 1;
    let at = |i: usize| -> Option<Symbol> { (i % 2 == 0).then(|| s[i / 2]) };
    let mut rad = vec![0usize; m];
    let (mut l, mut r) = (0usize, 0usize); // rightmost window [l, r) in doubled coordinates
    for i in 0..m {
        let mut k = if i < r {
            rad[l + r - 1 - i].min(r - i)
        } else {
            1
        };
        while k <= i && i + k < m && at(i - k) == at(i + k) {
            k += 1;
        }
        rad[i] = k;
        if i + k > r {
            l = i + 1 - k;
            r = i + k;
        }
    }
    // an arm of k covers doubled cells [i-k+1, i+k-1]; count the symbols in it
    rad.iter()
        .enumerate()
        .map(|(i, &k)| {
            if i % 2 == 0 {
                2 * ((k - 1) / 2) + 1
            } else {
                2 * (k / 2)
            }
        })
        .collect()
}

/// Length of the longest strictly increasing subsequence.
pub fn lis_length<T: Ord + Copy>(xs: &[T]) -> usize {
    let mut tails: Vec<T> = Vec::new();
    for &x in xs {
        match tails.binary_search(&x) {
            Ok(_) => {}
            Err(i) if i == tails.len() => tails.push(x),
            Err(i) => tails[i] = x,
        }
    }
    tails.len()
}

/// Ulam distance of two equal-length non-repetitive strings.
pub fn ulam_oracle(a: &Text, b: &Text) -> Result<u64> {
    if !a.is_non_repetitive() || !b.is_non_repetitive() {
        return Err(Error::NotNonRepetitive);
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let pos: HashMap<Symbol, usize> = a
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    let relabelled: Vec<usize> = b.symbols().iter().filter_map(|s| pos.get(s).copied()).collect();
    let common = lis_length(&relabelled);
    Ok(2 * (a.len() - common) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> Text {
        Text::from_utf8(s).unwrap()
    }

    fn brute_lcs(a: &[Symbol], b: &[Symbol]) -> usize {
        let mut best = 0;
        let mut prev = vec![0usize; b.len() + 1];
        for i in 1..=a.len() {
            let mut row = vec![0usize; b.len() + 1];
            for j in 1..=b.len() {
                if a[i - 1] == b[j - 1] {
                    row[j] = prev[j - 1] + 1;
                    best = best.max(row[j]);
                }
            }
            prev = row;
        }
        best
    }

    fn brute_lps(s: &[Symbol]) -> usize {
        let n = s.len();
        let mut best = 1;
        for c in 0..n {
            let mut k = 0;
            while k <= c && c + k < n && s[c - k] == s[c + k] {
                k += 1;
            }
            best = best.max(2 * k - 1);
            let mut k = 0;
            while k <= c && c + 1 + k < n && s[c - k] == s[c + 1 + k] {
                k += 1;
            }
            best = best.max(2 * k);
        }
        best
    }

    /// Insert/delete distance by breadth-first search over edit scripts.
    fn brute_ulam(a: &[Symbol], b: &[Symbol]) -> u64 {
        use std::collections::{HashSet, VecDeque};
        let mut seen: HashSet<Vec<Symbol>> = HashSet::new();
        let mut queue = VecDeque::from([(a.to_vec(), 0u64)]);
        seen.insert(a.to_vec());
        while let Some((cur, dist)) = queue.pop_front() {
            if cur == b {
                return dist;
            }
            let mut succ = Vec::new();
            for i in 0..cur.len() {
                let mut del = cur.clone();
                del.remove(i);
                succ.push(del);
            }
            for &s in b {
                if !cur.contains(&s) {
                    for i in 0..=cur.len() {
                        let mut ins = cur.clone();
                        ins.insert(i, s);
                        succ.push(ins);
                    }
                }
            }
            for s in succ {
                if seen.insert(s.clone()) {
                    queue.push_back((s, dist + 1));
                }
            }
        }
        unreachable!("b is always reachable")
    }

    #[test]
    fn lcs_examples() {
        let w = lcs_oracle(&t("ababc"), &t("abcba"));
        assert_eq!((w.length, w.pos_a, w.pos_b), (3, 3, 1));
        assert_eq!(lcs_oracle(&t("abcdef"), &t("abcdef")).length, 6);
        let w = lcs_oracle(&t("aaaa"), &t("bbbb"));
        assert_eq!((w.length, w.pos_a, w.pos_b), (0, 0, 0));
    }

    #[test]
    fn lps_examples() {
        assert_eq!(lps_oracle(&t("abacaba")).length, 7);
        assert_eq!(lps_oracle(&t("abc")).length, 1);
        let w = lps_oracle(&t("xyabbaz"));
        assert_eq!((w.pos_a, w.length), (3, 4));
    }

    #[test]
    fn ulam_examples() {
        let id: Vec<u32> = (0..10).collect();
        let a = Text::permutation(id.clone()).unwrap();
        assert_eq!(ulam_oracle(&a, &a).unwrap(), 0);
        let mut sw = id;
        sw.swap(4, 5);
        let b = Text::permutation(sw).unwrap();
        assert_eq!(ulam_oracle(&a, &b).unwrap(), 2);
        let plain = Text::new(vec![0, 1], 2).unwrap();
        assert!(matches!(
            ulam_oracle(&plain, &plain),
            Err(Error::NotNonRepetitive)
        ));
    }

    #[test]
    fn ulam_counts_absent_symbols_as_deletions() {
        let a = Text::non_repetitive(vec![0, 1, 2], 10).unwrap();
        let b = Text::non_repetitive(vec![0, 1, 7], 10).unwrap();
        assert_eq!(ulam_oracle(&a, &b).unwrap(), 2);
    }

    #[test]
    fn lis_handles_ties_strictly() {
        assert_eq!(lis_length(&[3, 1, 2, 2, 5, 4]), 3);
        assert_eq!(lis_length::<u32>(&[]), 0);
    }

    fn perm(n: usize) -> impl Strategy<Value = Vec<u32>> {
        Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn lcs_matches_quadratic_dp(
            a in prop::collection::vec(0u32..3, 1..80),
            b in prop::collection::vec(0u32..3, 1..80),
        ) {
            let w = lcs_slices(&a, &b);
            prop_assert_eq!(w.length, brute_lcs(&a, &b));
            let ta = Text::new(a, 3).unwrap();
            let tb = Text::new(b, 3).unwrap();
            prop_assert!(w.verify_common(&ta, &tb));
        }

        #[test]
        fn lps_matches_centre_expansion(s in prop::collection::vec(0u32..3, 1..120)) {
            let (start, len) = lps_slice(&s);
            prop_assert_eq!(len, brute_lps(&s));
            let w = &s[start..start + len];
            prop_assert!(w.iter().eq(w.iter().rev()));
        }

        #[test]
        fn ulam_matches_edit_search(a in perm(6), b in perm(6)) {
            let ta = Text::permutation(a.clone()).unwrap();
            let tb = Text::permutation(b.clone()).unwrap();
            prop_assert_eq!(ulam_oracle(&ta, &tb).unwrap(), brute_ulam(&a, &b));
        }

        #[test]
        fn ulam_symmetric_and_triangle(a in perm(48), b in perm(48), c in perm(48)) {
            let (ta, tb, tc) = (
                Text::permutation(a).unwrap(),
                Text::permutation(b).unwrap(),
                Text::permutation(c).unwrap(),
            );
            let ab = ulam_oracle(&ta, &tb).unwrap();
            prop_assert_eq!(ab, ulam_oracle(&tb, &ta).unwrap());
            let ac = ulam_oracle(&ta, &tc).unwrap();
            let cb = ulam_oracle(&tc, &tb).unwrap();
            prop_assert!(ab <= ac + cb);
        }
    }
}
