use std::ops::Range;

use super::small::small_d_with;
use super::{check_d, check_pair, hint, oracle_len};
use crate::error::{Error, Result};
use crate::qsim::{
    amplify, extend_match_search, extend_periodic_search, pattern_match, Feasibility, Side, Sim,
    View,
};
use crate::strings::{Direction, MatchWitness, QueryReader, Text};

/// A sampled pattern `A[p_start..p_start + p_len)` and window
/// `B[s_start..s_start + s_len)`, with `p_len = 2 floor(d/3)` and `s_len = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodPair {
    pub p_start: usize,
    pub p_len: usize,
    pub s_start: usize,
    pub s_len: usize,
}

impl GoodPair {
    pub fn new(n: usize, d: usize, p_start: usize, s_start: usize) -> Result<Self> {
        let p_len = 2 * (d / 3);
        if p_len == 0 || d > n || p_start + p_len > n || s_start + d > n {
            return Err(Error::param(format!(
                "pair ({p_start}, {s_start}) with d = {d} does not fit n = {n}"
            )));
        }
        Ok(GoodPair {
            p_start,
            p_len,
            s_start,
            s_len: d,
        })
    }

    /// Whether the pair is good for the common substring of length `d`
    /// at 0-based `(x, y)`: the pattern starts in the first third of the
    /// solution and the window holds its aligned copy.
    pub fn is_good_for(&self, x: usize, y: usize) -> bool {
        let third = self.s_len / 3;
        if self.p_start < x || self.p_start >= x + third {
            return false;
        }
        let copy = y + (self.p_start - x);
        self.s_start <= copy && copy + self.p_len <= self.s_start + self.s_len
    }
}

/// Sampling floor `floor(d/3)^2 / (9 n^2)` for one random pair being good.
pub fn success_floor(n: usize, d: usize) -> f64 {
    let third = (d / 3) as f64;
    third * third / (9.0 * (n as f64).powi(2))
}

/// Whether any two occurrences of the pattern in the window overlap or
/// touch, which the periodic reconstruction relies on. Fails only for
/// `d < 3` and `d = 5`.
pub(crate) fn pairs_overlap(d: usize) -> bool {
    let third = d / 3;
    third > 0 && d <= 4 * third
}

/// Model cost of one [`reconstruct_from_pair`] call: two pattern searches
/// in the window, two periodic extensions and four anchored extensions.
pub fn reconstruct_cost(d: usize) -> f64 {
    let d = d as f64;
    let plen = 2.0 * (d / 3.0).floor();
    2.0 * (d.sqrt() + plen.sqrt()) + 2.0 * 2.0 * (2.0 * d).sqrt() + 4.0 * 2.0 * d.sqrt()
}

/// Longest agreement through the alignment `a[i] ~ b[j]`, reaching at most
/// `limit` positions each way. Returns the match if it has `d` symbols.
fn anchored(
    sim: &Sim,
    ra: &QueryReader<'_>,
    rb: &QueryReader<'_>,
    i: usize,
    j: usize,
    d: usize,
) -> Option<MatchWitness> {
    let left = extend_match_search(sim, ra, i, rb, j, Direction::Backward, d);
    let right = extend_match_search(sim, ra, i, rb, j, Direction::Forward, d);
    let w = MatchWitness::common(i - left, j - left, left + right);
    (w.length >= d).then_some(w)
}

/// Anchors the alignment `A[i] ~ B[i + shift]` at the left end of the
/// overlap of the two runs, where that alignment agrees throughout.
fn overlap_anchor(
    sim: &Sim,
    ra: &QueryReader<'_>,
    rb: &QueryReader<'_>,
    run_a: &Range<usize>,
    run_b: &Range<usize>,
    shift: i64,
    d: usize,
) -> Option<MatchWitness> {
    let lo = (run_a.start as i64).max(run_b.start as i64 - shift);
    let hi = (run_a.end as i64).min(run_b.end as i64 - shift);
    (lo < hi).then_some(())?;
    anchored(sim, ra, rb, lo as usize, (lo + shift) as usize, d)
}

fn find(
    sim: &Sim,
    reader: QueryReader<'_>,
    window: Range<usize>,
    pattern: View<'_>,
    side: Side,
) -> Option<usize> {
    if window.start >= window.end {
        return None;
    }
    let start = window.start;
    pattern_match(sim, View::new(reader, window), pattern, side).map(|o| start + o)
}

/// Recovers a common substring of length at least `d` from a good pair.
///
/// A unique occurrence of the pattern in the window fixes the alignment.
/// Otherwise the gap between the two leftmost occurrences is the period of
/// the pattern, and both strings are periodic around it; the
/// solution then aligns the starts or the ends of the two periodic runs, or
/// else lies inside both runs, where one of the two in-phase alignments
/// adjacent to the start alignment overlaps the runs at least as much.
/// Whatever is returned has been verified symbol by symbol.
pub fn reconstruct_from_pair(
    sim: &Sim,
    a: &Text,
    b: &Text,
    pair: &GoodPair,
    d: usize,
) -> Option<MatchWitness> {
    let (ra, rb) = (sim.reader(a), sim.reader(b));
    let (pl, plen, sl) = (pair.p_start, pair.p_len, pair.s_start);
    let pattern = View::new(ra, pl..pl + plen);
    let window = sl..sl + pair.s_len;
    let first = find(sim, rb, window.clone(), pattern, Side::Leftmost)?;
    let next = find(sim, rb, first + 1..window.end, pattern, Side::Leftmost);
    let found = match next {
        None => anchored(sim, &ra, &rb, pl, first, d),
        Some(next) => {
            let q = next - first;
            let run_a = extend_periodic_search(sim, &ra, pl..pl + plen, q, 2 * d);
            let run_b = extend_periodic_search(sim, &rb, first..next + plen, q, 2 * d);
            anchored(sim, &ra, &rb, run_a.start, run_b.start, d)
                .or_else(|| anchored(sim, &ra, &rb, run_a.end, run_b.end, d))
                .or_else(|| {
                    let phase = first as i64 - pl as i64;
                    let s0 = run_b.start as i64 - run_a.start as i64;
                    let below = s0 - (s0 - phase).rem_euclid(q as i64);
                    [below, below + q as i64]
                        .into_iter()
                        .find_map(|shift| overlap_anchor(sim, &ra, &rb, &run_a, &run_b, shift, d))
                })
        }
    };
    found.filter(|w| w.verify_common(a, b))
}

/// Decides whether a common substring of length `d` exists by amplifying
/// a random good-pair reconstruction.
pub fn decide_large_d(sim: &Sim, a: &Text, b: &Text, d: usize) -> Result<Option<MatchWitness>> {
    let n = check_pair(a, b)?;
    check_d(d, n)?;
    let feasibility = hint(oracle_len(sim, a, b), d);
    Ok(large_d_with(sim, a, b, d, feasibility))
}

pub(crate) fn large_d_with(
    sim: &Sim,
    a: &Text,
    b: &Text,
    d: usize,
    feasibility: Feasibility,
) -> Option<MatchWitness> {
    let n = a.len();
    if !pairs_overlap(d) {
        return small_d_with(sim, a, b, d, feasibility);
    }
    let plen = 2 * (d / 3);
    amplify(
        sim,
        success_floor(n, d),
        reconstruct_cost(d),
        feasibility,
        || {
            let p_start = sim.uniform(n - plen + 1);
            let s_start = sim.uniform(n - d + 1);
            let pair = GoodPair {
                p_start,
                p_len: plen,
                s_start,
                s_len: d,
            };
            reconstruct_from_pair(sim, a, b, &pair, d)
        },
    )
}
