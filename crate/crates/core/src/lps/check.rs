use super::occurrence::{occurrence_set, OccurrenceSet};
use crate::qsim::{extend_periodic_search, mirror_search, Sim};
use crate::strings::{MatchWitness, QueryReader, Text};

/// Largest candidate set tested centre by centre.
pub const DIRECT_CENTERS: usize = 8;

/// Model cost of one [`check_marked`] call: two pattern searches, one
/// periodic extension and at most nine centre tests.
pub fn check_cost(d: usize) -> f64 {
    let d = d as f64;
    let plen = (d / 2.0).ceil();
    2.0 * (d.sqrt() + plen.sqrt()) + 2.0 * (2.0 * d).sqrt() + 9.0 * (d / 2.0).sqrt().ceil()
}

/// Tests whether a palindrome of length `d` is centred at doubled centre `c2`.
fn test_center(sim: &Sim, reader: &QueryReader<'_>, c2: usize, d: usize) -> Option<MatchWitness> {
    if c2 + 1 < d || (c2 + 1 - d) % 2 != 0 {
        return None;
    }
    let start = (c2 + 1 - d) / 2;
    if start + d > reader.len() {
        return None;
    }
    mirror_search(sim, reader, start..start + d).then(|| MatchWitness::palindrome(start, d))
}

/// Builds a palindrome of length at least `d` inside a long periodic run.
///
/// `[r, r + e + |P|)` is a palindrome lying in the run `[x, y)`. Shifting it
/// by multiples of the period keeps it a palindrome; once its two gaps to
/// the run ends differ by at most one period, growing it by the smaller gap
/// on both sides keeps it one and loses at most a period of the run.
fn periodic_palindrome(occ: &OccurrenceSet, run: std::ops::Range<usize>, alpha: usize) -> (usize, usize) {
    let (x, y) = (run.start as i64, run.end as i64);
    let a = alpha as i64;
    let lo = occ.r as i64;
    let hi = lo + (occ.rightmost + occ.p_len) as i64;
    let (gap_l, gap_r) = (lo - x, y - hi);
    let k = ((gap_r - gap_l) as f64 / (2 * a) as f64).round() as i64;
    let (lo, hi) = (lo + k * a, hi + k * a);
    let grow = (lo - x).min(y - hi).max(0);
    ((lo - grow) as usize, (hi - lo + 2 * grow) as usize)
}

/// Whether position `r` (0-based) opens the left half of a length-`d`
/// palindrome, returning a verified palindrome of length at least `d`.
pub fn check_marked(sim: &Sim, a: &Text, r: usize, d: usize) -> Option<MatchWitness> {
    check_marked_observed(sim, a, r, d, &mut |_| {})
}

pub(crate) fn check_marked_observed(
    sim: &Sim,
    a: &Text,
    r: usize,
    d: usize,
    observe: &mut dyn FnMut(&OccurrenceSet),
) -> Option<MatchWitness> {
    let reader = sim.reader(a);
    let occ = occurrence_set(sim, reader, r, d)?;
    observe(&occ);
    let centers = occ.centers().doubled;
    let found = match occ.period() {
        Some(alpha) if centers.len() > DIRECT_CENTERS => {
            let anchor = r..r + occ.rightmost + occ.p_len;
            let run = extend_periodic_search(sim, &reader, anchor, alpha, 2 * d);
            if run.len() >= d + alpha {
                let (start, len) = periodic_palindrome(&occ, run, alpha);
                (len >= d && mirror_search(sim, &reader, start..start + len))
                    .then(|| MatchWitness::palindrome(start, len))
            } else {
                let mid2 = (run.start + run.end - 1) as i64;
                centers
                    .iter()
                    .filter(|&&c| (c as i64 - mid2).abs() <= 4 * alpha as i64)
                    .find_map(|&c| test_center(sim, &reader, c, d))
            }
        }
        _ => centers.iter().find_map(|&c| test_center(sim, &reader, c, d)),
    };
    found.filter(|w| w.verify_palindrome(a) && w.length >= d)
}
