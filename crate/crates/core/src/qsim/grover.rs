use std::collections::HashMap;
use std::ops::Range;

use super::sim::{log_factor, Feasibility, GroverCharge, Sim};
use crate::strings::{extend_match, extend_periodic, Direction, QueryReader};

fn iterations(n: usize, m: usize) -> f64 {
    (n as f64 / m.max(1) as f64).sqrt().ceil()
}

/// Grover search returning a uniformly random marked index.
///
/// `eval_cost` is the model cost of one predicate evaluation. The charge is
/// `ceil(sqrt(n/m)) * eval_cost * log n`, with `m` the true marked count
/// (or `ceil(sqrt(n))` under [`GroverCharge::Strict`]).
pub fn grover_find(
    sim: &Sim,
    n: usize,
    eval_cost: f64,
    mut pred: impl FnMut(usize) -> bool,
) -> Option<usize> {
    grover_find_map(sim, n, eval_cost, |i| pred(i).then_some(())).map(|(i, ())| i)
}

/// [`grover_find`] for predicates that produce a payload when marked.
pub fn grover_find_map<T>(
    sim: &Sim,
    n: usize,
    eval_cost: f64,
    mut f: impl FnMut(usize) -> Option<T>,
) -> Option<(usize, T)> {
    assert!(n >= 1, "grover_find over an empty domain");
    let mut marked: Vec<(usize, T)> =
        sim.scratch(|| (0..n).filter_map(|i| f(i).map(|v| (i, v))).collect());
    let m = match sim.config().grover_charge {
        GroverCharge::Adaptive => marked.len(),
        GroverCharge::Strict => 1,
    };
    sim.charge("grover_find", iterations(n, m) * eval_cost * log_factor(n));
    if marked.is_empty() || sim.inject_failure() {
        return None;
    }
    let k = sim.uniform(marked.len());
    Some(marked.swap_remove(k))
}

/// Searches for any marked index under a budget sized for at least
/// `m_threshold` marked elements.
///
/// Charges `ceil(sqrt(n/m_threshold)) * eval_cost * log n`. The simulation
/// probes indices in uniformly random order, without replacement, up to
/// `10 n / m_threshold` of them, so with `m >= m_threshold` marked it fails
/// with probability below `e^-10`, and with fewer it succeeds with
/// probability growing in `m / m_threshold`. Zero marked always fails.
pub fn grover_threshold_find<T>(
    sim: &Sim,
    n: usize,
    m_threshold: usize,
    eval_cost: f64,
    hint: Feasibility,
    mut f: impl FnMut(usize) -> Option<T>,
) -> Option<(usize, T)> {
    assert!(
        (1..=n).contains(&m_threshold),
        "threshold {m_threshold} outside 1..={n}"
    );
    sim.charge(
        "grover_threshold",
        iterations(n, m_threshold) * eval_cost * log_factor(n),
    );
    if sim.shortcut(hint) {
        return None;
    }
    let budget = (10 * n).div_ceil(m_threshold).min(n);
    // lazy Fisher-Yates: swapped[i] is the value currently at slot i
    let mut swapped: HashMap<usize, usize> = HashMap::new();
    for step in 0..budget {
        let pick = step + sim.uniform(n - step);
        let at_pick = *swapped.get(&pick).unwrap_or(&pick);
        let at_step = *swapped.get(&step).unwrap_or(&step);
        swapped.insert(pick, at_step);
        if let Some(v) = sim.scratch(|| f(at_pick)) {
            if sim.inject_failure() {
                return None;
            }
            return Some((at_pick, v));
        }
    }
    None
}

pub fn grover_threshold(
    sim: &Sim,
    n: usize,
    m_threshold: usize,
    eval_cost: f64,
    mut pred: impl FnMut(usize) -> bool,
) -> bool {
    grover_threshold_find(sim, n, m_threshold, eval_cost, Feasibility::Unknown, |i| {
        pred(i).then_some(())
    })
    .is_some()
}

/// Minimum finding: the smallest marked index, priced as a strict search.
/// Not subject to failure injection, since callers treat "none" as a fact.
pub fn leftmost_marked(
    sim: &Sim,
    n: usize,
    eval_cost: f64,
    mut pred: impl FnMut(usize) -> bool,
) -> Option<usize> {
    if n == 0 {
        return None;
    }
    sim.charge("grover_find", iterations(n, 1) * eval_cost * log_factor(n));
    sim.scratch(|| (0..n).find(|&i| pred(i)))
}

/// Run length of agreement between two aligned positions, found by a
/// leftmost-mismatch search over at most `limit` offsets.
pub fn extend_match_search(
    sim: &Sim,
    a: &QueryReader<'_>,
    i: usize,
    b: &QueryReader<'_>,
    j: usize,
    dir: Direction,
    limit: usize,
) -> usize {
    if limit == 0 {
        return 0;
    }
    sim.charge("grover_find", iterations(limit, 1) * log_factor(limit));
    extend_match(a, i, b, j, dir, limit)
}

/// Periodic extension with each end located by a leftmost-violation search.
pub fn extend_periodic_search(
    sim: &Sim,
    reader: &QueryReader<'_>,
    anchor: Range<usize>,
    q: usize,
    limit: usize,
) -> Range<usize> {
    if limit > 0 {
        sim.charge("grover_find", 2.0 * iterations(limit, 1) * log_factor(limit));
    }
    extend_periodic(reader, anchor, q, limit)
}

/// Whether `reader[range]` reads the same in both directions, decided by
/// a search for a mismatched mirror pair.
pub fn mirror_search(sim: &Sim, reader: &QueryReader<'_>, range: Range<usize>) -> bool {
    let pairs = range.len() / 2;
    if pairs == 0 {
        return true;
    }
    sim.charge("grover_find", iterations(pairs, 1) * log_factor(pairs));
    let (lo, hi) = (range.start, range.end - 1);
    (0..pairs).all(|k| reader.get(lo + k) == reader.get(hi - k))
}
