use std::collections::HashMap;
use std::hash::Hash;

use super::sim::{log_factor, Sim};

/// Finds `(i, j)` with `eq(i, j)` among pairs whose keys agree.
///
/// Keys must be canonical: equal elements have equal keys. `eq` confirms a
/// candidate and costs `eq_cost`. Charges `N^(2/3) * eq_cost * log N` with
/// `N` the longer list length.
pub fn claw_find<K: Hash + Eq>(
    sim: &Sim,
    list_a: &[K],
    list_b: &[K],
    eq_cost: f64,
    mut eq: impl FnMut(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    assert!(
        !list_a.is_empty() && !list_b.is_empty(),
        "claw_find needs non-empty lists"
    );
    let n = list_a.len().max(list_b.len());
    sim.charge(
        "claw_find",
        (n as f64).powf(2.0 / 3.0) * eq_cost * log_factor(n),
    );
    let mut buckets: HashMap<&K, Vec<usize>> = HashMap::with_capacity(list_a.len());
    for (i, k) in list_a.iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    let found = sim.scratch(|| {
        list_b.iter().enumerate().find_map(|(j, k)| {
            buckets
                .get(k)
                .and_then(|is| is.iter().find(|&&i| eq(i, j)).map(|&i| (i, j)))
        })
    });
    if found.is_some() && sim.inject_failure() {
        return None;
    }
    found
}
