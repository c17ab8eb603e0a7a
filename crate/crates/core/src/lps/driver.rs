use super::check::{check_cost, check_marked_observed};
use super::occurrence::OccurrenceSet;
use crate::error::{Error, Result};
use crate::qsim::{grover_threshold_find, log_factor, Feasibility, Mode, Sim};
use crate::strings::{lps_oracle, MatchWitness, Text};

/// Positions per length-`d` palindrome that [`super::check_marked`] can
/// certify: those whose mirrored half starts inside their window.
pub fn certified_marks(d: usize) -> usize {
    d / 4 + 1
}

fn feasibility(oracle: Option<usize>, d: usize) -> Feasibility {
    match oracle {
        Some(len) if len < d => Feasibility::Impossible,
        _ => Feasibility::Unknown,
    }
}

fn oracle_len(sim: &Sim, a: &Text) -> Option<usize> {
    sim.config().feasibility_shortcut.then(|| lps_oracle(a).length)
}

/// Searches for a palindrome of length at least `d` by looking for a
/// marked position.
pub fn lps_decide(sim: &Sim, a: &Text, d: usize) -> Result<Option<MatchWitness>> {
    let n = a.len();
    if d == 0 || d > n {
        return Err(Error::param(format!("d = {d} outside 1..={n}")));
    }
    Ok(decide_with(sim, a, d, feasibility(oracle_len(sim, a), d), &mut |_| {}))
}

fn decide_with(
    sim: &Sim,
    a: &Text,
    d: usize,
    hint: Feasibility,
    observe: &mut dyn FnMut(&OccurrenceSet),
) -> Option<MatchWitness> {
    if d == 1 {
        return Some(MatchWitness::palindrome(0, 1));
    }
    let positions = a.len() - d.div_ceil(2) + 1;
    let threshold = certified_marks(d).min(positions);
    grover_threshold_find(sim, positions, threshold, check_cost(d), hint, |r| {
        check_marked_observed(sim, a, r, d, observe)
    })
    .map(|(_, w)| w)
}

/// Longest palindromic substring by binary search, probing lengths `d` and
/// `d + 1` at each step.
pub fn lps(sim: &Sim, a: &Text) -> Result<MatchWitness> {
    lps_observed(sim, a, &mut |_| {})
}

/// [`lps`] that reports every occurrence set computed along the way.
pub fn lps_observed(sim: &Sim, a: &Text, observe: &mut dyn FnMut(&OccurrenceSet)) -> Result<MatchWitness> {
    let n = a.len();
    let oracle = oracle_len(sim, a);
    let attempts = match sim.config().mode {
        Mode::Ideal => 1,
        Mode::Noisy => log_factor(n) as usize,
    };
    let mut probe = |d: usize| -> Option<MatchWitness> {
        for _ in 0..attempts {
            for len in [d, d + 1] {
                if len > n {
                    continue;
                }
                if let Some(w) = decide_with(sim, a, len, feasibility(oracle, len), observe) {
                    return Some(w);
                }
            }
        }
        None
    };
    let mut best = MatchWitness::palindrome(0, 1);
    let (mut lo, mut hi) = (1, n + 1);
    loop {
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            match probe(mid) {
                Some(w) => {
                    lo = mid.max(w.length);
                    if w.length > best.length {
                        best = w;
                    }
                }
                None => hi = mid,
            }
        }
        if lo >= n {
            break;
        }
        match probe(lo + 1) {
            Some(w) => {
                lo = (lo + 1).max(w.length);
                if w.length > best.length {
                    best = w;
                }
                hi = n + 1;
            }
            None => break,
        }
    }
    Ok(best)
}
