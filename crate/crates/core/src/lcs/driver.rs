use super::large::large_d_with;
use super::small::{approx_small_d_with, small_d_with};
use super::walk::{walk_with, WalkMode, WalkPlan};
use super::{approx_len, check_eps, check_pair, hint, oracle_len};
use crate::error::{Error, Result};
use crate::qsim::{log_factor, Mode, Sim};
use crate::strings::{MatchWitness, Text};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LcsAlgo {
    Exact,
    Approx(f64),
    NonrepExact,
    NonrepApprox(f64),
}

impl LcsAlgo {
    pub fn epsilon(&self) -> Option<f64> {
        match *self {
            LcsAlgo::Approx(e) | LcsAlgo::NonrepApprox(e) => Some(e),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LcsAlgo::Exact => "exact",
            LcsAlgo::Approx(_) => "approx",
            LcsAlgo::NonrepExact => "nonrep-exact",
            LcsAlgo::NonrepApprox(_) => "nonrep-approx",
        }
    }
}

/// One decision at length `d` with the branch the algorithm prescribes.
fn probe(sim: &Sim, a: &Text, b: &Text, d: usize, algo: LcsAlgo, oracle: Option<usize>) -> Result<Option<MatchWitness>> {
    let (n, df) = (a.len() as f64, d as f64);
    Ok(match algo {
        LcsAlgo::Exact if df < n.cbrt() => small_d_with(sim, a, b, d, hint(oracle, d)),
        LcsAlgo::Approx(eps) if df < n.sqrt() => approx_small_d_with(sim, a, b, d, eps, oracle),
        LcsAlgo::NonrepExact if df < n.sqrt() => {
            let plan = WalkPlan::new(a.len(), d, WalkMode::Exact)?;
            walk_with(sim, a, b, &plan, hint(oracle, d))?
        }
        LcsAlgo::NonrepApprox(eps) if df < n.powf(2.0 / 3.0) => {
            let plan = WalkPlan::new(a.len(), d, WalkMode::Approx(eps))?;
            walk_with(sim, a, b, &plan, hint(oracle, approx_len(d, eps)))?
        }
        _ => large_d_with(sim, a, b, d, hint(oracle, d)),
    })
}

/// Repeats a probe in noisy mode so one run fails with probability about 1/n.
fn amplified_probe(sim: &Sim, a: &Text, b: &Text, d: usize, algo: LcsAlgo, oracle: Option<usize>) -> Result<Option<MatchWitness>> {
    let attempts = match sim.config().mode {
        Mode::Ideal => 1,
        Mode::Noisy => log_factor(a.len()) as usize,
    };
    for _ in 0..attempts {
        if let Some(w) = probe(sim, a, b, d, algo, oracle)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Binary search over `d` for the longest common substring.
///
/// `lo` is the largest length whose probe succeeded and `hi` the smallest
/// that failed. Once they meet, `lo + 1` is probed once more; a success
/// restarts the search above it.
pub fn lcs(sim: &Sim, a: &Text, b: &Text, algo: LcsAlgo) -> Result<MatchWitness> {
    let n = check_pair(a, b)?;
    if let Some(eps) = algo.epsilon() {
        check_eps(eps)?;
    }
    if matches!(algo, LcsAlgo::NonrepExact | LcsAlgo::NonrepApprox(_))
        && !(a.is_non_repetitive() && b.is_non_repetitive())
    {
        return Err(Error::NotNonRepetitive);
    }
    let oracle = oracle_len(sim, a, b);
    let mut best = MatchWitness::empty_common();
    let (mut lo, mut hi) = (0, n + 1);
    loop {
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            match amplified_probe(sim, a, b, mid, algo, oracle)? {
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
        match amplified_probe(sim, a, b, lo + 1, algo, oracle)? {
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
    debug_assert!(best.length == 0 || best.verify_common(a, b));
    Ok(best)
}

pub fn lcs_exact(sim: &Sim, a: &Text, b: &Text) -> Result<MatchWitness> {
    lcs(sim, a, b, LcsAlgo::Exact)
}

pub fn lcs_approx(sim: &Sim, a: &Text, b: &Text, eps: f64) -> Result<MatchWitness> {
    lcs(sim, a, b, LcsAlgo::Approx(eps))
}

pub fn nonrep_lcs_exact(sim: &Sim, a: &Text, b: &Text) -> Result<MatchWitness> {
    lcs(sim, a, b, LcsAlgo::NonrepExact)
}

pub fn nonrep_lcs_approx(sim: &Sim, a: &Text, b: &Text, eps: f64) -> Result<MatchWitness> {
    lcs(sim, a, b, LcsAlgo::NonrepApprox(eps))
}
