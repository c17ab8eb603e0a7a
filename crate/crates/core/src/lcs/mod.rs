//! Longest common substring: generic exact and approximate algorithms, and
//! walk-based algorithms for non-repetitive inputs.

mod blocks;
mod driver;
mod large;
mod small;
mod walk;

pub use blocks::BlockSets;
pub use driver::{lcs, lcs_approx, lcs_exact, nonrep_lcs_approx, nonrep_lcs_exact, LcsAlgo};
pub use large::{decide_large_d, reconstruct_cost, reconstruct_from_pair, success_floor, GoodPair};
pub use small::{approx_small_d, decide_small_d};
pub use walk::{nonrep_walk_decide, WalkMode, WalkPlan, WalkState, MARKED_CONSTANT};

use crate::error::{Error, Result};
use crate::qsim::{Feasibility, Sim};
use crate::strings::{lcs_oracle, Text};

/// `ceil((1 - eps) * d)`, at least 1, robust to float noise.
pub fn approx_len(d: usize, eps: f64) -> usize {
    (((1.0 - eps) * d as f64) - 1e-9).ceil().max(1.0) as usize
}

/// `floor(eps * d)`, robust to float noise.
pub(crate) fn floor_eps(d: usize, eps: f64) -> usize {
    (eps * d as f64 + 1e-9).floor() as usize
}

pub(crate) fn check_pair(a: &Text, b: &Text) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.len())
}

pub(crate) fn check_d(d: usize, n: usize) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::param(format!("d = {d} outside 1..={n}")));
    }
    Ok(())
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::param(format!("epsilon {eps} outside (0, 1)")));
    }
    Ok(())
}

/// Exact LCS length, computed only when the simulator will use it.
pub(crate) fn oracle_len(sim: &Sim, a: &Text, b: &Text) -> Option<usize> {
    sim.config()
        .feasibility_shortcut
        .then(|| lcs_oracle(a, b).length)
}

pub(crate) fn hint(oracle: Option<usize>, needed: usize) -> Feasibility {
    match oracle {
        Some(len) if len < needed => Feasibility::Impossible,
        _ => Feasibility::Unknown,
    }
}
