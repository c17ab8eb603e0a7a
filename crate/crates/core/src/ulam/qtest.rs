use crate::error::{Error, Result};
use crate::qsim::{estimate_amplitude_repeated, log_factor, BernoulliSource, Sim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Large,
    Small,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GapVerdict {
    pub verdict: Verdict,
    /// The estimate the verdict was read from (the median over repetitions).
    pub p_tilde: f64,
    pub q: f64,
    pub eta: f64,
    pub k: usize,
}

/// `ceil(20 / (eta sqrt q))`.
pub fn qtest_k(q: f64, eta: f64) -> usize {
    (20.0 / (eta * q.sqrt())).ceil() as usize
}

/// Number of votes for failure about `1/n^2`: `2 ceil(log2 n) + 1`.
pub fn qtest_reps(n: usize) -> usize {
    2 * log_factor(n) as usize + 1
}

fn check(q: f64, eta: f64) -> Result<()> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::param(format!("q must lie in (0, 1], got {q}")));
    }
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::param(format!("eta must lie in (0, 1], got {eta}")));
    }
    Ok(())
}

fn threshold(q: f64, eta: f64) -> f64 {
    (1.0 - eta / 2.0) * q
}

fn verdict_of(p_tilde: f64, q: f64, eta: f64) -> Verdict {
    if p_tilde >= threshold(q, eta) {
        Verdict::Large
    } else {
        Verdict::Small
    }
}

/// One amplitude estimate thresholded at `(1 - eta/2) q`.
pub fn qtest_single(sim: &Sim, src: &dyn BernoulliSource, q: f64, eta: f64) -> Result<GapVerdict> {
    qtest_votes(sim, src, q, eta, 1)
}

/// Majority over [`qtest_reps`]`(n)` independent single shots.
pub fn qtest(sim: &Sim, src: &dyn BernoulliSource, q: f64, eta: f64, n: usize) -> Result<GapVerdict> {
    qtest_votes(sim, src, q, eta, qtest_reps(n))
}

fn qtest_votes(sim: &Sim, src: &dyn BernoulliSource, q: f64, eta: f64, reps: usize) -> Result<GapVerdict> {
    check(q, eta)?;
    let k = qtest_k(q, eta);
    let mut draws = estimate_amplitude_repeated(sim, src, k, reps)?;
    draws.sort_by(f64::total_cmp);
    // with an odd count the median carries the majority verdict
    let p_tilde = draws[draws.len() / 2];
    Ok(GapVerdict {
        verdict: verdict_of(p_tilde, q, eta),
        p_tilde,
        q,
        eta,
        k,
    })
}
