use serde::Serialize;

use super::indicator::{indicator_for_distance, IndicatorParams, IndicatorVariant};
use super::qtest::{qtest, Verdict};
use crate::error::{Error, Result};
use crate::qsim::{grover_find, log_factor, Sim};
use crate::strings::{ulam_oracle, Text};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UlamConfig {
    pub epsilon: f64,
    /// Constant of the indicator precondition `t' >= c * ud`.
    pub c: f64,
    pub variant: IndicatorVariant,
}

impl UlamConfig {
    pub fn new(epsilon: f64) -> Self {
        UlamConfig {
            epsilon,
            c: 1.0,
            variant: IndicatorVariant::Midpoint,
        }
    }
}

/// Which branch produced the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UlamPath {
    /// The strings are equal.
    Identical,
    /// Distance at least `(1 - eps) sqrt(n) / c`, answered classically.
    Classical,
    /// The threshold loop stopped on a LARGE verdict.
    Loop,
    /// The loop ran out of iterations; answered classically.
    ErrorFallback,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UlamRunState {
    pub eta: f64,
    pub delta: f64,
    pub r: usize,
    pub path: UlamPath,
    pub i_star: Option<usize>,
    pub t_star: Option<f64>,
    pub q_star: Option<f64>,
    /// Iterations whose indicator had `t' < c * ud`.
    pub breaches: usize,
    pub n: usize,
}

impl UlamRunState {
    /// For loop answers with `i* >= 2`, whether
    /// `(1-eta)(1-delta)(1-1/sqrt n) ud <= t* <= (1+2 delta)(1+2 eta) ud`.
    pub fn sandwich_holds(&self, ud: u64) -> Option<bool> {
        match (self.path, self.i_star, self.t_star) {
            (UlamPath::Loop, Some(i), Some(t)) if i >= 2 => {
                let ud = ud as f64;
                let hi = (1.0 + 2.0 * self.delta) * (1.0 + 2.0 * self.eta) * ud;
                let lo = (1.0 - self.eta) * (1.0 - self.delta) * (1.0 - 1.0 / (self.n as f64).sqrt()) * ud;
                Some(lo <= t && t <= hi)
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UlamRun {
    pub value: f64,
    pub state: UlamRunState,
}

/// `ceil(log((1-delta)(sqrt n - 1)/n) / log(1-eta))`; zero when `n < 2`.
pub fn loop_depth(n: usize, eta: f64, delta: f64) -> usize {
    if n < 2 {
        return 0;
    }
    let nf = n as f64;
    ((((1.0 - delta) * (nf.sqrt() - 1.0) / nf).ln() / (1.0 - eta).ln()).ceil()).max(0.0) as usize
}

/// Threshold at iteration `i`: `(1-eta)^i (1-eps) sqrt(n) / c`.
pub fn loop_threshold(n: usize, i: usize, cfg: &UlamConfig) -> f64 {
    let eta = cfg.epsilon / 3.0;
    (1.0 - eta).powi(i as i32) * (1.0 - cfg.epsilon) * (n as f64).sqrt() / cfg.c
}

/// A `(1 +- eps)` estimate of the Ulam distance.
pub fn ulam_approx(sim: &Sim, a: &Text, b: &Text, epsilon: f64) -> Result<f64> {
    Ok(ulam_approx_traced(sim, a, b, &UlamConfig::new(epsilon))?.value)
}

pub fn ulam_approx_traced(sim: &Sim, a: &Text, b: &Text, cfg: &UlamConfig) -> Result<UlamRun> {
    let eps = cfg.epsilon;
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::param(format!("epsilon must lie in (0, 1], got {eps}")));
    }
    if !(cfg.c > 0.0) {
        return Err(Error::param(format!("c must be positive, got {}", cfg.c)));
    }
    // also rejects repetitive or unequal inputs
    let ud = ulam_oracle(a, b)?;
    let n = a.len();
    let (eta, delta) = (eps / 3.0, eps / 3.0);
    let mut state = UlamRunState {
        eta,
        delta,
        r: loop_depth(n, eta, delta),
        path: UlamPath::Identical,
        i_star: None,
        t_star: None,
        q_star: None,
        breaches: 0,
        n,
    };
    let finish = |value: f64, state: UlamRunState| Ok(UlamRun { value, state });

    let (ra, rb) = (sim.reader(a), sim.reader(b));
    if grover_find(sim, n, 1.0, |i| ra.get(i) != rb.get(i)).is_none() {
        return finish(0.0, state);
    }

    let root = (n as f64).sqrt();
    sim.charge("classical_ulam", root * log_factor(n));
    if ud as f64 >= (1.0 - eps) * root / cfg.c {
        state.path = UlamPath::Classical;
        return finish(ud as f64, state);
    }

    for i in 1..=state.r {
        let t = loop_threshold(n, i, cfg);
        let q = t / n as f64;
        let t_prime = ((cfg.c * t / (1.0 - eps)).ceil() as u64).max(1);
        let src = indicator_for_distance(n, ud, IndicatorParams::new(delta, t_prime, cfg.c)?, cfg.variant);
        if src.breached() {
            state.breaches += 1;
        }
        if qtest(sim, &src, q, eta, n)?.verdict == Verdict::Large {
            state.path = UlamPath::Loop;
            state.i_star = Some(i);
            state.t_star = Some(t);
            state.q_star = Some(q);
            return finish(t, state);
        }
    }

    state.path = UlamPath::ErrorFallback;
    sim.charge("classical_ulam", (n as f64 / ud as f64 + root) * log_factor(n));
    finish(ud as f64, state)
}
