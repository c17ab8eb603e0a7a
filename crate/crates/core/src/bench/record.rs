use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::lcs::{lcs, LcsAlgo};
use crate::lps::lps;
use crate::qsim::{LedgerSnapshot, Sim};
use crate::strings::{lcs_oracle, lps_oracle, ulam_oracle, MatchWitness, Text};
use crate::ulam::{ulam_approx_traced, UlamConfig, UlamRunState};

/// One algorithm run, as the command line reports it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub problem: &'static str,
    pub algorithm: &'static str,
    pub n: usize,
    pub epsilon: Option<f64>,
    pub answer: Value,
    /// Present when checking against the oracle.
    pub oracle_answer: Option<Value>,
    /// Whether the answer meets the algorithm's contract; present when
    /// checking.
    pub success: Option<bool>,
    pub ledger: LedgerSnapshot,
    pub seed: u64,
    pub wall_ms: f64,
    pub witness: Option<MatchWitness>,
    pub ulam: Option<UlamRunState>,
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

impl RunRecord {
    pub fn lcs(a: &Text, b: &Text, algo: LcsAlgo, seed: u64, check: bool) -> Result<Self> {
        let start = Instant::now();
        let sim = Sim::new(seed);
        let w = lcs(&sim, a, b, algo)?;
        let wall_ms = elapsed_ms(start);
        let (oracle_answer, success) = if check {
            let want = lcs_oracle(a, b).length;
            let floor = algo.epsilon().map_or(want as f64, |e| (1.0 - e) * want as f64);
            let ok = (w.length == 0 || w.verify_common(a, b)) && w.length as f64 >= floor - 1e-9;
            (Some(json!(want)), Some(ok))
        } else {
            (None, None)
        };
        Ok(RunRecord {
            problem: "lcs",
            algorithm: algo.name(),
            n: a.len(),
            epsilon: algo.epsilon(),
            answer: json!(w.length),
            oracle_answer,
            success,
            ledger: sim.ledger().snapshot(),
            seed,
            wall_ms,
            witness: Some(w),
            ulam: None,
        })
    }

    pub fn lps(a: &Text, seed: u64, check: bool) -> Result<Self> {
        let start = Instant::now();
        let sim = Sim::new(seed);
        let w = lps(&sim, a)?;
        let wall_ms = elapsed_ms(start);
        let (oracle_answer, success) = if check {
            let want = lps_oracle(a).length;
            (Some(json!(want)), Some(w.verify_palindrome(a) && w.length == want))
        } else {
            (None, None)
        };
        Ok(RunRecord {
            problem: "lps",
            algorithm: "quantum",
            n: a.len(),
            epsilon: None,
            answer: json!(w.length),
            oracle_answer,
            success,
            ledger: sim.ledger().snapshot(),
            seed,
            wall_ms,
            witness: Some(w),
            ulam: None,
        })
    }

    pub fn ulam(a: &Text, b: &Text, cfg: &UlamConfig, seed: u64, check: bool) -> Result<Self> {
        let start = Instant::now();
        let sim = Sim::new(seed);
        let run = ulam_approx_traced(&sim, a, b, cfg)?;
        let wall_ms = elapsed_ms(start);
        let (oracle_answer, success) = if check {
            let ud = ulam_oracle(a, b)? as f64;
            let eps = cfg.epsilon;
            let ok = (1.0 - eps) * ud <= run.value && run.value <= (1.0 + eps) * ud;
            (Some(json!(ud as u64)), Some(ok))
        } else {
            (None, None)
        };
        Ok(RunRecord {
            problem: "ulam",
            algorithm: "quantum",
            n: a.len(),
            epsilon: Some(cfg.epsilon),
            answer: json!(run.value),
            oracle_answer,
            success,
            ledger: sim.ledger().snapshot(),
            seed,
            wall_ms,
            witness: Some(MatchWitness::ulam(run.value)),
            ulam: Some(run.state),
        })
    }
}
