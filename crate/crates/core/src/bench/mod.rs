//! Benchmark harness: seeded trial batches over an `n` grid, per-point
//! aggregates, CSV output and log-log slope fits of charged cost.

mod fit;
mod record;
mod scenario;

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

pub use fit::{JointFit, SlopeFit};
pub use record::RunRecord;
pub use scenario::{DRule, Scenario, Trial, BENCH_SIGMA};

use crate::error::{Error, Result};

/// Environment variable holding the default master seed.
pub const SEED_ENV: &str = "QSTRING_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchPoint {
    pub n: usize,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSpec {
    pub scenario: Scenario,
    /// Points of the `n` sweep.
    pub points: Vec<BenchPoint>,
    /// Extra points at fixed `n` with varying `d`; when present the fit is
    /// joint in `n` and `d`.
    pub d_sweep: Vec<BenchPoint>,
    pub trials: usize,
    pub seed: u64,
}

impl BenchSpec {
    pub fn over_grid(scenario: Scenario, grid: &[usize], rule: DRule, trials: usize, seed: u64) -> Self {
        BenchSpec {
            scenario,
            points: grid.iter().map(|&n| BenchPoint { n, d: scenario.planted(n, rule.apply(n)) }).collect(),
            d_sweep: Vec::new(),
            trials,
            seed,
        }
    }

    pub fn with_d_sweep(mut self, n: usize, ds: &[usize]) -> Self {
        self.d_sweep = ds.iter().map(|&d| BenchPoint { n, d: self.scenario.planted(n, d) }).collect();
        self
    }

    /// The points the fit uses: the `n` sweep without its smallest `n`,
    /// plus any `d` sweep.
    fn window(&self) -> (Vec<BenchPoint>, String) {
        let mut sweep = self.points.clone();
        sweep.sort_by_key(|p| p.n);
        let kept: Vec<BenchPoint> = sweep.into_iter().skip(1).collect();
        let mut label = range_label("n", kept.iter().map(|p| p.n));
        if !self.d_sweep.is_empty() {
            label += &format!(";{}@n={}", range_label("d", self.d_sweep.iter().map(|p| p.d)), pow_label(self.d_sweep[0].n));
        }
        let mut all = kept;
        all.extend(&self.d_sweep);
        (all, label)
    }
}

fn pow_label(x: usize) -> String {
    if x.is_power_of_two() {
        format!("2^{}", x.trailing_zeros())
    } else {
        x.to_string()
    }
}

fn range_label(name: &str, xs: impl Iterator<Item = usize>) -> String {
    let xs: Vec<usize> = xs.collect();
    match (xs.iter().min(), xs.iter().max()) {
        (Some(&lo), Some(&hi)) => format!("{name}={}..{}", pow_label(lo), pow_label(hi)),
        _ => format!("{name}=none"),
    }
}

/// One CSV row: the aggregate of all trials at one point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub problem: &'static str,
    pub algo: &'static str,
    pub n: usize,
    pub d: usize,
    pub epsilon: Option<f64>,
    pub trials: usize,
    pub success_rate: f64,
    pub mean_charged_cost: f64,
    pub mean_sim_reads: f64,
    pub slope_window: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FitSummary {
    Slope {
        window: String,
        excluded_smallest_n: bool,
        #[serde(flatten)]
        fit: SlopeFit,
    },
    Joint {
        window: String,
        excluded_smallest_n: bool,
        #[serde(flatten)]
        fit: JointFit,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub fit: Option<FitSummary>,
}

/// Seed of trial `trial` at `(n, d)`, independent of execution order.
pub fn trial_seed(master: u64, n: usize, d: usize, trial: usize) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    [n as u64, d as u64, trial as u64].iter().fold(mix(master), |acc, &x| mix(acc ^ x))
}

/// Runs all trials at one point in parallel and aggregates them in trial
/// order.
pub fn run_point(scenario: Scenario, p: BenchPoint, trials: usize, seed: u64) -> Result<(f64, f64, f64)> {
    if trials == 0 {
        return Err(Error::param("need at least one trial"));
    }
    let results = (0..trials)
        .into_par_iter()
        .map(|t| scenario.run_trial(p.n, p.d, trial_seed(seed, p.n, p.d, t)))
        .collect::<Result<Vec<Trial>>>()?;
    let k = trials as f64;
    let success = results.iter().filter(|t| t.success).count() as f64 / k;
    let cost = results.iter().map(|t| t.charged_cost).sum::<f64>() / k;
    let reads = results.iter().map(|t| t.sim_reads as f64).sum::<f64>() / k;
    Ok((success, cost, reads))
}

pub fn run_bench(spec: &BenchSpec) -> Result<BenchReport> {
    let (window, label) = spec.window();
    let mut rows = Vec::new();
    let mut seen = Vec::new();
    for &p in spec.points.iter().chain(&spec.d_sweep) {
        if seen.contains(&p) {
            continue;
        }
        seen.push(p);
        let (success_rate, mean_charged_cost, mean_sim_reads) = run_point(spec.scenario, p, spec.trials, spec.seed)?;
        rows.push(BenchRow {
            problem: spec.scenario.problem(),
            algo: spec.scenario.algo(),
            n: p.n,
            d: p.d,
            epsilon: spec.scenario.epsilon(),
            trials: spec.trials,
            success_rate,
            mean_charged_cost,
            mean_sim_reads,
            slope_window: label.clone(),
        });
    }
    let cost_at = |p: &BenchPoint| {
        rows.iter()
            .find(|r| r.n == p.n && r.d == p.d)
            .map(|r| r.mean_charged_cost)
            .expect("every point has a row")
    };
    let fit = if spec.d_sweep.is_empty() {
        let pts: Vec<(f64, f64)> = window.iter().map(|p| (p.n as f64, cost_at(p))).collect();
        SlopeFit::fit_loglog(&pts).map(|fit| FitSummary::Slope {
            window: label.clone(),
            excluded_smallest_n: true,
            fit,
        })
    } else {
        let pts: Vec<(f64, f64, f64)> = window.iter().map(|p| (p.n as f64, p.d as f64, cost_at(p))).collect();
        JointFit::fit_loglog(&pts).map(|fit| FitSummary::Joint {
            window: label.clone(),
            excluded_smallest_n: true,
            fit,
        })
    };
    Ok(BenchReport { rows, fit })
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| Error::param(format!("csv: {e}")))?;
    }
    w.flush()?;
    Ok(())
}

/// Parses `2^a..2^b` (powers of two), `lo..hi` (doubling) or a comma list.
pub fn parse_grid(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::param(format!("bad grid {s:?}; use 2^a..2^b or a comma list"));
    let num = |t: &str| -> Result<usize> {
        let t = t.trim();
        match t.strip_prefix("2^") {
            Some(e) => e.parse::<u32>().ok().and_then(|e| 1usize.checked_shl(e)).ok_or_else(bad),
            None => t.parse().map_err(|_| bad()),
        }
    };
    let grid: Vec<usize> = match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo == 0 || lo > hi {
                return Err(bad());
            }
            std::iter::successors(Some(lo), |&x| x.checked_mul(2)).take_while(|&x| x <= hi).collect()
        }
        None => s.split(',').map(num).collect::<Result<_>>()?,
    };
    if grid.is_empty() || grid.contains(&0) {
        return Err(bad());
    }
    Ok(grid)
}
