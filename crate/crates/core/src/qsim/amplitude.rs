use std::f64::consts::PI;

use rand::Rng;

use super::sim::Sim;
use crate::error::{Error, Result};

/// A procedure that outputs 1 with some probability.
pub trait BernoulliSource {
    /// Draws one output, charging one run.
    fn sample(&self, sim: &Sim) -> bool;
    /// Model cost of one run.
    fn run_cost(&self) -> f64;
    /// Exact success probability, visible to the simulator only.
    fn true_p(&self) -> Option<f64>;
}

#[derive(Clone, Copy, Debug)]
pub struct FixedBernoulli {
    pub p: f64,
    pub run_cost: f64,
}

impl BernoulliSource for FixedBernoulli {
    fn sample(&self, sim: &Sim) -> bool {
        sim.charge("bernoulli_sample", self.run_cost);
        sim.with_rng(|r| r.random_bool(self.p))
    }

    fn run_cost(&self) -> f64 {
        self.run_cost
    }

    fn true_p(&self) -> Option<f64> {
        Some(self.p)
    }
}

/// Fejér kernel `sin^2(k pi x) / (k^2 sin^2(pi x))`, equal to 1 at integers.
fn fejer(x: f64, k: usize) -> f64 {
    if (x - x.round()).abs() < 1e-12 {
        return 1.0;
    }
    let kf = k as f64;
    let num = (kf * PI * x).sin();
    let den = (PI * x).sin();
    (num * num) / (kf * kf * den * den)
}

/// Outcome distribution of phase estimation with `k` evaluations.
#[derive(Clone, Debug)]
pub struct AmplitudeLaw {
    k: usize,
    probs: Vec<f64>,
    cdf: Vec<f64>,
}

impl AmplitudeLaw {
    pub fn new(p: f64, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("amplitude estimation needs k >= 1"));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param(format!("probability {p} outside [0, 1]")));
        }
        let theta = p.sqrt().asin() / PI;
        let kf = k as f64;
        let probs: Vec<f64> = (0..k)
            .map(|y| {
                let phase = y as f64 / kf;
                0.5 * (fejer(phase - theta, k) + fejer(phase - (1.0 - theta), k))
            })
            .collect();
        let mut acc = 0.0;
        let cdf = probs
            .iter()
            .map(|q| {
                acc += q;
                acc
            })
            .collect();
        Ok(AmplitudeLaw { k, probs, cdf })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// `|sum of probabilities - 1|`, without renormalising.
    pub fn normalization_error(&self) -> f64 {
        (self.cdf.last().copied().unwrap_or(0.0) - 1.0).abs()
    }

    pub fn estimate_for(&self, y: usize) -> f64 {
        let s = (PI * y as f64 / self.k as f64).sin();
        s * s
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        let total = *self.cdf.last().expect("k >= 1");
        let u = rng.random::<f64>() * total;
        let y = self.cdf.partition_point(|&c| c <= u).min(self.k - 1);
        self.estimate_for(y)
    }
}

/// The estimation guarantee `|p - p~| <= 2 pi sqrt(p(1-p))/k + pi^2/k^2`.
pub fn within_estimate_bound(p: f64, estimate: f64, k: usize) -> bool {
    let kf = k as f64;
    let bound = 2.0 * PI * (p * (1.0 - p)).sqrt() / kf + PI * PI / (kf * kf);
    (p - estimate).abs() <= bound + 1e-12
}

/// One amplitude estimate of `src` using `k` runs; charges `k * run_cost`.
pub fn estimate_amplitude(sim: &Sim, src: &dyn BernoulliSource, k: usize) -> Result<f64> {
    Ok(estimate_amplitude_repeated(sim, src, k, 1)?[0])
}

/// `reps` independent estimates sharing one outcome law.
pub fn estimate_amplitude_repeated(
    sim: &Sim,
    src: &dyn BernoulliSource,
    k: usize,
    reps: usize,
) -> Result<Vec<f64>> {
    let p = src
        .true_p()
        .ok_or_else(|| Error::param("source exposes no success probability"))?;
    let law = AmplitudeLaw::new(p, k)?;
    sim.charge(
        "estimate_amplitude",
        reps as f64 * k as f64 * src.run_cost(),
    );
    Ok(sim.with_rng(|r| (0..reps).map(|_| law.sample(r)).collect()))
}
