use rand_chacha::ChaCha8Rng;

use super::sim::{log_factor, Feasibility, Sim};
use crate::error::{Error, Result};

/// Parameters of a walk over pairs of `r`-subsets of a ground set.
///
/// The three costs are the setup, update and check costs evaluated at `r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WalkConfig {
    pub ground_set_size: usize,
    pub r: usize,
    pub delta: f64,
    pub setup_cost: f64,
    pub update_cost: f64,
    pub check_cost: f64,
    pub gamma: f64,
}

impl WalkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.r < 1 || self.r > self.ground_set_size {
            return Err(Error::param(format!(
                "walk subset size {} outside 1..={}",
                self.r, self.ground_set_size
            )));
        }
        if !(self.delta > 0.0 && self.delta <= 1.0) {
            return Err(Error::param(format!("walk delta {} outside (0, 1]", self.delta)));
        }
        if !(self.gamma > 0.0) {
            return Err(Error::param("walk gamma must be positive"));
        }
        Ok(())
    }

    /// `s + sqrt(1/delta) * (sqrt(r) * u + c)` times the log factor.
    pub fn charge(&self) -> f64 {
        let core = self.setup_cost
            + (1.0 / self.delta).sqrt()
                * ((self.r as f64).sqrt() * self.update_cost + self.check_cost);
        core * log_factor(self.ground_set_size)
    }

    /// Number of independent states the simulation inspects.
    pub fn max_draws(&self) -> usize {
        let ln_n = (self.ground_set_size.max(3) as f64).ln();
        (self.gamma * ln_n / self.delta).ceil() as usize
    }

    /// Failure floor `n^-gamma` used by noisy mode.
    pub fn failure_floor(&self) -> f64 {
        (self.ground_set_size.max(2) as f64).powf(-self.gamma)
    }
}

/// Looks for a marked state by sampling states and checking each.
///
/// Never returns anything when no state is marked. Charged once.
pub fn mnrs_walk<S, W>(
    sim: &Sim,
    cfg: &WalkConfig,
    hint: Feasibility,
    mut sampler: impl FnMut(&mut ChaCha8Rng) -> S,
    mut checker: impl FnMut(&S) -> Option<W>,
) -> Result<Option<W>> {
    cfg.validate()?;
    sim.charge("mnrs_walk", cfg.charge());
    if sim.shortcut(hint) {
        return Ok(None);
    }
    for _ in 0..cfg.max_draws() {
        let state = sim.with_rng(&mut sampler);
        if let Some(w) = sim.scratch(|| checker(&state)) {
            if sim.inject_failure_at(cfg.failure_floor()) {
                return Ok(None);
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::index::sample;

    fn cfg(size: usize, r: usize, delta: f64) -> WalkConfig {
        WalkConfig {
            ground_set_size: size,
            r,
            delta,
            setup_cost: r as f64,
            update_cost: 1.0,
            check_cost: 2.0,
            gamma: 1.0,
        }
    }

    #[test]
    fn all_marked_first_draw() {
        let sim = Sim::new(0);
        let c = cfg(16, 4, 1.0);
        let mut draws = 0;
        let w = mnrs_walk(
            &sim,
            &c,
            Feasibility::Unknown,
            |_| {
                draws += 1;
            },
            |_| Some(7),
        )
        .unwrap();
        assert_eq!((w, draws), (Some(7), 1));
        // (4 + 1 * (2 * 1 + 2)) * log2(16)
        assert_eq!(sim.ledger().charged_cost(), 8.0 * 4.0);
    }

    #[test]
    fn never_marked_rejects() {
        let sim = Sim::new(0);
        let w = mnrs_walk(&sim, &cfg(16, 4, 0.5), Feasibility::Unknown, |_| (), |_| None::<u8>);
        assert_eq!(w.unwrap(), None);
    }

    #[test]
    fn invalid_config() {
        let sim = Sim::new(0);
        assert!(mnrs_walk(&sim, &cfg(4, 5, 0.5), Feasibility::Unknown, |_| (), |_| Some(())).is_err());
        assert!(mnrs_walk(&sim, &cfg(4, 2, 0.0), Feasibility::Unknown, |_| (), |_| Some(())).is_err());
    }

    /// Fraction of (R1, R2) pairs of 3-subsets of 0..12 with 0 in R1 and 1 in R2.
    #[test]
    fn planted_fraction_success_rate() {
        let size = 12;
        let r = 3;
        let mut marked = 0usize;
        let mut total = 0usize;
        let subsets: Vec<u32> = (0u32..1 << size).filter(|m| m.count_ones() == r as u32).collect();
        for &m1 in &subsets {
            for &m2 in &subsets {
                total += 1;
                if m1 & 1 != 0 && m2 & 2 != 0 {
                    marked += 1;
                }
            }
        }
        let fraction = marked as f64 / total as f64;
        let c = cfg(size, r, fraction);
        let sim = Sim::new(21);
        let trials = 500;
        let wins = (0..trials)
            .filter(|_| {
                mnrs_walk(
                    &sim,
                    &c,
                    Feasibility::Unknown,
                    |rng| {
                        let r1: Vec<usize> = sample(rng, size, r).into_vec();
                        let r2: Vec<usize> = sample(rng, size, r).into_vec();
                        (r1, r2)
                    },
                    |(r1, r2)| (r1.contains(&0) && r2.contains(&1)).then_some(()),
                )
                .unwrap()
                .is_some()
            })
            .count();
        assert!(wins as f64 / trials as f64 >= 1.0 - 1.0 / size as f64, "{wins}");
    }
}
