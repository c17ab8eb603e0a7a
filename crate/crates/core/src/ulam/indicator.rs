use rand::Rng;

use crate::error::{Error, Result};
use crate::qsim::{BernoulliSource, Sim};
use crate::strings::{ulam_oracle, Text};

/// Where inside its guaranteed interval the indicator's probability sits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndicatorVariant {
    /// `ud / (n + t')`.
    #[default]
    Midpoint,
    /// `(1 - delta) ud / (n + t')`.
    Lower,
    /// `((1 + delta) ud + delta) / (n + t')`.
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndicatorParams {
    pub delta: f64,
    pub t_prime: u64,
    pub c: f64,
}

impl IndicatorParams {
    pub fn new(delta: f64, t_prime: u64, c: f64) -> Result<Self> {
        if !(delta > 0.0) {
            return Err(Error::param(format!("delta must be positive, got {delta}")));
        }
        if t_prime < 1 {
            return Err(Error::param("t' must be at least 1"));
        }
        if !(c > 0.0) {
            return Err(Error::param(format!("c must be positive, got {c}")));
        }
        Ok(IndicatorParams { delta, t_prime, c })
    }

    /// The probability interval the indicator promises for distance `ud`.
    pub fn interval(&self, n: usize, ud: u64) -> (f64, f64) {
        let scale = n as f64 + self.t_prime as f64;
        let ud = ud as f64;
        (
            (1.0 - self.delta) * ud / scale,
            ((1.0 + self.delta) * ud + self.delta) / scale,
        )
    }
}

/// Bernoulli source standing in for the classical Ulam indicator.
///
/// The distance is read from the exact oracle without charge; each sample
/// charges `sqrt(t')`.
#[derive(Clone, Debug)]
pub struct UlamIndicator {
    params: IndicatorParams,
    ud: u64,
    p: f64,
}

impl UlamIndicator {
    pub fn ud(&self) -> u64 {
        self.ud
    }

    pub fn params(&self) -> &IndicatorParams {
        &self.params
    }

    /// The precondition `t' >= c * ud` failed for this source.
    pub fn breached(&self) -> bool {
        (self.params.t_prime as f64) < self.params.c * self.ud as f64
    }

    /// The breach as an error, for callers that refuse to proceed.
    pub fn check(&self) -> Result<()> {
        if self.breached() {
            return Err(Error::IndicatorPrecondition {
                t_prime: self.params.t_prime,
                bound: self.params.c * self.ud as f64,
            });
        }
        Ok(())
    }
}

impl BernoulliSource for UlamIndicator {
    fn sample(&self, sim: &Sim) -> bool {
        sim.charge("ulam_indicator", self.run_cost());
        sim.with_rng(|r| r.random_bool(self.p))
    }

    fn run_cost(&self) -> f64 {
        (self.params.t_prime as f64).sqrt()
    }

    fn true_p(&self) -> Option<f64> {
        Some(self.p)
    }
}

/// Builds the indicator for `(a, b)`. A breached precondition is recorded on
/// the returned source rather than rejected.
pub fn ulam_indicator(a: &Text, b: &Text, params: IndicatorParams, variant: IndicatorVariant) -> Result<UlamIndicator> {
    let ud = ulam_oracle(a, b)?;
    Ok(indicator_for_distance(a.len(), ud, params, variant))
}

pub(crate) fn indicator_for_distance(n: usize, ud: u64, params: IndicatorParams, variant: IndicatorVariant) -> UlamIndicator {
    let (lo, hi) = params.interval(n, ud);
    let p = match variant {
        IndicatorVariant::Midpoint => ud as f64 / (n as f64 + params.t_prime as f64),
        IndicatorVariant::Lower => lo,
        IndicatorVariant::Upper => hi,
    };
    UlamIndicator {
        params,
        ud,
        p: if ud == 0 { 0.0 } else { p.clamp(0.0, 1.0) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::planted_ulam;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identical_never_fires() {
        let a = Text::permutation((0..50).collect()).unwrap();
        let src = ulam_indicator(&a, &a, IndicatorParams::new(0.1, 10, 1.0).unwrap(), IndicatorVariant::Upper).unwrap();
        let sim = Sim::new(0);
        assert_eq!(src.true_p(), Some(0.0));
        assert!((0..1000).all(|_| !src.sample(&sim)));
    }

    #[test]
    fn direct_formula() {
        let params = IndicatorParams::new(0.1, 40, 1.0).unwrap();
        let src = indicator_for_distance(100, 4, params, IndicatorVariant::Midpoint);
        assert_eq!(src.true_p(), Some(4.0 / 140.0));
        assert!(!src.breached());
        let (lo, hi) = params.interval(100, 4);
        for v in [IndicatorVariant::Lower, IndicatorVariant::Upper] {
            let p = indicator_for_distance(100, 4, params, v).true_p().unwrap();
            assert!(p == lo || p == hi);
        }
    }

    #[test]
    fn empirical_mean() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (a, b) = planted_ulam(&mut rng, 100, 10);
        let src = ulam_indicator(&a, &b, IndicatorParams::new(0.1, 30, 1.0).unwrap(), IndicatorVariant::Midpoint).unwrap();
        let p = src.true_p().unwrap();
        assert_eq!(p, 20.0 / 130.0);
        let sim = Sim::new(9);
        let n = 100_000;
        let ones = (0..n).filter(|_| src.sample(&sim)).count() as f64;
        assert!((ones / n as f64 - p).abs() <= 3.0 * (p * (1.0 - p) / n as f64).sqrt());
        assert!((sim.ledger().charged_cost() / (n as f64 * 30f64.sqrt()) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn breach_is_reported() {
        let src = indicator_for_distance(100, 10, IndicatorParams::new(0.1, 5, 1.0).unwrap(), IndicatorVariant::Midpoint);
        assert!(src.breached());
        assert!(matches!(src.check(), Err(Error::IndicatorPrecondition { t_prime: 5, .. })));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(IndicatorParams::new(0.0, 1, 1.0).is_err());
        assert!(IndicatorParams::new(0.1, 0, 1.0).is_err());
    }

    #[test]
    fn repetitive_input_rejected() {
        let a = Text::from_utf8("aab").unwrap();
        let p = IndicatorParams::new(0.1, 1, 1.0).unwrap();
        assert!(ulam_indicator(&a, &a, p, IndicatorVariant::Midpoint).is_err());
    }
}
