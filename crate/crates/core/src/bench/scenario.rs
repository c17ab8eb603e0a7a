use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instances::{planted_common, planted_palindrome, planted_perm_common, planted_ulam};
use crate::lcs::{decide_large_d, decide_small_d, lcs, nonrep_walk_decide, LcsAlgo, WalkMode, WalkPlan};
use crate::lps::{lps, lps_decide};
use crate::qsim::Sim;
use crate::strings::{lcs_oracle, lps_oracle, ulam_oracle, MatchWitness};
use crate::ulam::ulam_approx;

/// Alphabet of generic planted instances.
pub const BENCH_SIGMA: u32 = 4;

/// What one trial runs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scenario {
    /// Full LCS driver.
    Lcs(LcsAlgo),
    SmallD,
    LargeD,
    Walk(WalkMode),
    /// Full LPS driver.
    Lps,
    LpsDecide,
    Ulam(f64),
}

impl Scenario {
    /// Parses `(problem, algo)` as the command line spells them.
    pub fn parse(problem: &str, algo: &str, epsilon: Option<f64>) -> Result<Self> {
        let eps = || epsilon.ok_or_else(|| Error::param(format!("{problem}/{algo} needs --epsilon")));
        Ok(match (problem, algo) {
            ("lcs", "exact") => Scenario::Lcs(LcsAlgo::Exact),
            ("lcs", "approx") => Scenario::Lcs(LcsAlgo::Approx(eps()?)),
            ("lcs", "nonrep-exact") => Scenario::Lcs(LcsAlgo::NonrepExact),
            ("lcs", "nonrep-approx") => Scenario::Lcs(LcsAlgo::NonrepApprox(eps()?)),
            ("lcs", "small-d") => Scenario::SmallD,
            ("lcs", "large-d") => Scenario::LargeD,
            ("lcs", "walk-exact") => Scenario::Walk(WalkMode::Exact),
            ("lcs", "walk-approx") => Scenario::Walk(WalkMode::Approx(eps()?)),
            ("lps", "quantum") => Scenario::Lps,
            ("lps", "decide") => Scenario::LpsDecide,
            ("ulam", "quantum") => Scenario::Ulam(eps()?),
            _ => return Err(Error::param(format!("unknown benchmark {problem}/{algo}"))),
        })
    }

    pub fn problem(&self) -> &'static str {
        match self {
            Scenario::Lcs(_) | Scenario::SmallD | Scenario::LargeD | Scenario::Walk(_) => "lcs",
            Scenario::Lps | Scenario::LpsDecide => "lps",
            Scenario::Ulam(_) => "ulam",
        }
    }

    pub fn algo(&self) -> &'static str {
        match self {
            Scenario::Lcs(a) => a.name(),
            Scenario::SmallD => "small-d",
            Scenario::LargeD => "large-d",
            Scenario::Walk(WalkMode::Exact) => "walk-exact",
            Scenario::Walk(WalkMode::Approx(_)) => "walk-approx",
            Scenario::Lps => "quantum",
            Scenario::LpsDecide => "decide",
            Scenario::Ulam(_) => "quantum",
        }
    }

    pub fn epsilon(&self) -> Option<f64> {
        match *self {
            Scenario::Lcs(a) => a.epsilon(),
            Scenario::Walk(WalkMode::Approx(e)) | Scenario::Ulam(e) => Some(e),
            _ => None,
        }
    }

    /// The planted-size rule used when none is given.
    pub fn default_rule(&self) -> DRule {
        match self {
            Scenario::SmallD => DRule::Fixed(8),
            Scenario::Walk(_) => DRule::Sqrt(1),
            Scenario::Ulam(_) => DRule::Sqrt(8),
            _ => DRule::Frac(4),
        }
    }

    /// The size actually planted for a requested `d`: Ulam distances are
    /// even and at least 2, everything else lies in `1..=n`.
    pub fn planted(&self, n: usize, d: usize) -> usize {
        match self {
            Scenario::Ulam(_) => 2 * (d / 2).clamp(1, n / 2),
            _ => d.clamp(1, n),
        }
    }

    /// Runs one seeded trial at `(n, d)`. For Ulam `d` is the planted
    /// distance.
    pub fn run_trial(&self, n: usize, d: usize, seed: u64) -> Result<Trial> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sim = Sim::new(seed.rotate_left(17) ^ 0x5851_f42d_4c95_7f2d);
        let d = self.planted(n, d);
        let success = match *self {
            Scenario::Lcs(algo) => {
                let (a, b) = match algo {
                    LcsAlgo::NonrepExact | LcsAlgo::NonrepApprox(_) => planted_perm_common(&mut rng, n, d),
                    _ => planted_common(&mut rng, n, d, BENCH_SIGMA),
                };
                let want = lcs_oracle(&a, &b).length;
                let w = lcs(&sim, &a, &b, algo)?;
                let floor = algo.epsilon().map_or(want as f64, |e| (1.0 - e) * want as f64);
                (w.length == 0 || w.verify_common(&a, &b)) && w.length as f64 >= floor - 1e-9
            }
            Scenario::SmallD | Scenario::LargeD => {
                let (a, b) = planted_common(&mut rng, n, d, BENCH_SIGMA);
                let w = if *self == Scenario::SmallD {
                    decide_small_d(&sim, &a, &b, d)?
                } else {
                    decide_large_d(&sim, &a, &b, d)?
                };
                found(w, |w| w.verify_common(&a, &b) && w.length >= d)
            }
            Scenario::Walk(mode) => {
                let (a, b) = planted_perm_common(&mut rng, n, d);
                let len = WalkPlan::new(n, d, mode)?.len;
                let w = nonrep_walk_decide(&sim, &a, &b, d, mode)?;
                found(w, |w| w.verify_common(&a, &b) && w.length >= len)
            }
            Scenario::Lps => {
                let a = planted_palindrome(&mut rng, n, d, BENCH_SIGMA);
                let w = lps(&sim, &a)?;
                w.verify_palindrome(&a) && w.length == lps_oracle(&a).length
            }
            Scenario::LpsDecide => {
                let a = planted_palindrome(&mut rng, n, d, BENCH_SIGMA);
                found(lps_decide(&sim, &a, d)?, |w| w.verify_palindrome(&a) && w.length >= d)
            }
            Scenario::Ulam(eps) => {
                let (a, b) = planted_ulam(&mut rng, n, d / 2);
                let ud = ulam_oracle(&a, &b)? as f64;
                let v = ulam_approx(&sim, &a, &b, eps)?;
                (1.0 - eps) * ud <= v && v <= (1.0 + eps) * ud
            }
        };
        let snap = sim.ledger().snapshot();
        Ok(Trial {
            success,
            charged_cost: snap.charged_cost,
            sim_reads: snap.sim_reads,
        })
    }
}

fn found(w: Option<MatchWitness>, ok: impl FnOnce(&MatchWitness) -> bool) -> bool {
    w.as_ref().is_some_and(ok)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Trial {
    pub success: bool,
    pub charged_cost: f64,
    pub sim_reads: u64,
}

/// Planted size as a function of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DRule {
    Fixed(usize),
    /// `n / k`.
    Frac(usize),
    /// `sqrt(n) / k`.
    Sqrt(usize),
}

impl DRule {
    pub fn apply(&self, n: usize) -> usize {
        let d = match *self {
            DRule::Fixed(d) => d,
            DRule::Frac(k) => n / k,
            DRule::Sqrt(k) => ((n as f64).sqrt() / k as f64).floor() as usize,
        };
        d.clamp(1, n)
    }
}

impl FromStr for DRule {
    type Err = Error;

    /// `16`, `n/4`, `sqrt` or `sqrt/8`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::param(format!("bad d rule {s:?}; use K, n/K, sqrt or sqrt/K"));
        let k = |t: &str| t.parse::<usize>().ok().filter(|&k| k > 0).ok_or_else(bad);
        match s.split_once('/') {
            Some(("n", t)) => Ok(DRule::Frac(k(t)?)),
            Some(("sqrt", t)) => Ok(DRule::Sqrt(k(t)?)),
            None if s == "sqrt" => Ok(DRule::Sqrt(1)),
            None => Ok(DRule::Fixed(k(s)?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for DRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DRule::Fixed(d) => write!(f, "{d}"),
            DRule::Frac(k) => write!(f, "n/{k}"),
            DRule::Sqrt(1) => write!(f, "sqrt"),
            DRule::Sqrt(k) => write!(f, "sqrt/{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_round_trip() {
        for s in ["16", "n/4", "sqrt", "sqrt/8"] {
            assert_eq!(s.parse::<DRule>().unwrap().to_string(), s);
        }
        assert!("n/0".parse::<DRule>().is_err());
        assert!("x/2".parse::<DRule>().is_err());
        assert_eq!(DRule::Sqrt(8).apply(1 << 16), 32);
        assert_eq!(DRule::Frac(4).apply(3), 1);
    }

    #[test]
    fn names_round_trip() {
        for (p, a) in [
            ("lcs", "exact"),
            ("lcs", "approx"),
            ("lcs", "nonrep-exact"),
            ("lcs", "nonrep-approx"),
            ("lcs", "small-d"),
            ("lcs", "large-d"),
            ("lcs", "walk-exact"),
            ("lcs", "walk-approx"),
            ("lps", "quantum"),
            ("lps", "decide"),
            ("ulam", "quantum"),
        ] {
            let s = Scenario::parse(p, a, Some(0.25)).unwrap();
            assert_eq!((s.problem(), s.algo()), (p, a));
        }
        assert!(Scenario::parse("ulam", "quantum", None).is_err());
        assert!(Scenario::parse("lcs", "nope", None).is_err());
    }

    #[test]
    fn every_scenario_runs() {
        for s in [
            Scenario::Lcs(LcsAlgo::Exact),
            Scenario::Lcs(LcsAlgo::NonrepApprox(0.25)),
            Scenario::SmallD,
            Scenario::LargeD,
            Scenario::Walk(WalkMode::Approx(0.25)),
            Scenario::Lps,
            Scenario::LpsDecide,
            Scenario::Ulam(0.3),
        ] {
            let n = 256;
            let t = s.run_trial(n, s.default_rule().apply(n), 3).unwrap();
            assert!(t.success && t.charged_cost > 0.0, "{s:?}: {t:?}");
            assert_eq!(t, s.run_trial(n, s.default_rule().apply(n), 3).unwrap());
        }
    }
}
