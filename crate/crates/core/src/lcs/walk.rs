use std::collections::HashMap;

use rand::seq::index::sample;

use super::{approx_len, check_d, check_eps, check_pair, floor_eps, hint, oracle_len};
use crate::error::{Error, Result};
use crate::qsim::{grover_find_map, mnrs_walk, Feasibility, Sim, WalkConfig};
use crate::strings::{extend_match, Direction, MatchWitness, QueryReader, Text};

/// Constant in front of the marked-fraction lower bound.
pub const MARKED_CONSTANT: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WalkMode {
    Exact,
    Approx(f64),
}

/// Walk parameters for one decision at length `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkPlan {
    pub n: usize,
    pub d: usize,
    pub mode: WalkMode,
    /// Length each stored collision must extend to.
    pub len: usize,
    pub ground: usize,
    pub r: usize,
    pub delta: f64,
    /// Largest collision count a marked state may hold.
    pub cap: usize,
    pub alpha: f64,
}

fn round_clamped(x: f64, hi: usize) -> usize {
    (x.round() as usize).clamp(1, hi.max(1))
}

impl WalkPlan {
    pub fn new(n: usize, d: usize, mode: WalkMode) -> Result<Self> {
        check_d(d, n)?;
        if let WalkMode::Approx(eps) = mode {
            check_eps(eps)?;
        }
        let ground = n - d + 1;
        let (nf, df) = (n as f64, d as f64);
        let r = match mode {
            WalkMode::Exact if df > nf.cbrt() => nf.powf(2.0 / 3.0).max(nf.sqrt() * df.powf(0.25)),
            WalkMode::Exact => nf.powf(2.0 / 3.0),
            WalkMode::Approx(_) => (nf.powf(2.0 / 3.0) / df.cbrt()).min(nf / df),
        };
        Ok(Self::with_r_unchecked(n, d, mode, round_clamped(r, ground)))
    }

    /// The same plan with subset size `r`, without the `r <= n/d` bound the
    /// approximate walk's analysis assumes.
    pub fn with_r(&self, r: usize) -> Self {
        Self::with_r_unchecked(self.n, self.d, self.mode, r.clamp(1, self.ground))
    }

    fn with_r_unchecked(n: usize, d: usize, mode: WalkMode, r: usize) -> Self {
        let ground = n - d + 1;
        let (nf, rf) = (n as f64, r as f64);
        let alpha = (54.0 * nf.max(2.0).ln()).ceil();
        let (len, delta, cap) = match mode {
            WalkMode::Exact => (
                d,
                MARKED_CONSTANT * rf * rf / (nf * nf),
                alpha * (rf * rf / nf + 1.0),
            ),
            WalkMode::Approx(eps) => (
                approx_len(d, eps),
                MARKED_CONSTANT * (floor_eps(d, eps) + 1) as f64 * rf * rf / (nf * nf),
                alpha * rf * rf / nf,
            ),
        };
        WalkPlan {
            n,
            d,
            mode,
            len,
            ground,
            r,
            delta: delta.min(1.0),
            cap: (cap.ceil() as usize).max(1),
            alpha,
        }
    }

    pub fn config(&self) -> WalkConfig {
        let check = 1.0 + (self.cap as f64).sqrt() * (self.len as f64).sqrt();
        WalkConfig {
            ground_set_size: self.ground,
            r: self.r,
            delta: self.delta,
            setup_cost: self.r as f64,
            update_cost: 1.0,
            check_cost: check,
            gamma: 1.0,
        }
    }

    /// Whether the state holds a collision extending to `len` symbols, and
    /// whether its collision count is within the cap.
    pub fn classify(&self, a: &QueryReader<'_>, b: &QueryReader<'_>, state: &WalkState) -> (bool, bool) {
        let hit = state
            .collision_pairs
            .iter()
            .any(|&(i, j)| extend_match(a, i, b, j, Direction::Forward, self.len) == self.len);
        (hit, state.collision_count() <= self.cap)
    }
}

/// Two subsets of starting positions and the symbol collisions between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkState {
    pub r1: Vec<usize>,
    pub r2: Vec<usize>,
    pub collision_pairs: Vec<(usize, usize)>,
}

impl WalkState {
    pub fn build(a: &QueryReader<'_>, b: &QueryReader<'_>, r1: Vec<usize>, r2: Vec<usize>) -> Self {
        let by_symbol: HashMap<_, _> = r2.iter().map(|&j| (b.get(j), j)).collect();
        let collision_pairs = r1
            .iter()
            .filter_map(|&i| by_symbol.get(&a.get(i)).map(|&j| (i, j)))
            .collect();
        WalkState {
            r1,
            r2,
            collision_pairs,
        }
    }

    pub fn sample<R: rand::Rng>(rng: &mut R, a: &QueryReader<'_>, b: &QueryReader<'_>, plan: &WalkPlan) -> Self {
        let r1 = sample(rng, plan.ground, plan.r).into_vec();
        let r2 = sample(rng, plan.ground, plan.r).into_vec();
        Self::build(a, b, r1, r2)
    }

    pub fn collision_count(&self) -> usize {
        self.collision_pairs.len()
    }
}

/// Decides a common substring of length `d` (or `ceil((1 - eps) d)` in
/// approximate mode) between non-repetitive strings by a walk over pairs of
/// position subsets.
pub fn nonrep_walk_decide(
    sim: &Sim,
    a: &Text,
    b: &Text,
    d: usize,
    mode: WalkMode,
) -> Result<Option<MatchWitness>> {
    let n = check_pair(a, b)?;
    if !a.is_non_repetitive() || !b.is_non_repetitive() {
        return Err(Error::NotNonRepetitive);
    }
    let plan = WalkPlan::new(n, d, mode)?;
    let feasibility = hint(oracle_len(sim, a, b), plan.len);
    walk_with(sim, a, b, &plan, feasibility)
}

pub(crate) fn walk_with(
    sim: &Sim,
    a: &Text,
    b: &Text,
    plan: &WalkPlan,
    feasibility: Feasibility,
) -> Result<Option<MatchWitness>> {
    let (ra, rb) = (sim.reader(a), sim.reader(b));
    let len = plan.len;
    mnrs_walk(
        sim,
        &plan.config(),
        feasibility,
        |rng| WalkState::sample(rng, &ra, &rb, plan),
        |state| {
            if state.collision_count() > plan.cap {
                return None;
            }
            let pairs = &state.collision_pairs;
            if pairs.is_empty() {
                return None;
            }
            let eval = (len as f64).sqrt();
            grover_find_map(sim, pairs.len(), eval, |k| {
                let (i, j) = pairs[k];
                (extend_match(&ra, i, &rb, j, Direction::Forward, len) == len)
                    .then(|| MatchWitness::common(i, j, len))
            })
            .map(|(_, w)| w)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::planted_perm_common;
    use crate::strings::lcs_oracle;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn plan_parameters() {
        let p = WalkPlan::new(1000, 5, WalkMode::Exact).unwrap();
        assert_eq!(p.r, 100);
        assert_eq!(p.alpha, (54.0 * 1000f64.ln()).ceil());
        let q = WalkPlan::new(1000, 100, WalkMode::Approx(0.25)).unwrap();
        assert!(q.r <= 10);
        assert_eq!(q.len, 75);
    }

    #[test]
    fn collisions_are_unique_per_position() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (a, b) = planted_perm_common(&mut rng, 100, 10);
        let sim = Sim::new(0);
        let (ra, rb) = (sim.reader(&a), sim.reader(&b));
        let plan = WalkPlan::new(100, 10, WalkMode::Exact).unwrap();
        for _ in 0..200 {
            let st = WalkState::sample(&mut rng, &ra, &rb, &plan);
            let mut seen: Vec<usize> = st.collision_pairs.iter().map(|p| p.0).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), st.collision_count());
            for &(i, j) in &st.collision_pairs {
                assert_eq!(a.symbols()[i], b.symbols()[j]);
            }
        }
    }

    #[test]
    fn finds_planted_run() {
        let mut wins = 0;
        for seed in 0..30 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b) = planted_perm_common(&mut rng, 200, 6);
            let d = lcs_oracle(&a, &b).length;
            let sim = Sim::new(seed);
            if let Some(w) = nonrep_walk_decide(&sim, &a, &b, d, WalkMode::Exact).unwrap() {
                assert!(w.verify_common(&a, &b) && w.length == d);
                wins += 1;
            }
            let sim = Sim::new(seed);
            let w = nonrep_walk_decide(&sim, &a, &b, d, WalkMode::Approx(0.5)).unwrap();
            assert!(w.is_some_and(|w| w.verify_common(&a, &b) && w.length >= 3));
        }
        assert!(wins >= 29);
    }

    #[test]
    fn rejects_repetitive_input() {
        let a = Text::from_utf8("aab").unwrap();
        let err = nonrep_walk_decide(&Sim::new(0), &a, &a, 1, WalkMode::Exact);
        assert!(matches!(err, Err(Error::NotNonRepetitive)));
    }

    #[test]
    fn no_common_run() {
        let a = Text::permutation(vec![0, 1, 2, 3, 4, 5]).unwrap();
        let b = Text::permutation(vec![5, 4, 3, 2, 1, 0]).unwrap();
        for shortcut in [false, true] {
            let cfg = crate::qsim::SimConfig {
                feasibility_shortcut: shortcut,
                ..Default::default()
            };
            let sim = Sim::with_config(0, cfg);
            assert_eq!(nonrep_walk_decide(&sim, &a, &b, 2, WalkMode::Exact).unwrap(), None);
        }
    }
}
