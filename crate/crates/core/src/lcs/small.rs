use super::blocks::BlockSets;
use super::{approx_len, check_d, check_eps, check_pair, hint, oracle_len};
use crate::error::Result;
use crate::qsim::{claw_find, log_factor, Feasibility, Sim};
use crate::strings::{extend_match, Direction, MatchWitness, RollingHash, Text};

/// Claw search between windows of length `len` starting at the given
/// 0-based positions, compared by fingerprint and confirmed directly.
fn claw_windows(
    sim: &Sim,
    a: &Text,
    b: &Text,
    starts_a: &[usize],
    starts_b: &[usize],
    len: usize,
    feasibility: Feasibility,
) -> Option<MatchWitness> {
    let eq_cost = (len as f64).sqrt() * log_factor(len);
    if sim.shortcut(feasibility) {
        let n = starts_a.len().max(starts_b.len());
        sim.charge("claw_find", claw_charge(n, eq_cost));
        return None;
    }
    let (ra, rb) = (sim.reader(a), sim.reader(b));
    let (ha, hb) = (RollingHash::new(&ra), RollingHash::new(&rb));
    let keys_a: Vec<_> = starts_a.iter().map(|&i| ha.key(i..i + len)).collect();
    let keys_b: Vec<_> = starts_b.iter().map(|&j| hb.key(j..j + len)).collect();
    claw_find(sim, &keys_a, &keys_b, eq_cost, |x, y| {
        extend_match(&ra, starts_a[x], &rb, starts_b[y], Direction::Forward, len) == len
    })
    .map(|(x, y)| MatchWitness::common(starts_a[x], starts_b[y], len))
}

fn claw_charge(n: usize, eq_cost: f64) -> f64 {
    (n as f64).powf(2.0 / 3.0) * eq_cost * log_factor(n)
}

/// Decides whether a common substring of length `d` exists by a claw
/// search over all `n - d + 1` windows of each string.
pub fn decide_small_d(sim: &Sim, a: &Text, b: &Text, d: usize) -> Result<Option<MatchWitness>> {
    let n = check_pair(a, b)?;
    check_d(d, n)?;
    let feasibility = hint(oracle_len(sim, a, b), d);
    Ok(small_d_with(sim, a, b, d, feasibility))
}

pub(crate) fn small_d_with(
    sim: &Sim,
    a: &Text,
    b: &Text,
    d: usize,
    feasibility: Feasibility,
) -> Option<MatchWitness> {
    let starts: Vec<usize> = (0..=a.len() - d).collect();
    claw_windows(sim, a, b, &starts, &starts, d, feasibility)
}

/// Finds a common substring of length `ceil((1 - eps) d)` whenever one of
/// length `d` exists, searching only the sparse [`BlockSets`] positions.
pub fn approx_small_d(
    sim: &Sim,
    a: &Text,
    b: &Text,
    d: usize,
    eps: f64,
) -> Result<Option<MatchWitness>> {
    let n = check_pair(a, b)?;
    check_d(d, n)?;
    check_eps(eps)?;
    let oracle = oracle_len(sim, a, b);
    Ok(approx_small_d_with(sim, a, b, d, eps, oracle))
}

pub(crate) fn approx_small_d_with(
    sim: &Sim,
    a: &Text,
    b: &Text,
    d: usize,
    eps: f64,
    oracle: Option<usize>,
) -> Option<MatchWitness> {
    let n = a.len();
    let blocks = BlockSets::new(n, d, eps);
    if blocks.k == 1 {
        return small_d_with(sim, a, b, d, hint(oracle, d));
    }
    let len = approx_len(d, eps);
    let last_start = n - len + 1;
    let starts_a: Vec<usize> = blocks.set_a(last_start).into_iter().map(|i| i - 1).collect();
    let starts_b: Vec<usize> = blocks.set_b(last_start).into_iter().map(|i| i - 1).collect();
    claw_windows(sim, a, b, &starts_a, &starts_b, len, hint(oracle, len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::SimConfig;
    use crate::strings::lcs_oracle;
    use crate::instances::planted_common;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn planted(n: usize, d: usize, seed: u64) -> (Text, Text) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        planted_common(&mut rng, n, d, 26)
    }

    #[test]
    fn finds_planted_block() {
        let mut wins = 0;
        for seed in 0..100 {
            let (a, b) = planted(200, 8, seed);
            let sim = Sim::new(seed);
            if let Some(w) = decide_small_d(&sim, &a, &b, 8).unwrap() {
                assert!(w.verify_common(&a, &b) && w.length == 8);
                wins += 1;
            }
        }
        assert!(wins >= 95);
    }

    #[test]
    fn absent_block_is_empty() {
        let a = Text::from_utf8("aaaaaaaa").unwrap();
        let b = Text::from_utf8("bbbbbbbb").unwrap();
        for shortcut in [true, false] {
            let cfg = SimConfig {
                feasibility_shortcut: shortcut,
                ..SimConfig::default()
            };
            let sim = Sim::with_config(0, cfg);
            assert_eq!(decide_small_d(&sim, &a, &b, 2).unwrap(), None);
        }
    }

    #[test]
    fn whole_string() {
        let a = Text::from_utf8("abcdefgh").unwrap();
        let w = decide_small_d(&Sim::new(0), &a, &a, 8).unwrap().unwrap();
        assert_eq!((w.pos_a, w.pos_b, w.length), (1, 1, 8));
    }

    #[test]
    fn shortcut_does_not_change_the_charge() {
        let (a, b) = planted(120, 5, 3);
        let d = lcs_oracle(&a, &b).length + 1;
        let on = Sim::new(0);
        let off = Sim::with_config(
            0,
            SimConfig {
                feasibility_shortcut: false,
                ..SimConfig::default()
            },
        );
        assert_eq!(decide_small_d(&on, &a, &b, d).unwrap(), None);
        assert_eq!(decide_small_d(&off, &a, &b, d).unwrap(), None);
        assert_eq!(on.ledger().charged_cost(), off.ledger().charged_cost());
    }

    #[test]
    fn approx_finds_shortened_witness() {
        let mut wins = 0;
        for seed in 0..40 {
            let (a, b) = planted(300, 36, seed);
            let sim = Sim::new(seed);
            let w = approx_small_d(&sim, &a, &b, 36, 0.25).unwrap();
            if let Some(w) = w {
                assert!(w.verify_common(&a, &b) && w.length >= 27);
                wins += 1;
            }
        }
        assert_eq!(wins, 40);
    }
}
