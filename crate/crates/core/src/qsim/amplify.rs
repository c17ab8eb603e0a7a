use super::sim::{Feasibility, Sim};

/// Amplitude amplification of a one-sided procedure.
///
/// `trial` succeeds with probability at least `p_lower` when a witness
/// exists and never returns a false one. Charges `ceil(1/sqrt(p_lower))`
/// times `run_cost`; the simulation reruns `trial` up to `ceil(10/p_lower)`
/// times with charging suspended.
pub fn amplify<T>(
    sim: &Sim,
    p_lower: f64,
    run_cost: f64,
    hint: Feasibility,
    mut trial: impl FnMut() -> Option<T>,
) -> Option<T> {
    assert!(
        p_lower > 0.0 && p_lower <= 1.0,
        "p_lower must be in (0, 1], got {p_lower}"
    );
    sim.charge("amplify", (1.0 / p_lower.sqrt()).ceil() * run_cost);
    if sim.shortcut(hint) {
        return None;
    }
    let runs = (10.0 / p_lower).ceil() as u64;
    for _ in 0..runs {
        if let Some(w) = sim.scratch(&mut trial) {
            if sim.inject_failure() {
                return None;
            }
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::sim::{Mode, SimConfig};
    use rand::Rng;

    #[test]
    fn deterministic_success_first_run() {
        let sim = Sim::new(0);
        let mut calls = 0;
        let out = amplify(&sim, 0.25, 3.0, Feasibility::Unknown, || {
            calls += 1;
            Some(42)
        });
        assert_eq!((out, calls), (Some(42), 1));
        assert_eq!(sim.ledger().charged_cost(), 2.0 * 3.0);
    }

    #[test]
    fn always_fail_is_empty() {
        let sim = Sim::new(0);
        assert_eq!(amplify(&sim, 0.5, 1.0, Feasibility::Unknown, || None::<u8>), None);
    }

    #[test]
    fn inner_charges_are_absorbed() {
        let sim = Sim::new(0);
        amplify(&sim, 1.0, 1.0, Feasibility::Unknown, || {
            sim.charge("inner", 100.0);
            Some(())
        });
        assert_eq!(sim.ledger().charged_cost(), 1.0);
    }

    #[test]
    fn bernoulli_at_the_floor() {
        let sim = Sim::new(17);
        let trials = 2000;
        let wins = (0..trials)
            .filter(|_| {
                amplify(&sim, 0.01, 1.0, Feasibility::Unknown, || {
                    sim.with_rng(|r| r.random_bool(0.01)).then_some(())
                })
                .is_some()
            })
            .count();
        assert!(wins as f64 / trials as f64 >= 0.9 - 0.02);
    }

    #[test]
    fn noisy_rate_at_the_floor() {
        let cfg = SimConfig {
            mode: Mode::Noisy,
            ..SimConfig::default()
        };
        let sim = Sim::with_config(5, cfg);
        let trials = 3000;
        let wins = (0..trials)
            .filter(|_| {
                amplify(&sim, 0.05, 1.0, Feasibility::Unknown, || {
                    sim.with_rng(|r| r.random_bool(0.05)).then_some(())
                })
                .is_some()
            })
            .count();
        let rate = wins as f64 / trials as f64;
        assert!((rate - 0.9).abs() <= 0.03, "{rate}");
    }

    #[test]
    #[should_panic]
    fn rejects_zero_floor() {
        amplify(&Sim::new(0), 0.0, 1.0, Feasibility::Unknown, || Some(()));
    }
}
