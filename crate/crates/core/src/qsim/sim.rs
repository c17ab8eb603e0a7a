use std::cell::{Cell, RefCell};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ledger::QueryLedger;
use crate::strings::{QueryReader, Text};

/// Whether primitives succeed with certainty or fail at their contract floor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Ideal,
    Noisy,
}

/// How `grover_find` prices a search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroverCharge {
    /// `sqrt(n / m)` with `m` the actual marked count.
    #[default]
    Adaptive,
    /// `sqrt(n)` regardless of `m`.
    Strict,
}

/// Caller knowledge about whether a one-sided search can succeed at all.
///
/// `Impossible` must only be passed when an exact oracle certifies that no
/// witness exists. The primitive then charges as usual but skips the
/// simulation, which could not have returned anything.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Feasibility {
    #[default]
    Unknown,
    Impossible,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimConfig {
    pub mode: Mode,
    pub grover_charge: GroverCharge,
    /// Honour `Feasibility::Impossible` hints.
    pub feasibility_shortcut: bool,
    /// Failure probability injected in noisy mode.
    pub failure_rate: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            mode: Mode::Ideal,
            grover_charge: GroverCharge::Adaptive,
            feasibility_shortcut: true,
            failure_rate: 0.1,
        }
    }
}

/// One simulated run: configuration, ledger and RNG stream.
///
/// Shared by reference so predicates handed to a primitive can themselves
/// call primitives. Calls made inside [`Sim::scratch`] keep counting reads
/// but charge nothing, because an enclosing primitive already priced them.
pub struct Sim {
    config: SimConfig,
    ledger: QueryLedger,
    rng: RefCell<ChaCha8Rng>,
    scratch_depth: Cell<u32>,
}

impl Sim {
    pub fn new(seed: u64) -> Self {
        Self::with_config(seed, SimConfig::default())
    }

    pub fn with_config(seed: u64, config: SimConfig) -> Self {
        Sim {
            config,
            ledger: QueryLedger::new(),
            rng: RefCell::new(ChaCha8Rng::seed_from_u64(seed)),
            scratch_depth: Cell::new(0),
        }
    }

    pub fn config(&self) -> &SimConfig {
        &self.config
    }

    pub fn ledger(&self) -> &QueryLedger {
        &self.ledger
    }

    pub fn reader<'a>(&'a self, text: &'a Text) -> QueryReader<'a> {
        QueryReader::new(text, self.ledger.reads_cell())
    }

    /// Charges `units` unless inside a scratch scope.
    pub fn charge(&self, primitive: &str, units: f64) {
        if self.scratch_depth.get() == 0 {
            self.ledger.charge(primitive, units);
        }
    }

    pub fn in_scratch(&self) -> bool {
        self.scratch_depth.get() > 0
    }

    /// Runs `f` with charging suspended.
    pub fn scratch<R>(&self, f: impl FnOnce() -> R) -> R {
        struct Guard<'a>(&'a Cell<u32>);
        impl Drop for Guard<'_> {
            fn drop(&mut self) {
                self.0.set(self.0.get() - 1);
            }
        }
        self.scratch_depth.set(self.scratch_depth.get() + 1);
        let _guard = Guard(&self.scratch_depth);
        f()
    }

    /// Borrows the RNG for the duration of `f`; `f` must not call back into
    /// anything that draws randomness.
    pub fn with_rng<R>(&self, f: impl FnOnce(&mut ChaCha8Rng) -> R) -> R {
        f(&mut self.rng.borrow_mut())
    }

    pub fn uniform(&self, upper: usize) -> usize {
        self.with_rng(|r| r.random_range(0..upper))
    }

    /// Noisy mode only: a failure event at the configured floor.
    pub fn inject_failure(&self) -> bool {
        self.inject_failure_at(self.config.failure_rate)
    }

    pub fn inject_failure_at(&self, rate: f64) -> bool {
        self.config.mode == Mode::Noisy && self.with_rng(|r| r.random_bool(rate.clamp(0.0, 1.0)))
    }

    pub(crate) fn shortcut(&self, hint: Feasibility) -> bool {
        self.config.feasibility_shortcut && hint == Feasibility::Impossible
    }
}

/// `max(1, ceil(log2(size)))`, the polylog multiplier on search charges.
pub fn log_factor(size: usize) -> f64 {
    if size <= 2 {
        1.0
    } else {
        (usize::BITS - (size - 1).leading_zeros()) as f64
    }
}
