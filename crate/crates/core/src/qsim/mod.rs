//! Classical stand-ins for quantum search primitives.
//!
//! Each primitive returns an answer with the distribution its quantum
//! counterpart guarantees at the interface, and charges that counterpart's
//! cost formula to the run's [`QueryLedger`]. Simulation work shows up only
//! in `sim_reads`.

mod amplify;
mod amplitude;
mod claw;
mod grover;
mod ledger;
mod pattern;
mod sim;
mod walk;

pub use amplify::amplify;
pub use amplitude::{
    estimate_amplitude, estimate_amplitude_repeated, within_estimate_bound, AmplitudeLaw,
    BernoulliSource, FixedBernoulli,
};
pub use claw::claw_find;
pub use grover::{
    extend_match_search, extend_periodic_search, grover_find, grover_find_map, grover_threshold,
    grover_threshold_find, leftmost_marked, mirror_search,
};
pub use ledger::{LedgerSnapshot, QueryLedger};
pub use pattern::{pattern_match, Side, View};
pub use sim::{log_factor, Feasibility, GroverCharge, Mode, Sim, SimConfig};
pub use walk::{mnrs_walk, WalkConfig};
