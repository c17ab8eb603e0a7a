//! Sublinear quantum string algorithms over a simulated primitive layer.
//!
//! Every algorithm reads its input through a [`strings::QueryReader`] and
//! composes primitives from [`qsim`], which charge model quantum cost to a
//! per-run ledger. Exact classical oracles in [`strings`] provide ground truth.

pub mod bench;
pub mod error;
pub mod hardgen;
pub mod instances;
pub mod lcs;
pub mod lps;
pub mod qsim;
pub mod strings;
pub mod ulam;

pub use error::{Error, Result};
pub use qsim::{LedgerSnapshot, Mode, Sim, SimConfig};
pub use strings::{MatchWitness, Symbol, Text, WitnessKind};
