//! Input strings, query-counted access, witnesses and exact classical oracles.

mod fingerprint;
mod io;
mod oracle;
mod periodic;
mod text;
mod witness;

pub use fingerprint::{exact_value, FingerprintKey, RollingHash};
pub use io::{format_texts, parse_texts, read_texts, write_texts};
pub use oracle::{lcs_oracle, lis_length, lps_oracle, manacher, ulam_oracle};
pub use periodic::{extend_match, extend_periodic, is_periodic, period, Direction};
pub use text::{QueryReader, Symbol, Text, MAX_ALPHABET, UNICODE_ALPHABET};
pub use witness::{MatchWitness, WitnessKind};
