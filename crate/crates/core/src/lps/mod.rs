//! Longest palindromic substring by searching for positions that open the
//! left half of a palindrome of the target length.

mod check;
mod driver;
mod occurrence;

pub use check::{check_cost, check_marked, DIRECT_CENTERS};
pub use driver::{certified_marks, lps, lps_decide, lps_observed};
pub use occurrence::{naive_occurrences, occurrence_set, CandidateCenters, OccurrenceSet};
