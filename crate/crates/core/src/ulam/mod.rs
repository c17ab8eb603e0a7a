//! Approximate Ulam distance by a gap test on a sampled indicator, run
//! over a geometric ladder of thresholds.

mod driver;
mod indicator;
mod qtest;

pub use driver::{
    loop_depth, loop_threshold, ulam_approx, ulam_approx_traced, UlamConfig, UlamPath, UlamRun,
    UlamRunState,
};
pub use indicator::{ulam_indicator, IndicatorParams, IndicatorVariant, UlamIndicator};
pub use qtest::{qtest, qtest_k, qtest_reps, qtest_single, GapVerdict, Verdict};
