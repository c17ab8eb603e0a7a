use std::cell::{Cell, RefCell};
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Two cost channels for one run: characters actually read by the
/// simulation, and model quantum cost charged per primitive.
#[derive(Debug, Default)]
pub struct QueryLedger {
    sim_reads: Cell<u64>,
    breakdown: RefCell<BTreeMap<String, f64>>,
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reads_cell(&self) -> &Cell<u64> {
        &self.sim_reads
    }

    pub fn sim_reads(&self) -> u64 {
        self.sim_reads.get()
    }

    pub fn add_reads(&self, k: u64) {
        self.sim_reads.set(self.sim_reads.get() + k);
    }

    pub fn charge(&self, primitive: &str, units: f64) {
        assert!(
            units.is_finite() && units >= 0.0,
            "charge must be finite and non-negative, got {units}"
        );
        let mut map = self.breakdown.borrow_mut();
        match map.get_mut(primitive) {
            Some(v) => *v += units,
            None => {
                map.insert(primitive.to_owned(), units);
            }
        }
    }

    /// Sum of the breakdown, in key order.
    pub fn charged_cost(&self) -> f64 {
        self.breakdown.borrow().values().sum()
    }

    pub fn snapshot(&self) -> LedgerSnapshot {
        let breakdown = self.breakdown.borrow().clone();
        LedgerSnapshot {
            sim_reads: self.sim_reads.get(),
            charged_cost: breakdown.values().sum(),
            breakdown,
        }
    }
}

/// Serializable ledger state.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LedgerSnapshot {
    pub sim_reads: u64,
    pub charged_cost: f64,
    pub breakdown: BTreeMap<String, f64>,
}

impl LedgerSnapshot {
    /// Adds another run's charges into this one.
    pub fn merge(&mut self, other: &LedgerSnapshot) {
        self.sim_reads += other.sim_reads;
        for (k, v) in &other.breakdown {
            *self.breakdown.entry(k.clone()).or_insert(0.0) += v;
        }
        self.charged_cost = self.breakdown.values().sum();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_is_sum_of_breakdown() {
        let l = QueryLedger::new();
        l.charge("grover_find", 3.0);
        l.charge("pattern_match", 1.5);
        l.charge("grover_find", 2.0);
        l.add_reads(7);
        let s = l.snapshot();
        assert_eq!(s.charged_cost, 6.5);
        assert_eq!(s.breakdown["grover_find"], 5.0);
        assert_eq!(s.sim_reads, 7);
    }

    #[test]
    fn json_shape() {
        let l = QueryLedger::new();
        l.charge("amplify", 4.0);
        let v = serde_json::to_value(l.snapshot()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"sim_reads": 0, "charged_cost": 4.0, "breakdown": {"amplify": 4.0}})
        );
    }

    #[test]
    fn merge_adds() {
        let mut a = LedgerSnapshot::default();
        let l = QueryLedger::new();
        l.charge("x", 1.0);
        l.add_reads(2);
        a.merge(&l.snapshot());
        a.merge(&l.snapshot());
        assert_eq!((a.sim_reads, a.charged_cost), (4, 2.0));
    }

    #[test]
    #[should_panic]
    fn negative_charge_panics() {
        QueryLedger::new().charge("x", -1.0);
    }
}
