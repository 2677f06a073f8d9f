//! Verification campaigns: exhaustive and seeded randomized checks of the
//! lemmas about good letters, the projection and the classical inclusion.
//!
//! Every campaign returns a [`CampaignReport`]. Reports are deterministic for
//! fixed parameters and seed; the measured runtime is carried along but
//! ignored by equality.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

pub mod gen;
mod lemmas;
mod theorem;

pub use lemmas::{
    run_action_wellformed, run_classical_fixpoints, run_d_respects, run_dstab_invariance,
    run_lemma2, run_lemma3, run_lemma4, run_realizability,
};
pub use theorem::{compare_pair, run_theorem_desk, PairOutcome, Side, TheoremBounds};

pub const DEFAULT_SEED: u64 = 0;

/// A failed case with a reproducible, shrunk witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Index of the case in enumeration order.
    pub case: u64,
    pub description: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub cases: u64,
    pub violations: Vec<Violation>,
    pub unknowns: u64,
    /// Named tallies, e.g. a histogram of good counts.
    pub counts: BTreeMap<String, u64>,
    /// Per-case records worth keeping in the structured output.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Value>,
    pub runtime_ms: u128,
}

impl PartialEq for CampaignReport {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.params == other.params
            && self.cases == other.cases
            && self.violations == other.violations
            && self.unknowns == other.unknowns
            && self.counts == other.counts
            && self.details == other.details
    }
}

impl CampaignReport {
    pub(crate) fn new(name: &str) -> Self {
        CampaignReport {
            name: name.to_owned(),
            params: BTreeMap::new(),
            cases: 0,
            violations: Vec::new(),
            unknowns: 0,
            counts: BTreeMap::new(),
            details: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_owned(), value.into());
        self
    }

    pub(crate) fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_owned()).or_default() += 1;
    }

    pub(crate) fn add(&mut self, key: &str, amount: u64) {
        *self.counts.entry(key.to_owned()).or_default() += amount;
    }

    pub(crate) fn violation(&mut self, description: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation {
            case: self.cases,
            description: description.into(),
            witness: witness.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn runtime(&self) -> Duration {
        Duration::from_millis(self.runtime_ms as u64)
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// One line: name, cases, violations, unknowns.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} violations, {} unknown, {} ms",
            self.name,
            self.cases,
            self.violations.len(),
            self.unknowns,
            self.runtime_ms
        )
    }
}

/// Runs a campaign body and stamps the elapsed time on its report.
pub(crate) fn timed(body: impl FnOnce() -> CampaignReport) -> CampaignReport {
    let start = std::time::Instant::now();
    let mut report = body();
    report.runtime_ms = start.elapsed().as_millis();
    report
}

/// Greedy shrinking: repeatedly drops single items while `fails` still holds.
pub fn shrink<T: Clone>(items: &[T], fails: impl Fn(&[T]) -> bool) -> Vec<T> {
    let mut current = items.to_vec();
    debug_assert!(fails(&current));
    let mut k = 0;
    while k < current.len() {
        let mut candidate = current.clone();
        candidate.remove(k);
        if fails(&candidate) {
            current = candidate;
        } else {
            k += 1;
        }
    }
    current
}

/// Campaign names accepted by [`run_named`].
pub const CAMPAIGNS: [&str; 9] = [
    "action",
    "realizability",
    "lemma2",
    "lemma3",
    "lemma4",
    "d-respects",
    "dstab",
    "fixpoints",
    "theorem",
];

/// Runs a campaign by name with its default parameters, overriding `n`,
/// the trial count and the seed where the campaign has them.
pub fn run_named(
    name: &str,
    n: Option<usize>,
    trials: Option<u64>,
    seed: u64,
) -> Option<CampaignReport> {
    Some(match name {
        "action" => run_action_wellformed(n.map_or(vec![3, 4], |n| vec![n])),
        "realizability" => run_realizability(n.unwrap_or(5), trials.unwrap_or(10_000), seed),
        "lemma2" => run_lemma2(n.unwrap_or(4), trials.unwrap_or(10_000), seed),
        "lemma3" => run_lemma3(n.unwrap_or(5)),
        "lemma4" => run_lemma4(n.unwrap_or(5), trials.unwrap_or(10_000), seed),
        "d-respects" => run_d_respects(n.unwrap_or(4), trials.unwrap_or(1_000), seed),
        "dstab" => run_dstab_invariance(n.unwrap_or(4), trials.unwrap_or(200), 10, seed),
        "fixpoints" => run_classical_fixpoints(n.unwrap_or(5), 40, trials.unwrap_or(1_000), seed),
        "theorem" => run_theorem_desk(
            n.unwrap_or(3),
            trials.map_or(4, |t| t as usize),
            TheoremBounds::default(),
        ),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shrink_keeps_failure() {
        let items: Vec<u32> = (0..20).collect();
        // fails while both 3 and 17 are present
        let out = shrink(&items, |xs| xs.contains(&3) && xs.contains(&17));
        assert_eq!(out, vec![3, 17]);
    }

    #[test]
    fn equality_ignores_runtime() {
        let mut a = CampaignReport::new("x");
        let mut b = a.clone();
        a.runtime_ms = 5;
        b.runtime_ms = 9;
        assert_eq!(a, b);
        b.bump("k");
        assert_ne!(a, b);
    }

    #[test]
    fn unknown_campaign() {
        assert!(run_named("nope", None, None, 0).is_none());
    }
}
