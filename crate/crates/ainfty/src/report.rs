//! Diagnostic reports produced by structure and morphism checks.

use std::fmt;

/// Outcome of a single check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The check does not apply (for instance a form condition on a
    /// structure without a form); the string says why.
    NotApplicable(String),
}

/// A localized failure: the weight at which an identity breaks and the
/// generator or argument tuple exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub weight: usize,
    pub location: String,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight {}: {} ({})", self.weight, self.location, self.detail)
    }
}

/// The verdict of one named check with its witnesses (at most one per
/// failing weight).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    /// Build a report from the collected witnesses, keeping the first
    /// witness per weight in increasing weight order.
    pub fn from_witnesses(check: &str, mut witnesses: Vec<Witness>) -> Self {
        witnesses.sort_by_key(|w| w.weight);
        witnesses.dedup_by_key(|w| w.weight);
        let verdict = if witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail };
        CheckReport { check: check.to_string(), verdict, witnesses }
    }

    pub fn not_applicable(check: &str, reason: &str) -> Self {
        CheckReport { check: check.to_string(), verdict: Verdict::NotApplicable(reason.to_string()), witnesses: Vec::new() }
    }

    /// True unless the check ran and failed.
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Weights at which the check failed.
    pub fn failing_weights(&self) -> Vec<usize> {
        self.witnesses.iter().map(|w| w.weight).collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Pass => write!(f, "{}: pass", self.check),
            Verdict::NotApplicable(why) => write!(f, "{}: n/a ({})", self.check, why),
            Verdict::Fail => {
                write!(f, "{}: FAIL", self.check)?;
                for w in &self.witnesses {
                    write!(f, "\n  {w}")?;
                }
                Ok(())
            }
        }
    }
}
