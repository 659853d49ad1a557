//! Machine-readable verdict reports. The JSON layout is stable and the
//! emitter is deterministic: identical inputs produce byte-identical output.

use crate::identities::{AxiomSuiteReport, CheckReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub input: String,
    pub checks: Vec<CheckEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub identity: String,
    pub holds: bool,
    pub tuples_checked: usize,
    pub counterexamples: Vec<CounterexampleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleEntry {
    pub tuple: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&CheckReport> for CheckEntry {
    fn from(report: &CheckReport) -> Self {
        CheckEntry {
            identity: report.identity.clone(),
            holds: report.holds,
            tuples_checked: report.tuples_checked,
            counterexamples: report
                .counterexamples
                .iter()
                .map(|ce| CounterexampleEntry {
                    tuple: ce.tuple.clone(),
                    lhs: ce.lhs.to_string(),
                    rhs: ce.rhs.to_string(),
                })
                .collect(),
        }
    }
}

impl ReportDocument {
    pub fn new(input: impl Into<String>, reports: &[CheckReport]) -> Self {
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            input: input.into(),
            checks: reports.iter().map(CheckEntry::from).collect(),
        }
    }

    /// Flattens a suite into individual identity entries.
    pub fn push_suite(&mut self, suite: &AxiomSuiteReport) {
        self.checks
            .extend(suite.checks.iter().map(CheckEntry::from));
    }

    pub fn push_report(&mut self, report: &CheckReport) {
        self.checks.push(CheckEntry::from(report));
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit_report(doc: &ReportDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("report serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vector;
    use crate::coeff::Params;
    use crate::identities::Counterexample;

    fn sample_report() -> CheckReport {
        let ps = Params::empty();
        CheckReport {
            identity: "HLY5".to_string(),
            holds: false,
            tuples_checked: 64,
            counterexamples: vec![Counterexample {
                tuple: vec![1, 2, 1],
                lhs: Vector::basis(&ps, 4, 3),
                rhs: Vector::zero(&ps, 4),
            }],
        }
    }

    #[test]
    fn json_shape_matches_schema() {
        let doc = ReportDocument::new("r7-twist", &[sample_report()]);
        let json = emit_report(&doc);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["input"], "r7-twist");
        assert_eq!(value["checks"][0]["identity"], "HLY5");
        assert_eq!(value["checks"][0]["holds"], false);
        assert_eq!(value["checks"][0]["tuples_checked"], 64);
        let ce = &value["checks"][0]["counterexamples"][0];
        assert_eq!(ce["tuple"], serde_json::json!([1, 2, 1]));
        assert_eq!(ce["lhs"], "e4");
        assert_eq!(ce["rhs"], "0");
    }

    #[test]
    fn round_trips_through_serde() {
        let doc = ReportDocument::new("x", &[sample_report()]);
        let json = emit_report(&doc);
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn empty_check_list_is_valid() {
        let doc = ReportDocument::new("none", &[]);
        let json = emit_report(&doc);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["checks"].as_array().unwrap().len(), 0);
        assert!(doc.all_hold());
    }

    #[test]
    fn emission_is_deterministic() {
        let doc = ReportDocument::new("r7-twist", &[sample_report()]);
        assert_eq!(emit_report(&doc), emit_report(&doc.clone()));
    }

    #[test]
    fn first_counterexample_is_the_lexicographic_first_failure() {
        // Mutate a detectable entry of r7-twist, then compare the capped
        // report against an exhaustive re-scan.
        use crate::coeff::Scalar;
        use crate::identities::{check_multiplicative, CheckOptions};
        use crate::io::builtins::builtin;

        let spec = builtin("r7-twist").unwrap();
        let ps = spec.params().clone();
        let mut product = spec.product().clone();
        let bumped = &product.coefficient(0, 1, 2).clone() + &Scalar::one(&ps);
        product.set_coefficient(0, 1, 2, bumped);

        let capped =
            check_multiplicative(&product, spec.alpha(), &CheckOptions::default()).unwrap();
        let full =
            check_multiplicative(&product, spec.alpha(), &CheckOptions::exhaustive()).unwrap();
        assert!(!capped.holds);
        assert_eq!(
            capped.counterexamples[0].tuple,
            full.counterexamples[0].tuple
        );

        let doc = ReportDocument::new("r7-twist-mut", &[capped]);
        let value: serde_json::Value = serde_json::from_str(&emit_report(&doc)).unwrap();
        let first = value["checks"][0]["counterexamples"][0]["tuple"].clone();
        let expected: Vec<u64> = full.counterexamples[0]
            .tuple
            .iter()
            .map(|&i| i as u64)
            .collect();
        assert_eq!(first, serde_json::json!(expected));
    }
}
