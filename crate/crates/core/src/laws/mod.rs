//! Exhaustive checkers for algebraic laws.
//!
//! Universal identities are multilinear, so checking them on every tuple of
//! basis elements is complete over the scalar ring. Every checker returns a
//! [`LawReport`]; failures are data, not errors.

mod crosscheck;
mod identities;
mod isomorphism;
mod leibniz;
mod structure;

use std::time::{Duration, Instant};

use serde::Serialize;

pub use crosscheck::{
    app_basis_matrix, sedenion_complex_octonion, split_octonion_via_basis_change,
    SedenionCrossCheck,
};
pub use identities::{check_identity, check_identity_with, random_element, CheckOptions, Law};
pub use isomorphism::{compare_algebras, search_sign_maps, signed_isomorphisms, SignedBasisMap};
pub use leibniz::{check_leibniz, check_leibniz_family, SubalgebraSpec};
pub use structure::{check_subalgebra, zero_divisor_scan};

/// Default number of witnesses kept in a report.
pub const WITNESS_LIMIT: usize = 10;

/// Note attached to reports produced by basis enumeration.
pub const BASIS_EXHAUSTIVE: &str = "basis-exhaustive, multilinear-complete";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failing case: the inputs (basis labels or element text) and both sides
/// of the identity in display form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub law_id: String,
    pub algebra: String,
    pub status: Status,
    pub cases_checked: u64,
    /// Total number of failing cases; `witnesses` holds at most the first few.
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn elapsed(&self) -> Option<Duration> {
        self.elapsed_ms
            .map(|ms| Duration::from_secs_f64(ms / 1000.0))
    }
}

/// Accumulates cases for a report. Witnesses are keyed by the index tuple of
/// the case and sorted before the report is emitted.
pub(crate) struct ReportBuilder {
    law_id: String,
    algebra: String,
    cases: u64,
    failures: u64,
    witnesses: Vec<(Vec<usize>, Witness)>,
    limit: usize,
    start: Instant,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub(crate) fn new(law_id: impl Into<String>, algebra: impl Into<String>) -> Self {
        ReportBuilder {
            law_id: law_id.into(),
            algebra: algebra.into(),
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
            limit: WITNESS_LIMIT,
            start: Instant::now(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub(crate) fn pass(&mut self) {
        self.cases += 1;
    }

    pub(crate) fn fail(&mut self, key: Vec<usize>, witness: impl FnOnce() -> Witness) {
        self.cases += 1;
        self.failures += 1;
        self.witnesses.push((key, witness()));
        if self.witnesses.len() > self.limit {
            self.witnesses.sort_by(|a, b| a.0.cmp(&b.0));
            self.witnesses.truncate(self.limit);
        }
    }

    pub(crate) fn check(&mut self, ok: bool, key: Vec<usize>, witness: impl FnOnce() -> Witness) {
        if ok {
            self.pass();
        } else {
            self.fail(key, witness);
        }
    }

    pub(crate) fn finish(mut self) -> LawReport {
        self.witnesses.sort_by(|a, b| a.0.cmp(&b.0));
        self.witnesses.truncate(self.limit);
        let witnesses: Vec<Witness> = self.witnesses.into_iter().map(|(_, w)| w).collect();
        LawReport {
            law_id: self.law_id,
            algebra: self.algebra,
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            cases_checked: self.cases,
            failures: self.failures,
            witnesses,
            elapsed_ms: Some(self.start.elapsed().as_secs_f64() * 1000.0),
            notes: self.notes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(tag: &str) -> Witness {
        Witness {
            inputs: vec![tag.into()],
            lhs: "0".into(),
            rhs: "1".into(),
        }
    }

    #[test]
    fn witnesses_are_sorted_and_truncated() {
        let mut b = ReportBuilder::new("t", "a").limit(2);
        b.fail(vec![3], || w("c"));
        b.pass();
        b.fail(vec![1], || w("a"));
        b.fail(vec![2], || w("b"));
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.cases_checked, 4);
        assert_eq!(r.failures, 3);
        let tags: Vec<_> = r.witnesses.iter().map(|w| w.inputs[0].as_str()).collect();
        assert_eq!(tags, ["a", "b"]);
    }

    #[test]
    fn pass_iff_no_witnesses() {
        let mut b = ReportBuilder::new("t", "a");
        b.pass();
        let r = b.finish();
        assert!(r.passed() && r.witnesses.is_empty());
        assert!(r.without_timing().elapsed_ms.is_none());
    }
}
