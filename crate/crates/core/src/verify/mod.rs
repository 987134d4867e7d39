//! The registry of invariant suites and the runner behind `mvs verify`.
//!
//! Each suite checks one mathematical statement over the corpus (or over a
//! seeded sample) and yields either a pass or a JSON counterexample. Ids are
//! stable and the report is ordered by id, so output depends only on the
//! [`CorpusSpec`] unless timings are requested.

mod suites;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::corpus::{self, Corpus, CorpusSpec};
use crate::{Error, Result};

/// What a suite returns: `None` on success, a counterexample otherwise.
pub type Outcome = Result<Option<Value>>;

pub struct Suite {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(&Corpus) -> Outcome,
}

impl Suite {
    pub fn run(&self, corpus: &Corpus) -> Outcome {
        (self.run)(corpus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyEntry {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    /// Set when the suite aborted, for instance on an internal cross-check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerifyEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// Every registered suite, sorted by id.
pub fn registry() -> &'static [Suite] {
    suites::REGISTRY
}

pub fn find(id: &str) -> Option<&'static Suite> {
    registry().iter().find(|s| s.id == id)
}

/// Runs the selected suites (all of them when `selection` is `None`) in
/// parallel over the corpus built from `spec`.
pub fn run_verify(spec: &CorpusSpec, selection: Option<&[String]>, timings: bool) -> Result<VerifyReport> {
    let mut chosen: Vec<&Suite> = match selection {
        None => registry().iter().collect(),
        Some(ids) => ids
            .iter()
            .map(|id| find(id).ok_or_else(|| Error::Invalid(format!("unknown suite id {id:?}"))))
            .collect::<Result<_>>()?,
    };
    chosen.sort_by_key(|s| s.id);
    chosen.dedup_by_key(|s| s.id);
    if chosen.is_empty() {
        return Ok(VerifyReport { passed: true, entries: Vec::new() });
    }
    let corpus = corpus::build(spec)?;
    let entries: Vec<VerifyEntry> = chosen
        .par_iter()
        .map(|s| {
            let start = Instant::now();
            let outcome = s.run(&corpus);
            let runtime_ms = timings.then(|| start.elapsed().as_millis());
            let (passed, counterexample, error) = match outcome {
                Ok(None) => (true, None, None),
                Ok(Some(c)) => (false, Some(c), None),
                Err(e) => (false, None, Some(e.to_string())),
            };
            VerifyEntry {
                id: s.id.into(),
                statement: s.statement.into(),
                passed,
                counterexample,
                error,
                runtime_ms,
            }
        })
        .collect();
    Ok(VerifyReport { passed: entries.iter().all(|e| e.passed), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn empty_selection_passes() {
        let r = run_verify(&CorpusSpec::default(), Some(&[]), false).unwrap();
        assert!(r.passed && r.entries.is_empty());
    }

    #[test]
    fn unknown_id_is_rejected() {
        assert!(run_verify(&CorpusSpec::default(), Some(&["no-such-suite".into()]), false).is_err());
    }

    #[test]
    fn open_join_passes_and_is_stable() {
        let sel = vec!["open-join".to_string(), "open-join".to_string()];
        let a = run_verify(&CorpusSpec::default(), Some(&sel), false).unwrap();
        let b = run_verify(&CorpusSpec::default(), Some(&sel), false).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.entries.len(), 1);
        assert!(a.passed);
    }
}
