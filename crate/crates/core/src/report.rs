//! Axiom check reports.
//!
//! Every checker returns a [`CheckReport`]: one [`AxiomResult`] per axiom, in
//! a fixed order, each carrying the first failing basis multi-index (in
//! lexicographic order) and both evaluated sides.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multilinear::{multi_indices, Tensor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub pass: bool,
    /// Number of basis instances evaluated.
    pub checked: usize,
    /// Number of basis instances where the two sides differ.
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub entries: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn total_failures(&self) -> usize {
        self.entries.iter().map(|e| e.failures).sum()
    }

    pub fn entry(&self, axiom: &str) -> Option<&AxiomResult> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| !e.pass).map(|e| e.axiom.as_str()).collect()
    }

    pub fn verdict(&self, axiom: &str) -> Option<bool> {
        self.entry(axiom).map(|e| e.pass)
    }

    pub fn push(&mut self, result: AxiomResult) {
        self.entries.push(result);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Appends `other` with every axiom name prefixed by `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        self.entries.extend(other.entries.into_iter().map(|mut e| {
            e.axiom = format!("{prefix}/{}", e.axiom);
            e
        }));
    }

    /// Records a single yes/no condition.
    pub fn record(&mut self, axiom: &str, pass: bool, witness: Option<Witness>) {
        self.entries.push(AxiomResult {
            axiom: axiom.to_string(),
            pass,
            checked: 1,
            failures: usize::from(!pass),
            witness: if pass { None } else { witness },
        });
    }

    /// Evaluates `mismatch` on every multi-index of `dims`; `Some((lhs, rhs))`
    /// marks a failure.
    pub fn check_each<F>(&mut self, axiom: &str, dims: &[usize], mut mismatch: F)
    where
        F: FnMut(&[usize]) -> Option<(String, String)>,
    {
        let mut result = AxiomResult {
            axiom: axiom.to_string(),
            pass: true,
            checked: 0,
            failures: 0,
            witness: None,
        };
        for idx in multi_indices(dims) {
            result.checked += 1;
            if let Some((lhs, rhs)) = mismatch(&idx) {
                result.pass = false;
                result.failures += 1;
                if result.witness.is_none() {
                    result.witness = Some(Witness { index: idx, lhs, rhs });
                }
            }
        }
        self.entries.push(result);
    }

    /// Checks a tensor identity on every basis multi-index of `dims`.
    pub fn check_identity<F>(&mut self, axiom: &str, dims: &[usize], mut sides: F)
    where
        F: FnMut(&[usize]) -> (Tensor, Tensor),
    {
        self.check_each(axiom, dims, |idx| {
            let (lhs, rhs) = sides(idx);
            (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
        });
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            if e.pass {
                writeln!(f, "PASS {} ({} checked)", e.axiom, e.checked)?;
            } else {
                write!(f, "FAIL {} ({} of {} failed)", e.axiom, e.failures, e.checked)?;
                if let Some(w) = &e.witness {
                    write!(f, " at {:?}: lhs = {}, rhs = {}", w.index, w.lhs, w.rhs)?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
