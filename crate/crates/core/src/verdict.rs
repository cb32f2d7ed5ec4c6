//! Outcome of an exhaustive check, with the first counterexample found.

use serde::Serialize;

use crate::rootsys::Root;
use crate::weyl::Subset;

/// A machine-readable witness that a checked claim fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Subset>,
    /// Reduced word with 1-based generator labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Root>,
    pub detail: String,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>) -> Self {
        Self {
            subset: None,
            element: None,
            root: None,
            detail: detail.into(),
        }
    }

    pub fn subset(mut self, subset: Subset) -> Self {
        self.subset = Some(subset);
        self
    }

    pub fn element(mut self, word_labels: Vec<usize>) -> Self {
        self.element = Some(word_labels);
        self
    }

    pub fn root(mut self, root: Root) -> Self {
        self.root = Some(root);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Number of elementary cases examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn pass(checked: usize) -> Self {
        Self {
            checked,
            counterexample: None,
        }
    }

    pub fn fail(checked: usize, counterexample: Counterexample) -> Self {
        Self {
            checked,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Combines two verdicts, keeping the first counterexample.
    pub fn and(self, other: Verdict) -> Verdict {
        Verdict {
            checked: self.checked + other.checked,
            counterexample: self.counterexample.or(other.counterexample),
        }
    }
}
