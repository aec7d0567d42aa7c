use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered, nonempty list of distinct coordinate labels (the index set Ω).
///
/// Cloning is cheap. Label order is significant: it fixes the column order of
/// every matrix and the orientation of constraints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Labels(Arc<[String]>);

impl Labels {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyLabels);
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Labels(labels.into()))
    }

    /// Labels `"1"`, `"2"`, ..., `"n"`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    /// The sub-list at the given (increasing) indices.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| self.0[i].clone()))
    }

    pub(crate) fn ensure_same(&self, other: &Labels) -> Result<()> {
        if Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0 {
            Ok(())
        } else {
            Err(Error::LabelMismatch)
        }
    }
}

impl fmt::Debug for Labels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
