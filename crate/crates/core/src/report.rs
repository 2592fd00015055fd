//! Axiom-check reports: which identity failed and on which basis element.

use std::fmt;

use crate::exactnum::LinMap;
use crate::tensorspace::split_index;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    /// Multi-index of a basis element on which the two sides differ.
    pub witness: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) {
        self.violations.push(Violation {
            axiom: axiom.into(),
            witness,
            detail: detail.into(),
        });
    }

    /// Records a violation if `lhs != rhs`, with the witness expressed as a
    /// multi-index over `dims` (the common domain word).
    pub fn compare(&mut self, axiom: &str, lhs: &LinMap, rhs: &LinMap, dims: &[usize]) -> bool {
        match lhs.first_difference(rhs) {
            None => true,
            Some(col) => {
                let detail = if lhs.domain_dim() != rhs.domain_dim() || lhs.codomain_dim() != rhs.codomain_dim() {
                    format!(
                        "shapes {}x{} vs {}x{}",
                        lhs.codomain_dim(),
                        lhs.domain_dim(),
                        rhs.codomain_dim(),
                        rhs.domain_dim()
                    )
                } else {
                    String::new()
                };
                self.push(axiom, split_index(col, dims), detail);
                false
            }
        }
    }

    /// Records a violation if `map` is nonzero.
    pub fn expect_zero(&mut self, axiom: &str, map: &LinMap, dims: &[usize]) -> bool {
        match map.first_nonzero_column() {
            None => true,
            Some(col) => {
                self.push(axiom, split_index(col, dims), "");
                false
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn names(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }

    pub fn mentions(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom.contains(axiom))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}
