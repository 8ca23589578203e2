//! Validation reports shared by the validators of every module.

use serde::Serialize;

/// One violated invariant. `kind` is a short stable tag, `cells` the
/// offending cell/arrow ids, `witness` any element-level evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub cells: Vec<String>,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new(kind: impl Into<String>, cells: Vec<String>) -> Self {
        Violation {
            kind: kind.into(),
            cells,
            witness: Vec::new(),
        }
    }

    pub fn with_witness(mut self, witness: Vec<String>) -> Self {
        self.witness = witness;
        self
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at [{}]", self.kind, self.cells.join(", "))?;
        if !self.witness.is_empty() {
            write!(f, " (witness: {})", self.witness.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok() -> Self {
        Report::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn has(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn into_result(self) -> crate::Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(crate::Error::ValidationFailed(v)),
        }
    }
}
