//! Pass/fail reports shared by all verifiers.

use serde::Serialize;

/// One named identity and whether it held. On failure the witness is the
/// lexicographically first offending basis tuple, as exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<Vec<u32>>>,
}

impl AxiomCheck {
    pub fn new(name: impl Into<String>, pass: bool, witness: Option<Vec<Vec<u32>>>) -> Self {
        AxiomCheck {
            name: name.into(),
            pass,
            witness,
        }
    }

    /// Passes iff there is no witness.
    pub fn from_witness(name: impl Into<String>, witness: Option<Vec<Vec<u32>>>) -> Self {
        Self::new(name, witness.is_none(), witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.axioms.push(check);
    }

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.axioms.iter().find(|a| a.name == name)
    }

    /// True when the named check exists and passed.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|a| a.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.axioms.iter().filter(|a| !a.pass)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.axioms.extend(other.axioms);
    }
}
