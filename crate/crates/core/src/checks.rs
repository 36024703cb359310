//! Pass/fail reports shared by every verification routine.

use serde::Serialize;

/// A concrete counterexample: the basis indices involved and a rendering of
/// the nonzero discrepancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, indices: Vec<usize>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass: false,
            witness: Some(Witness { indices, detail: detail.into() }),
        }
    }

    /// `pass` when `ok`, otherwise a failure carrying `detail`.
    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, vec![], detail())
        }
    }
}

/// An ordered list of named checks about one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> AxiomReport {
        AxiomReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        let prefix = other.subject;
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
