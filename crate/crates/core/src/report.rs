//! Pass/fail reports with first-failure witnesses.

use std::fmt;

use serde::Serialize;

use crate::field::Scalar;
use crate::linalg::{Matrix, TensorIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Where an identity first broke: a tuple of basis indices and the
/// coefficient vectors of both sides evaluated there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Informational checks are shown but never affect the verdict.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Check {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            informational: false,
            witness: None,
            detail: None,
        }
    }

    pub fn not_applicable(name: impl Into<String>, why: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::NotApplicable,
            informational: true,
            witness: None,
            detail: Some(why.into()),
        }
    }

    pub fn with_witness(mut self, w: Option<Witness>) -> Check {
        self.witness = w;
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Check {
        self.detail = Some(d.into());
        self
    }

    pub fn informational(mut self) -> Check {
        self.informational = true;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    /// Disagreements between characterizations that should be equivalent.
    /// Any entry here means a bug, not a mathematical failure of the input.
    pub consistency_errors: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            ..Report::default()
        }
    }

    pub fn push(&mut self, c: Check) -> &mut Report {
        self.checks.push(c);
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Report {
        self.push(Check::new(name, passed))
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Appends another report's checks with `prefix/` in front of their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
        for e in other.consistency_errors {
            self.consistency_errors.push(format!("{prefix}: {e}"));
        }
        for n in other.notes {
            self.notes.push(format!("{prefix}: {n}"));
        }
    }

    /// Folds a sub-report into a single check named `name`.
    pub fn summarize(&mut self, name: &str, other: &Report) {
        let mut c = Check::new(name, other.passed());
        if let Some(f) = other.first_failure() {
            c = c
                .with_detail(format!("first failure: {}", f.name))
                .with_witness(f.witness.clone());
        }
        self.push(c);
        self.consistency_errors
            .extend(other.consistency_errors.iter().map(|e| format!("{name}: {e}")));
    }

    pub fn passed(&self) -> bool {
        self.consistency_errors.is_empty() && self.checks.iter().all(|c| c.informational || c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Status of a named check; panics if there is no such check.
    pub fn passed_named(&self, name: &str) -> bool {
        self.get(name)
            .unwrap_or_else(|| panic!("report {:?} has no check {name:?}", self.title))
            .passed()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks
            .iter()
            .find(|c| !c.informational && c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.title)?;
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "ok  ",
                Status::Fail if c.informational => "no  ",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a ",
            };
            write!(f, "  [{s}] {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                writeln!(
                    f,
                    "         at {:?}: lhs = {} rhs = {}",
                    w.indices,
                    fmt_vec(&w.lhs),
                    fmt_vec(&w.rhs)
                )?;
            }
        }
        for e in &self.consistency_errors {
            writeln!(f, "  INTERNAL INCONSISTENCY: {e}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Compares two maps with the same domain. On failure the witness is the
/// domain basis tuple of the first differing column together with both
/// image columns.
pub fn compare_maps(name: &str, lhs: &Matrix, rhs: &Matrix, domain: &TensorIndex) -> Check {
    assert_eq!(lhs.shape(), rhs.shape(), "{name}: sides have different shapes");
    assert_eq!(lhs.cols(), domain.total(), "{name}: domain size");
    match lhs.first_difference(rhs) {
        None => Check::new(name, true),
        Some((_, c)) => Check::new(name, false).with_witness(Some(Witness {
            indices: domain.unflatten(c),
            lhs: lhs.column(c),
            rhs: rhs.column(c),
        })),
    }
}
