//! Witnessed verification reports. Every failed axiom carries at least one
//! witness that reproduces the failure when re-evaluated.

use std::fmt;

use crate::carrier::Element;
use crate::ring::{FuzzyNeutroValue, NeutroNumber};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Number(NeutroNumber),
    Element(Element),
    Fuzzy(FuzzyNeutroValue),
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Number(n) => write!(f, "{n}"),
            WitnessValue::Element(e) => write!(f, "{e}"),
            WitnessValue::Fuzzy(v) => write!(f, "{v}"),
        }
    }
}

/// The concrete data that makes an axiom fail: named values plus a short
/// note saying what went wrong with them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub parts: Vec<(String, WitnessValue)>,
    pub note: String,
}

impl Witness {
    pub fn new(note: impl Into<String>) -> Witness {
        Witness {
            parts: Vec::new(),
            note: note.into(),
        }
    }

    pub fn with(mut self, role: impl Into<String>, value: WitnessValue) -> Witness {
        self.parts.push((role.into(), value));
        self
    }

    pub fn number(self, role: impl Into<String>, n: &NeutroNumber) -> Witness {
        self.with(role, WitnessValue::Number(*n))
    }

    pub fn element(self, role: impl Into<String>, e: &Element) -> Witness {
        self.with(role, WitnessValue::Element(e.clone()))
    }

    pub fn fuzzy(self, role: impl Into<String>, v: &FuzzyNeutroValue) -> Witness {
        self.with(role, WitnessValue::Fuzzy(*v))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (role, value)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{role}={value}")?;
        }
        if !self.parts.is_empty() && !self.note.is_empty() {
            write!(f, ": ")?;
        }
        write!(f, "{}", self.note)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    /// Stable identifier, e.g. `setvs.closure` or `groupla.carrier_group`.
    pub id: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn pass(id: impl Into<String>) -> AxiomCheck {
        AxiomCheck {
            id: id.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Witness) -> AxiomCheck {
        AxiomCheck {
            id: id.into(),
            passed: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checked: Vec<AxiomCheck>,
    /// Derived classification notes (e.g. `quasi_neutrosophic`, `zero_map`).
    pub tags: Vec<String>,
    /// Non-fatal observations, such as a scalar set below the usual
    /// minimum cardinality.
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport::default()
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checked.push(check);
    }

    pub fn tag(&mut self, tag: impl Into<String>) {
        self.tags.push(tag.into());
    }

    pub fn warn(&mut self, warning: impl Into<String>) {
        self.warnings.push(warning.into());
    }

    pub fn verdict(&self) -> Verdict {
        if self.checked.iter().all(|c| c.passed) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checked.iter().find(|c| !c.passed)
    }

    /// Merge another report in, prefixing its axiom ids.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut check in other.checked {
            check.id = format!("{prefix}.{}", check.id);
            self.checked.push(check);
        }
        for tag in other.tags {
            self.tags.push(format!("{prefix}.{tag}"));
        }
        for warning in other.warnings {
            self.warnings.push(format!("{prefix}: {warning}"));
        }
    }
}
