//! Report assembly and rendering. The machine form is an ordered
//! `key: value` document with stable field names; identical inputs render
//! byte-identically, and the form parses back losslessly.

use neutra_core::{AxiomCheck, VerificationReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "text" => Ok(Format::Text),
            "machine" => Ok(Format::Machine),
            other => Err(format!("unknown format `{other}` (use text or machine)")),
        }
    }
}

/// Exit-code contract: pass 0, fail/counterexample 1, parse or semantic
/// error 2, budget exceeded 3.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            entries: Vec::new(),
        }
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl Into<String>) {
        let key = key.into();
        let value = value.into();
        debug_assert!(!key.contains(": ") && !key.contains('\n'));
        debug_assert!(!value.contains('\n'));
        self.entries.push((key, value));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn verdict(&self) -> Option<Verdict> {
        match self.get("verdict") {
            Some("pass") => Some(Verdict::Pass),
            Some("fail") => Some(Verdict::Fail),
            _ => None,
        }
    }

    pub fn put_verdict(&mut self, verdict: Verdict) {
        self.put("verdict", verdict.to_string());
    }

    /// Fold a kernel verification report into entries.
    pub fn put_verification(&mut self, v: &VerificationReport) {
        self.put_verdict(v.verdict());
        for AxiomCheck { id, passed, witness } in &v.checked {
            self.put(
                format!("axiom.{id}"),
                if *passed { "pass" } else { "fail" },
            );
            if let Some(w) = witness {
                self.put(format!("witness.{id}"), w.to_string());
            }
        }
        for (i, tag) in v.tags.iter().enumerate() {
            self.put(format!("tag.{i}"), tag);
        }
        for (i, warning) in v.warnings.iter().enumerate() {
            self.put(format!("warning.{i}"), warning);
        }
    }

    pub fn put_errata(&mut self, errata: &[String]) {
        for (i, note) in errata.iter().enumerate() {
            self.put(format!("note.{i}"), note);
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                let mut out = format!("command: {}\n", self.command);
                for (key, value) in &self.entries {
                    out.push_str(key);
                    out.push_str(": ");
                    out.push_str(value);
                    out.push('\n');
                }
                out
            }
            Format::Text => {
                let mut out = format!("{}\n", self.command);
                for (key, value) in &self.entries {
                    out.push_str(&format!("  {key:<28} {value}\n"));
                }
                out
            }
        }
    }
}

/// Parse a machine-format document back into a report.
pub fn parse_machine(text: &str) -> Result<Report, String> {
    let mut lines = text.lines();
    let first = lines.next().ok_or("empty report")?;
    let command = first
        .strip_prefix("command: ")
        .ok_or("missing command line")?;
    let mut report = Report::new(command);
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(": ")
            .ok_or_else(|| format!("malformed line `{line}`"))?;
        report.put(key, value);
    }
    Ok(report)
}
