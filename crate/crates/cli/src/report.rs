use std::collections::BTreeMap;
use std::fmt::Write;

use semiring_core::harness::Outcome;
use semiring_core::Verdict;
use serde::Serialize;

/// A judged verdict as it appears in a report.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictRow {
    pub name: String,
    pub holds: bool,
    pub expected: bool,
    pub witness: Option<String>,
    pub note: String,
    pub bounds: BTreeMap<String, u64>,
}

impl VerdictRow {
    pub fn new(name: impl Into<String>, verdict: &Verdict, expected: bool) -> Self {
        VerdictRow {
            name: name.into(),
            holds: verdict.holds,
            expected,
            witness: verdict.witness.clone(),
            note: verdict.note.clone(),
            bounds: verdict.bounds.iter().cloned().collect(),
        }
    }

    pub fn matches(&self) -> bool {
        self.holds == self.expected
    }
}

impl From<&Outcome> for VerdictRow {
    fn from(o: &Outcome) -> Self {
        VerdictRow::new(o.name.clone(), &o.verdict, o.expected)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Input {
    pub name: String,
    pub value: String,
}

/// Output of one command. Field order is fixed; no timings, so reruns with the
/// same inputs are byte-identical.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    pub output: Vec<String>,
    pub verdicts: Vec<VerdictRow>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            output: Vec::new(),
            verdicts: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn input(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.inputs.push(Input {
            name: name.to_string(),
            value: value.to_string(),
        });
        self
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.output.push(text.into());
    }

    pub fn verdict(&mut self, row: VerdictRow) {
        self.verdicts.push(row);
    }

    /// Sets the exit code from the judged verdicts.
    pub fn finish(mut self) -> Self {
        self.exit_code = if self.verdicts.iter().all(VerdictRow::matches) {
            0
        } else {
            1
        };
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for i in &self.inputs {
            let _ = writeln!(out, "input {}={}", i.name, i.value);
        }
        for l in &self.output {
            let _ = writeln!(out, "{l}");
        }
        for v in &self.verdicts {
            let _ = write!(
                out,
                "verdict {} {}",
                v.name,
                if v.holds { "holds" } else { "fails" }
            );
            if !v.expected {
                out.push_str(" expected=fails");
            }
            if !v.matches() {
                out.push_str(" MISMATCH");
            }
            if let Some(w) = &v.witness {
                let _ = write!(out, " witness={w}");
            }
            for (k, b) in &v.bounds {
                let _ = write!(out, " {k}={b}");
            }
            if !v.note.is_empty() {
                let _ = write!(out, " ({})", v.note);
            }
            out.push('\n');
        }
        if !self.verdicts.is_empty() {
            let matched = self.verdicts.iter().filter(|v| v.matches()).count();
            let _ = writeln!(
                out,
                "summary: {matched}/{} as expected",
                self.verdicts.len()
            );
        }
        let _ = writeln!(out, "exit_code: {}", self.exit_code);
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
