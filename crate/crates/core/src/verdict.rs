use std::fmt;

/// Outcome of a property or theorem check.
///
/// A failing verdict always carries a witness that can be re-checked by
/// re-running the operation that produced it. Checks over infinite carriers
/// record the scope they covered in `bounds`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
    pub note: String,
    pub bounds: Vec<(String, u64)>,
}

impl Verdict {
    pub fn holds(note: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            witness: None,
            note: note.into(),
            bounds: Vec::new(),
        }
    }

    pub fn holds_with(witness: impl Into<String>, note: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            witness: Some(witness.into()),
            note: note.into(),
            bounds: Vec::new(),
        }
    }

    pub fn fails(witness: impl Into<String>, note: impl Into<String>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness.into()),
            note: note.into(),
            bounds: Vec::new(),
        }
    }

    pub fn with_bound(mut self, name: impl Into<String>, value: u64) -> Self {
        self.bounds.push((name.into(), value));
        self
    }

    pub fn bound(&self, name: &str) -> Option<u64> {
        self.bounds.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    /// Conjunction of several verdicts; the first failure supplies the witness.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>, note: impl Into<String>) -> Self {
        let mut bounds = Vec::new();
        let mut failure = None;
        for v in verdicts {
            for b in &v.bounds {
                if !bounds.contains(b) {
                    bounds.push(b.clone());
                }
            }
            if !v.holds && failure.is_none() {
                failure = Some(v);
            }
        }
        let note = note.into();
        match failure {
            None => Verdict {
                holds: true,
                witness: None,
                note,
                bounds,
            },
            Some(f) => Verdict {
                holds: false,
                witness: f.witness,
                note: format!("{note}; {}", f.note),
                bounds,
            },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.holds { "holds" } else { "fails" })?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        for (name, value) in &self.bounds {
            write!(f, " {name}={value}")?;
        }
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}
