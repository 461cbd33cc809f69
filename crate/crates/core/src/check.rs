//! Outcome of a single verification.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub ok: bool,
    /// First offending term or value, when the check fails.
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { ok: true, witness: None }
    }

    pub fn fail(w: impl Into<String>) -> Self {
        Outcome { ok: false, witness: Some(w.into()) }
    }

    /// Passes iff `w` is `None`.
    pub fn from_witness(w: Option<String>) -> Self {
        match w {
            None => Outcome::pass(),
            Some(w) => Outcome::fail(w),
        }
    }

    pub fn and(self, other: Outcome) -> Outcome {
        if self.ok {
            other
        } else {
            self
        }
    }
}
