//! Three-valued verdicts for certificate entries.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    /// Not decided, with the reason (usually an exhausted budget).
    Inconclusive(String),
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// Maps budget exhaustion to `Inconclusive` and passes other errors through.
    pub fn from_result(r: Result<bool>) -> Result<Verdict> {
        match r {
            Ok(b) => Ok(Verdict::from_bool(b)),
            Err(e) if e.is_budget() => Ok(Verdict::Inconclusive(e.to_string())),
            Err(e) => Err(e),
        }
    }

    pub fn is_true(&self) -> bool {
        *self == Verdict::True
    }

    pub fn is_false(&self) -> bool {
        *self == Verdict::False
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Inconclusive(_) => "inconclusive",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Inconclusive(r) => Some(r),
            _ => None,
        }
    }

    /// Conjunction: any false wins, then any inconclusive.
    pub fn and(&self, other: &Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::Inconclusive(r), _) | (_, Verdict::Inconclusive(r)) => Verdict::Inconclusive(r.clone()),
            _ => Verdict::True,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl From<Error> for Verdict {
    fn from(e: Error) -> Verdict {
        Verdict::Inconclusive(e.to_string())
    }
}
