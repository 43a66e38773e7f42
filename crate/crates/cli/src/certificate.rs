//! Certificates: verdicts with witnesses, and the exit-code contract.

use std::collections::BTreeMap;

use serde::Serialize;

use secantcat::Verdict;

use crate::spec::TaskSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_INVALID: i32 = 64;

fn severity(code: i32) -> u8 {
    match code {
        EXIT_OK => 0,
        EXIT_INCONCLUSIVE => 1,
        EXIT_FALSE => 2,
        _ => 3,
    }
}

/// The more severe of two exit codes: `0 < 3 < 2 < 64`.
pub fn worst(a: i32, b: i32) -> i32 {
    if severity(b) > severity(a) {
        b
    } else {
        a
    }
}

/// Exit code for a verdict set; an empty set counts as inconclusive.
pub fn exit_code_for<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> i32 {
    let mut code = EXIT_OK;
    let mut any = false;
    for v in verdicts {
        any = true;
        code = worst(
            code,
            match v {
                Verdict::True => EXIT_OK,
                Verdict::False => EXIT_FALSE,
                Verdict::Inconclusive(_) => EXIT_INCONCLUSIVE,
            },
        );
    }
    if any {
        code
    } else {
        EXIT_INCONCLUSIVE
    }
}

pub fn tool_version() -> String {
    format!("secantcat {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub task: TaskSpec,
    pub verdicts: BTreeMap<String, Verdict>,
    /// Reasons for inconclusive verdicts.
    pub reasons: BTreeMap<String, String>,
    /// Content hashes or values backing each verdict.
    pub witnesses: BTreeMap<String, String>,
    pub details: serde_json::Value,
    #[serde(rename = "toolVersion")]
    pub tool_version: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Certificate {
    pub fn new(task: &TaskSpec) -> Certificate {
        Certificate {
            task: task.clone(),
            verdicts: BTreeMap::new(),
            reasons: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            details: serde_json::Value::Null,
            tool_version: tool_version(),
            seed: task.seed,
            timings: None,
        }
    }

    /// Records a verdict. A `true` without a witness is downgraded, and an
    /// inconclusive verdict always gets a reason.
    pub fn record(&mut self, name: &str, verdict: Verdict, witness: Option<String>) {
        let verdict = match (verdict, &witness) {
            (Verdict::True, None) => Verdict::Inconclusive("no witness recorded".into()),
            (Verdict::Inconclusive(r), _) if r.trim().is_empty() => Verdict::Inconclusive("unspecified bound".into()),
            (v, _) => v,
        };
        if let Verdict::Inconclusive(r) = &verdict {
            self.reasons.insert(name.to_string(), r.clone());
        } else {
            self.reasons.remove(name);
        }
        match witness {
            Some(w) => {
                self.witnesses.insert(name.to_string(), w);
            }
            None => {
                self.witnesses.remove(name);
            }
        }
        self.verdicts.insert(name.to_string(), verdict);
    }

    pub fn exit_code(&self) -> i32 {
        exit_code_for(self.verdicts.values())
    }

    /// The witness and reason invariants.
    pub fn is_well_formed(&self) -> bool {
        self.verdicts.iter().all(|(k, v)| match v {
            Verdict::True => self.witnesses.get(k).is_some_and(|w| !w.is_empty()),
            Verdict::Inconclusive(_) => self.reasons.get(k).is_some_and(|r| !r.is_empty()),
            Verdict::False => true,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }
}
