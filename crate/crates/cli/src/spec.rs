//! Task specifications: one JSON object per task.

use serde::{Deserialize, Serialize};

use secantcat::{Error, ScalarMode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ModelSpec {
    P1 { dega: u32, degb: u32 },
    Veronese { n: u32, d1: u32, d2: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TaskKind {
    CheckDiagonal {
        n: usize,
        d: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dmax: Option<u32>,
    },
    MapPoly {
        n: usize,
        d: usize,
        ell: u32,
        emax: u32,
    },
    ProductTriple {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dmax: Option<u32>,
    },
    SecantVerify {
        model: ModelSpec,
        k: u32,
    },
    Rank3Veronese {
        n: u32,
    },
    Rank3Ideal {
        model: ModelSpec,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BudgetSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_pairs: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_clock_seconds: Option<u64>,
}

impl BudgetSpec {
    pub fn to_budget(self) -> secantcat::Budget {
        let mut b = secantcat::Budget { max_pairs: self.max_pairs, deadline: None };
        if let Some(s) = self.wall_clock_seconds {
            b = b.with_wall_clock(s);
        }
        b
    }
}

/// `screen`: prime for a screening run. `confirm`: also run over the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub screen: Option<u32>,
    #[serde(default = "yes")]
    pub confirm: bool,
}

fn yes() -> bool {
    true
}

impl Default for ModeSpec {
    fn default() -> Self {
        ModeSpec { screen: None, confirm: true }
    }
}

impl ModeSpec {
    /// `qq` or `fp:<p>` (the latter screens only).
    pub fn parse(s: &str) -> Result<ModeSpec, String> {
        let s = s.trim().to_ascii_lowercase();
        if s == "qq" {
            return Ok(ModeSpec::default());
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| format!("mode must be `qq` or `fp:<prime>`, got {s:?}"))?;
        ScalarMode::prime_field(p).map_err(|e| e.to_string())?;
        Ok(ModeSpec { screen: Some(p), confirm: false })
    }

    pub fn validate(&self) -> Result<(), Error> {
        if let Some(p) = self.screen {
            ScalarMode::prime_field(p)?;
        }
        if self.screen.is_none() && !self.confirm {
            return Err(Error::InvalidArgument("mode runs nothing: no screen prime and confirm=false".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskSpec {
    #[serde(flatten)]
    pub kind: TaskKind,
    #[serde(default)]
    pub budget: BudgetSpec,
    #[serde(default)]
    pub mode: ModeSpec,
    #[serde(default)]
    pub seed: u64,
}

impl TaskSpec {
    pub fn new(kind: TaskKind) -> TaskSpec {
        TaskSpec { kind, budget: BudgetSpec::default(), mode: ModeSpec::default(), seed: 0 }
    }

    pub fn from_json(line: &str) -> Result<TaskSpec, Error> {
        serde_json::from_str(line).map_err(|e| Error::InvalidArgument(format!("bad task spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("task specs serialize")
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            TaskKind::CheckDiagonal { .. } => "check_diagonal",
            TaskKind::MapPoly { .. } => "map_poly",
            TaskKind::ProductTriple { .. } => "product_triple",
            TaskKind::SecantVerify { .. } => "secant_verify",
            TaskKind::Rank3Veronese { .. } => "rank3_veronese",
            TaskKind::Rank3Ideal { .. } => "rank3_ideal",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let s = TaskSpec::from_json(r#"{"kind":"check_diagonal","n":1,"d":3,"dmax":4}"#).unwrap();
        assert_eq!(s.kind, TaskKind::CheckDiagonal { n: 1, d: 3, dmax: Some(4) });
        assert_eq!(s.mode, ModeSpec::default());
        assert_eq!(s.seed, 0);
        let t = TaskSpec::from_json(r#"{"kind":"secant_verify","model":{"name":"p1","dega":2,"degb":2},"k":1}"#).unwrap();
        assert_eq!(TaskSpec::from_json(&t.to_json()).unwrap(), t);
        assert!(TaskSpec::from_json(r#"{"kind":"nope"}"#).is_err());
    }

    #[test]
    fn modes() {
        assert_eq!(ModeSpec::parse("qq").unwrap(), ModeSpec::default());
        assert_eq!(ModeSpec::parse("fp:32003").unwrap(), ModeSpec { screen: Some(32003), confirm: false });
        assert!(ModeSpec::parse("fp:4").is_err());
        assert!(ModeSpec::parse("zz").is_err());
    }
}
