use serde::Serialize;
use serde_json::Value;

use dagger_fem::verdict::{Verdict, Witness};

use crate::input::InputRef;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// What a command established: failures found, plus command-specific data.
#[derive(Debug, Default)]
pub struct Outcome {
    pub witnesses: Vec<Witness>,
    pub result: Value,
}

impl Outcome {
    pub fn pass(result: Value) -> Self {
        Outcome {
            witnesses: Vec::new(),
            result,
        }
    }

    pub fn from_verdict(v: Verdict, result: Value) -> Self {
        Outcome {
            witnesses: v.witness().cloned().into_iter().collect(),
            result,
        }
    }

    pub fn check(ok: bool, witness: impl FnOnce() -> Witness, result: Value) -> Self {
        Outcome {
            witnesses: if ok { Vec::new() } else { vec![witness()] },
            result,
        }
    }
}

/// Field order is part of the output contract.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputRef>,
    pub verdict: Status,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    pub timing_ms: u128,
}

impl Report {
    pub fn summary(&self) -> String {
        let tag = match self.verdict {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let mut lines = vec![format!("{}: {tag}", self.command)];
        if let Some(e) = &self.error {
            lines.push(format!("  error: {e}"));
        }
        lines.extend(self.witnesses.iter().map(|w| format!("  witness: {w}")));
        lines.join("\n")
    }
}
