use std::fmt;

use serde::Serialize;

/// The first failing instance of a check, naming cells by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub cells: Vec<String>,
}

impl Witness {
    pub fn new<S: Into<String>>(check: impl Into<String>, cells: impl IntoIterator<Item = S>) -> Self {
        Witness { check: check.into(), cells: cells.into_iter().map(Into::into).collect() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.check, self.cells.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// Keeps the first failure of a sequence of checks.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }
}

impl From<Result<(), Witness>> for Verdict {
    fn from(r: Result<(), Witness>) -> Self {
        match r {
            Ok(()) => Verdict::Pass,
            Err(w) => Verdict::Fail(w),
        }
    }
}
