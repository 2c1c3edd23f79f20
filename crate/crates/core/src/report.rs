//! Named checks collected while running a pipeline.

use std::fmt;

use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The computed value is self-consistent but differs from a printed
    /// reference display. Both values are carried in the check.
    Discrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "discrepancy",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Record a check. Ids are unique within a report.
    pub fn push(&mut self, check: Check) {
        assert!(self.get(&check.id).is_none(), "duplicate check id {}", check.id);
        self.checks.push(check);
    }

    /// Pass if `ok`, else fail.
    pub fn check(&mut self, id: &str, anchor: &str, ok: bool, computed: impl ToString, expected: impl ToString) -> bool {
        self.push(Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            computed: computed.to_string(),
            expected: expected.to_string(),
        });
        ok
    }

    /// Pass if `ok`, else a discrepancy against a printed reference.
    pub fn compare_display(
        &mut self,
        id: &str,
        anchor: &str,
        ok: bool,
        computed: impl ToString,
        displayed: impl ToString,
    ) -> bool {
        self.push(Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Discrepancy },
            computed: computed.to_string(),
            expected: displayed.to_string(),
        });
        ok
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Discrepancy)
    }

    /// No failures, and no discrepancies unless they are allowed.
    pub fn passed(&self, allow_discrepancies: bool) -> bool {
        self.failures().next().is_none() && (allow_discrepancies || self.discrepancies().next().is_none())
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": c.status.as_str(),
                    "computed": c.computed,
                    "expected": c.expected,
                })
            })
            .collect();
        json!({ "checks": checks })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Discrepancy => "DISC",
            };
            writeln!(f, "{tag}  {:<34} {}", c.id, c.anchor)?;
            if c.status != Status::Pass {
                writeln!(f, "      computed: {}", c.computed)?;
                writeln!(f, "      expected: {}", c.expected)?;
            }
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        write!(
            f,
            "{} checks: {} pass, {} fail, {} discrepancy",
            self.checks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Discrepancy)
        )
    }
}
