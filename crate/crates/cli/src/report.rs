use serde::Serialize;
use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub millis: u128,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn overall(&self) -> Status {
        if self.checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Runs `f`, which returns `(expected, actual)`, and records equality.
    pub fn check(&mut self, name: &str, f: impl FnOnce() -> (String, String)) {
        let start = Instant::now();
        let (expected, actual) = f();
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            status,
            expected,
            actual,
            millis: start.elapsed().as_millis(),
        });
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            overall: Status,
            checks: &'a [CheckResult],
        }
        serde_json::to_string_pretty(&Out {
            overall: self.overall(),
            checks: &self.checks,
        })
        .unwrap()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.status == Status::Pass {
                "pass"
            } else {
                "FAIL"
            };
            write!(f, "{tag} {}: {}", c.name, c.actual)?;
            if c.status == Status::Fail {
                write!(f, " (expected {})", c.expected)?;
            }
            writeln!(f, " [{} ms]", c.millis)?;
        }
        let overall = if self.overall() == Status::Pass {
            "pass"
        } else {
            "FAIL"
        };
        writeln!(f, "overall: {overall}")
    }
}
