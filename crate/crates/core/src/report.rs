//! Structured verdicts for verification cases.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::groebner::{GroebnerError, Ideal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    ResourceLimit,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
            Verdict::ResourceLimit => "resource-limit",
        })
    }
}

/// One named sub-check of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCheck {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub claim: String,
    pub anchor: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub millis: u64,
    #[serde(skip)]
    pub checks: Vec<SubCheck>,
    /// Ideals built along the way, for external cross-checking.
    #[serde(skip)]
    pub ideals: Vec<(String, Ideal)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn check(&self, name: &str) -> Option<&SubCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Verdict of a named sub-check; `None` if it never ran.
    pub fn check_passed(&self, name: &str) -> Option<bool> {
        self.check(name).map(|c| c.verdict == Verdict::Pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {} — {} ({} ms)", self.verdict, self.id, self.claim, self.millis)?;
        writeln!(f, "    anchor: {}", self.anchor)?;
        for w in &self.witnesses {
            writeln!(f, "    {w}")?;
        }
        Ok(())
    }
}

pub struct ReportBuilder {
    id: String,
    claim: String,
    anchor: String,
    checks: Vec<SubCheck>,
    witnesses: Vec<String>,
    ideals: Vec<(String, Ideal)>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(id: impl Into<String>, claim: impl Into<String>, anchor: impl Into<String>) -> Self {
        ReportBuilder {
            id: id.into(),
            claim: claim.into(),
            anchor: anchor.into(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            ideals: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        let verdict = if passed { Verdict::Pass } else { Verdict::Fail };
        self.push(name, verdict, detail.into());
        passed
    }

    /// Runs a fallible sub-check. Resource limits are recorded as such,
    /// other errors as failures.
    pub fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String), GroebnerError>) -> bool {
        match f() {
            Ok((ok, detail)) => self.check(name, ok, detail),
            Err(e) if e.is_resource_limit() => {
                self.push(name, Verdict::ResourceLimit, e.to_string());
                false
            }
            Err(e) => {
                self.push(name, Verdict::Fail, format!("error: {e}"));
                false
            }
        }
    }

    /// Records an error that ended a check early.
    pub fn error(&mut self, name: &str, resource_limit: bool, detail: impl Into<String>) {
        let verdict = if resource_limit { Verdict::ResourceLimit } else { Verdict::Fail };
        self.push(name, verdict, detail.into());
    }

    pub fn skip(&mut self, name: &str, why: impl Into<String>) {
        self.push(name, Verdict::Skipped, why.into());
    }

    fn push(&mut self, name: &str, verdict: Verdict, detail: String) {
        self.witnesses.push(format!("{verdict}: {name}: {detail}"));
        self.checks.push(SubCheck {
            name: name.to_string(),
            verdict,
            detail,
        });
    }

    pub fn witness(&mut self, text: impl Into<String>) {
        self.witnesses.push(text.into());
    }

    /// Records `name = (g1, g2, ...)` as a witness line.
    pub fn witness_ideal(&mut self, name: &str, ideal: &Ideal) {
        let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
        self.witnesses.push(format!("{name} = ({})", gens.join(", ")));
    }

    /// Folds a finished sub-report into this one, prefixing its check names.
    pub fn include(&mut self, prefix: &str, sub: VerificationReport) {
        for w in sub.witnesses {
            self.witnesses.push(format!("{prefix}/{w}"));
        }
        for c in sub.checks {
            self.checks.push(SubCheck {
                name: format!("{prefix}/{}", c.name),
                ..c
            });
        }
        self.ideals.extend(sub.ideals.into_iter().map(|(n, i)| (format!("{prefix}/{n}"), i)));
    }

    pub fn export(&mut self, name: &str, ideal: &Ideal) {
        self.ideals.push((name.to_string(), ideal.clone()));
    }

    pub fn finish(self) -> VerificationReport {
        let verdicts: Vec<Verdict> = self.checks.iter().map(|c| c.verdict).collect();
        let verdict = if verdicts.contains(&Verdict::Fail) {
            Verdict::Fail
        } else if verdicts.contains(&Verdict::ResourceLimit) {
            Verdict::ResourceLimit
        } else if verdicts.contains(&Verdict::Pass) {
            Verdict::Pass
        } else {
            Verdict::Skipped
        };
        VerificationReport {
            id: self.id,
            claim: self.claim,
            anchor: self.anchor,
            verdict,
            witnesses: self.witnesses,
            millis: self.start.elapsed().as_millis() as u64,
            checks: self.checks,
            ideals: self.ideals,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_dominates_resource_limit() {
        let mut b = ReportBuilder::new("t", "claim", "anchor");
        b.check("a", true, "");
        b.run("b", || Err(GroebnerError::ResourceLimit("pairs".into())));
        assert_eq!(b.finish().verdict, Verdict::ResourceLimit);

        let mut b = ReportBuilder::new("t", "claim", "anchor");
        b.run("b", || Err(GroebnerError::ResourceLimit("pairs".into())));
        b.check("c", false, "");
        let r = b.finish();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.check_passed("c"), Some(false));
        assert_eq!(r.check_passed("zzz"), None);
    }

    #[test]
    fn empty_report_is_skipped() {
        assert_eq!(ReportBuilder::new("t", "c", "a").finish().verdict, Verdict::Skipped);
    }

    #[test]
    fn json_has_the_documented_fields() {
        let mut b = ReportBuilder::new("x", "claim", "anchor");
        b.check("ok", true, "fine");
        let v = serde_json::to_value(b.finish()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 6);
        assert_eq!(v["verdict"], "pass");
    }
}
