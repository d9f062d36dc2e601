//! Case dispatch for the `symred` driver.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Duration;

use crate::blowup;
use crate::groebner::{with_limits, GroebnerConfig};
use crate::poly::MonomialOrder;
use crate::report::{ReportBuilder, Verdict, VerificationReport};
use crate::sl2;
use crate::sp::{self, SpError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Case {
    Sp { n: usize, m: usize },
    Sym3,
    Sym4,
    Adjoint,
    Sl2c2,
    Blowup,
    Orbits,
    Poincare,
}

impl Case {
    /// What `all` expands to.
    pub fn all() -> Vec<Case> {
        vec![
            Case::Sp { n: 1, m: 1 },
            Case::Sp { n: 1, m: 2 },
            Case::Sp { n: 1, m: 3 },
            Case::Sym3,
            Case::Sym4,
            Case::Adjoint,
            Case::Sl2c2,
            Case::Blowup,
            Case::Orbits,
            Case::Poincare,
        ]
    }

    pub fn id(&self) -> String {
        self.to_string()
    }

    /// `"all"` or a single case.
    pub fn parse_list(s: &str) -> Result<Vec<Case>, UnknownCase> {
        if s == "all" {
            Ok(Case::all())
        } else {
            s.parse().map(|c| vec![c])
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Sp { n, m } => write!(f, "sp:{n}:{m}"),
            Case::Sym3 => f.write_str("sym3"),
            Case::Sym4 => f.write_str("sym4"),
            Case::Adjoint => f.write_str("adjoint"),
            Case::Sl2c2 => f.write_str("sl2c2"),
            Case::Blowup => f.write_str("blowup"),
            Case::Orbits => f.write_str("orbits"),
            Case::Poincare => f.write_str("poincare"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCase(pub String);

impl fmt::Display for UnknownCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown case '{}' (expected sp:<n>:<m>, sym3, sym4, adjoint, sl2c2, blowup, orbits, poincare or all)",
            self.0
        )
    }
}

impl std::error::Error for UnknownCase {}

impl FromStr for Case {
    type Err = UnknownCase;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || UnknownCase(s.to_string());
        Ok(match s {
            "sym3" => Case::Sym3,
            "sym4" => Case::Sym4,
            "adjoint" => Case::Adjoint,
            "sl2c2" => Case::Sl2c2,
            "blowup" => Case::Blowup,
            "orbits" => Case::Orbits,
            "poincare" => Case::Poincare,
            _ => {
                let rest = s.strip_prefix("sp:").ok_or_else(err)?;
                let (n, m) = rest.split_once(':').ok_or_else(err)?;
                let n: usize = n.parse().map_err(|_| err())?;
                let m: usize = m.parse().map_err(|_| err())?;
                // 4nm variables; the packed engine stops at 32
                if n == 0 || m == 0 || 4 * n * m > 32 {
                    return Err(err());
                }
                Case::Sp { n, m }
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    /// Cap on S-polynomial degree; `None` is unlimited.
    pub degree_bound: Option<u32>,
    pub timeout: Option<Duration>,
    pub workers: usize,
    /// Truncation degree for the graded comparison in `sym4`.
    pub sym4_degree: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            degree_bound: None,
            timeout: None,
            workers: 1,
            sym4_degree: 8,
        }
    }
}

fn sp_error_report(case: &Case, e: SpError) -> VerificationReport {
    let mut b = ReportBuilder::new(case.id(), "symplectic group case", "sp-moment-quotient");
    match e {
        SpError::Groebner(g) => {
            b.run("construction", || Err(g));
        }
        other => {
            b.check("construction", false, other.to_string());
        }
    }
    b.finish()
}

/// Runs one case under the resource caps of `opts`.
pub fn run_case(case: &Case, opts: &RunOptions) -> VerificationReport {
    let mut cfg = GroebnerConfig::default();
    cfg.max_degree = opts.degree_bound;
    if let Some(t) = opts.timeout {
        cfg = cfg.with_timeout(t);
    }
    with_limits(cfg, || match *case {
        Case::Sp { n: 1, m } if m <= 3 => sp::reducedness_witnesses(1, m).unwrap_or_else(|e| sp_error_report(case, e)),
        Case::Sp { n, m } => sp::structure_report(n, m, opts.seed),
        Case::Sym3 => sl2::sym3_quotient_check(),
        Case::Sym4 => sl2::sym4_quotient_check(opts.sym4_degree),
        Case::Adjoint => sl2::so3_quotient_checks(),
        Case::Sl2c2 => sl2::sl2c2_presentation_check(),
        Case::Blowup => blowup::blowup_report(opts.seed),
        Case::Orbits => sp::orbits_report(opts.seed),
        Case::Poincare => sl2::poincare_check(),
    })
}

/// Runs the cases on up to `opts.workers` threads; the result is sorted by id.
pub fn run_cases(cases: &[Case], opts: &RunOptions) -> Vec<VerificationReport> {
    let mut cases = cases.to_vec();
    cases.sort_by_key(|c| c.id());
    cases.dedup();
    let queue = Mutex::new(cases.clone());
    let done = Mutex::new(Vec::new());
    let workers = opts.workers.clamp(1, cases.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let next = queue.lock().unwrap().pop();
                match next {
                    Some(c) => {
                        let r = run_case(&c, opts);
                        done.lock().unwrap().push(r);
                    }
                    None => break,
                }
            });
        }
    });
    let mut out = done.into_inner().unwrap();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// 1 if anything failed, else 3 if a resource limit was hit, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().any(|r| r.verdict == Verdict::ResourceLimit) {
        3
    } else {
        0
    }
}

pub fn to_json(reports: &[VerificationReport], timing: bool) -> String {
    let mut reports = reports.to_vec();
    if !timing {
        for r in &mut reports {
            r.millis = 0;
        }
    }
    serde_json::to_string_pretty(&reports).expect("reports serialize")
}

fn file_stem(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect()
}

/// Writes each exported ideal to `<dir>/<case>__<name>.txt`, one generator per line.
pub fn export_ideals(reports: &[VerificationReport], dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for r in reports {
        for (name, ideal) in &r.ideals {
            let path = dir.join(format!("{}__{}.txt", file_stem(&r.id), file_stem(name)));
            fs::write(&path, ideal.to_text(MonomialOrder::GrevLex))?;
            written.push(path);
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_cases() {
        assert_eq!("sp:1:2".parse::<Case>(), Ok(Case::Sp { n: 1, m: 2 }));
        assert_eq!("sl2c2".parse::<Case>(), Ok(Case::Sl2c2));
        for bad in ["nosuchcase", "sp:1", "sp:0:2", "sp:a:b", "sp:3:3", ""] {
            assert!(bad.parse::<Case>().is_err(), "{bad}");
        }
        assert_eq!(Case::parse_list("all").unwrap().len(), 10);
        for c in Case::all() {
            assert_eq!(c.id().parse::<Case>(), Ok(c));
        }
    }

    #[test]
    fn reports_are_sorted_and_codes_ordered() {
        let opts = RunOptions {
            workers: 3,
            ..RunOptions::default()
        };
        let reports = run_cases(&[Case::Poincare, Case::Sp { n: 1, m: 1 }, Case::Sym3], &opts);
        let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["poincare", "sp:1:1", "sym3"]);
        assert_eq!(exit_code(&reports), 0);
    }

    #[test]
    fn tiny_degree_bound_is_a_resource_limit() {
        let opts = RunOptions {
            degree_bound: Some(2),
            ..RunOptions::default()
        };
        let r = run_case(&Case::Sym3, &opts);
        assert_eq!(r.verdict, Verdict::ResourceLimit, "{r}");
        assert_eq!(exit_code(&[r]), 3);
    }

    #[test]
    fn generic_sp_case() {
        let r = run_case(&Case::Sp { n: 2, m: 3 }, &RunOptions::default());
        assert!(r.passed(), "{r}");
    }
}
