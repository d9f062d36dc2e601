//! Criteria 1–11, one line each. Lines go straight to stdout so they show up
//! without `--nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use symred::report::{Verdict, VerificationReport};
use symred::verify::{run_cases, Case, RunOptions};

struct Criterion<'a> {
    number: u32,
    what: &'a str,
    reports: Vec<&'a VerificationReport>,
    checks: Vec<(&'a str, &'a str)>,
    limit: Duration,
    /// Checks known to fail; see the decisions ledger.
    known_failures: &'a [(&'a str, &'a str)],
}

struct Outcome {
    passed: bool,
    failing: Vec<String>,
    line: String,
}

impl Criterion<'_> {
    fn evaluate(&self, by_id: &BTreeMap<&str, &VerificationReport>) -> Outcome {
        let mut failing = Vec::new();
        for (id, name) in &self.checks {
            match by_id[id].check_passed(name) {
                Some(true) => {}
                Some(false) => failing.push(format!("{id}/{name}")),
                None => failing.push(format!("{id}/{name} (missing)")),
            }
        }
        let slowest = self.reports.iter().map(|r| r.millis).max().unwrap_or(0);
        let in_time = Duration::from_millis(slowest) < self.limit;
        if !in_time {
            failing.push(format!("took {slowest} ms, limit {:?}", self.limit));
        }
        let passed = failing.is_empty();
        let line = format!(
            "criterion {:>2}: {} — {} [{} ms{}]",
            self.number,
            if passed { "PASS" } else { "FAIL" },
            self.what,
            slowest,
            if passed { String::new() } else { format!("; failing: {}", failing.join(", ")) },
        );
        Outcome { passed, failing, line }
    }
}

fn checks_of<'a>(r: &'a VerificationReport, id: &'a str) -> Vec<(&'a str, &'a str)> {
    r.checks.iter().map(|c| (id, c.name.as_str())).collect()
}

#[test]
fn acceptance() {
    let opts = RunOptions {
        workers: 4,
        ..RunOptions::default()
    };
    let reports = run_cases(&Case::all(), &opts);
    let by_id: BTreeMap<&str, &VerificationReport> = reports.iter().map(|r| (r.id.as_str(), r)).collect();
    let r = |id: &str| by_id[id];

    let secs = Duration::from_secs;
    let criteria = vec![
        Criterion {
            number: 1,
            what: "det X ∉ I_mu, (det X)^2 ∈ I_mu for n=1, m=1",
            reports: vec![r("sp:1:1")],
            checks: vec![("sp:1:1", "det_not_in_ideal"), ("sp:1:1", "det_squared_in_ideal")],
            limit: secs(1),
            known_failures: &[],
        },
        Criterion {
            number: 2,
            what: "dim I_mu = 4m - 3 for m = 2, 3",
            reports: vec![r("sp:1:2"), r("sp:1:3")],
            checks: vec![("sp:1:2", "moment_dimension"), ("sp:1:3", "moment_dimension")],
            limit: secs(30),
            known_failures: &[],
        },
        Criterion {
            number: 3,
            what: "n=1, m=2 kernel has 11 minimal generators containing A^2 and Pf(QA)",
            reports: vec![r("sp:1:2")],
            checks: vec![
                ("sp:1:2", "minimal_generators"),
                ("sp:1:2", "square_entries_in_kernel"),
                ("sp:1:2", "pfaffian_in_kernel"),
            ],
            limit: secs(300),
            known_failures: &[],
        },
        Criterion {
            number: 4,
            what: "n=1, m=3 quotient of dimension 6 containing A^2, rank ≤ 2 minors, Pf_4(QA)",
            reports: vec![r("sp:1:3")],
            checks: checks_of(r("sp:1:3"), "sp:1:3"),
            limit: secs(600),
            known_failures: &[],
        },
        Criterion {
            number: 5,
            what: "orbit preimages round-trip; square-zero orbits resolvable for m ≤ 6",
            reports: vec![r("orbits")],
            checks: checks_of(r("orbits"), "orbits"),
            limit: secs(10),
            known_failures: &[],
        },
        Criterion {
            number: 6,
            what: "binary cubics: ker = (16 d0 d4 - F^4), d1..d3 expressible",
            reports: vec![r("sym3")],
            checks: checks_of(r("sym3"), "sym3"),
            limit: secs(120),
            known_failures: &[],
        },
        Criterion {
            number: 7,
            what: "binary quartics: T expressible, graded dims agree through degree 8",
            reports: vec![r("sym4")],
            checks: checks_of(r("sym4"), "sym4"),
            limit: secs(900),
            known_failures: &[],
        },
        Criterion {
            number: 8,
            what: "adjoint doubles: A_1 relation, T1..T4 dispensable, dimension 6",
            reports: vec![r("adjoint")],
            checks: checks_of(r("adjoint"), "adjoint"),
            limit: secs(900),
            known_failures: &[],
        },
        Criterion {
            number: 9,
            what: "sl_2 ⊕ C^2 presentation by h1..h9, minors of M, singular locus, dimensions",
            reports: vec![r("sl2c2")],
            checks: checks_of(r("sl2c2"), "sl2c2"),
            limit: secs(600),
            known_failures: &[],
        },
        Criterion {
            number: 10,
            what: "Poincaré series, product polynomial, graded quotient dimensions",
            reports: vec![r("poincare")],
            checks: checks_of(r("poincare"), "poincare"),
            limit: secs(60),
            known_failures: &[],
        },
        Criterion {
            number: 11,
            what: "blow-up charts, fibers, semismallness, divisor, Y charts, swap symmetry",
            reports: vec![r("blowup")],
            checks: checks_of(r("blowup"), "blowup"),
            limit: secs(600),
            // The literal swap z5 ↔ z7, z6 ↔ z8 does not preserve (h);
            // it does once z4 ↦ -z4 is composed in.
            known_failures: &[("blowup", "swap_automorphism")],
        },
    ];

    let mut stdout = std::io::stdout().lock();
    let mut unexpected = Vec::new();
    for c in &criteria {
        let out = c.evaluate(&by_id);
        writeln!(stdout, "{}", out.line).unwrap();
        let known: Vec<String> = c.known_failures.iter().map(|(id, n)| format!("{id}/{n}")).collect();
        if out.passed {
            assert!(known.is_empty(), "criterion {} now passes; drop its known failures", c.number);
        } else if out.failing != known {
            unexpected.push(out.line);
        }
    }
    stdout.flush().unwrap();
    assert!(unexpected.is_empty(), "unexpected failures:\n{}", unexpected.join("\n"));

    // the corrected symmetry must hold, or criterion 11 is failing for a new reason
    assert_eq!(r("blowup").check_passed("swap_with_z4_negated"), Some(true));
    assert_eq!(r("blowup").verdict, Verdict::Fail);
    for id in ["sp:1:1", "sp:1:2", "sp:1:3", "orbits", "sym3", "sym4", "adjoint", "sl2c2", "poincare"] {
        assert!(r(id).passed(), "{}", r(id));
    }
}
