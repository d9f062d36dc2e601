use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;

use symred::verify::{self, Case, RunOptions};

/// Exact verification of symplectic-reduction claims.
///
/// Exit codes: 0 all pass, 1 a check failed, 2 usage error, 3 resource limit.
#[derive(Parser, Debug)]
#[command(name = "symred", version)]
struct Cli {
    /// sp:<n>:<m>, sym3, sym4, adjoint, sl2c2, blowup, orbits, poincare or all
    #[arg(required = true)]
    cases: Vec<String>,

    /// Print a JSON array of reports
    #[arg(long)]
    json: bool,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Cap on S-polynomial degree in Buchberger (0 = unlimited)
    #[arg(long, default_value_t = 0)]
    degree_bound: u32,

    /// Per-case wall-clock limit in seconds
    #[arg(long)]
    timeout: Option<u64>,

    /// Write every constructed ideal into this directory, one polynomial per line
    #[arg(long)]
    export_ideals: Option<PathBuf>,

    #[arg(long, default_value_t = 1)]
    workers: usize,

    /// Report 0 ms for every case, so that output is byte-for-byte reproducible
    #[arg(long)]
    no_timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cases: Vec<Case> = Vec::new();
    for name in &cli.cases {
        match Case::parse_list(name) {
            Ok(c) => cases.extend(c),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let opts = RunOptions {
        seed: cli.seed,
        degree_bound: (cli.degree_bound > 0).then_some(cli.degree_bound),
        timeout: cli.timeout.map(Duration::from_secs),
        workers: cli.workers.max(1),
        ..RunOptions::default()
    };
    let mut reports = verify::run_cases(&cases, &opts);
    if cli.no_timing {
        reports.iter_mut().for_each(|r| r.millis = 0);
    }
    if let Some(dir) = &cli.export_ideals {
        if let Err(e) = verify::export_ideals(&reports, dir) {
            eprintln!("error: cannot export ideals to {}: {e}", dir.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        println!("{}", verify::to_json(&reports, !cli.no_timing));
    } else {
        for r in &reports {
            println!("{r}");
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        println!("{passed}/{} cases passed", reports.len());
    }
    ExitCode::from(verify::exit_code(&reports) as u8)
}
