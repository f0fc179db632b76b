//! Batch verifier CLI.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 input error,
//! 3 resource limit skip.

use clap::Parser;
use piweights::driver::{run, CheckSet, GroupSource, PiSpec, RunConfig};
use piweights::report::VerificationReport;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "piweights",
    version,
    about = "Verify counting identities for pi-partial characters, vertices and pi'-weights over a corpus of pi-separable permutation groups"
)]
struct Cli {
    /// Prime set pi: comma-separated primes (e.g. `2,3`), `all` (every prime
    /// divisor of each group order), or `each` (every subset of the divisors)
    #[arg(long, default_value = "each")]
    pi: String,

    /// Built-in group name or a group file; repeatable.  Omitting both
    /// `--group` and `--corpus` runs the built-in corpus
    #[arg(long)]
    group: Vec<String>,

    /// Directory of group files
    #[arg(long)]
    corpus: Option<PathBuf>,

    /// Comma-separated checks: thmA,thmB,corC,awc,lemmas,basic,relative,all
    #[arg(long, default_value = "all")]
    checks: String,

    /// Largest group order processed; larger inputs are skipped
    #[arg(long, default_value_t = 2000)]
    limit_order: u128,

    /// Write the JSON report here
    #[arg(long)]
    report: Option<PathBuf>,

    /// Seed for the randomized class search in large groups
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Worker threads (defaults to the rayon heuristic)
    #[arg(long)]
    jobs: Option<usize>,
}

fn print_human(report: &VerificationReport) {
    for e in &report.entries {
        let pi = format!(
            "{{{}}}",
            e.pi.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        match &e.skipped {
            Some(reason) => {
                println!("{:10} pi={:8} SKIP ({})", e.group, pi, reason);
            }
            None => {
                let status = if e.checks_run == e.checks_passed {
                    "ok"
                } else {
                    "FAIL"
                };
                println!(
                    "{:10} pi={:8} {:4} [{}/{} checks] pi-classes={} |I_pi|={}",
                    e.group,
                    pi,
                    status,
                    e.checks_passed,
                    e.checks_run,
                    e.pi_classes.unwrap_or(0),
                    e.i_count.unwrap_or(0),
                );
                for f in &e.failures {
                    println!("    FAIL: {}", f);
                }
            }
        }
    }
    println!(
        "checks: {} run, {} passed, {} failed; {} (group, pi) pairs skipped",
        report.summary.checks_run,
        report.summary.passed,
        report.summary.failed,
        report.summary.skipped
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    }
    let pi = match cli.pi.as_str() {
        "all" => PiSpec::All,
        "each" => PiSpec::Each,
        spec => {
            let mut primes = Vec::new();
            for part in spec.split(',') {
                match part.trim().parse::<u64>() {
                    Ok(p) => primes.push(p),
                    Err(_) => {
                        eprintln!("error: bad pi specification {:?}", spec);
                        return ExitCode::from(2);
                    }
                }
            }
            PiSpec::Primes(primes)
        }
    };
    let source = if let Some(dir) = cli.corpus {
        GroupSource::Dir(dir)
    } else if !cli.group.is_empty() {
        GroupSource::Named(cli.group.clone())
    } else {
        GroupSource::Builtin
    };
    let checks = match CheckSet::parse(&cli.checks) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let config = RunConfig {
        pi,
        source,
        checks,
        limit: cli.limit_order,
        seed: cli.seed,
    };
    match run(&config) {
        Ok((report, exit)) => {
            print_human(&report);
            if let Some(path) = cli.report {
                let json = serde_json::to_string_pretty(&report).expect("serializable report");
                if let Err(e) = std::fs::write(&path, json) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return ExitCode::from(2);
                }
                println!("report written to {}", path.display());
            }
            ExitCode::from(exit as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
