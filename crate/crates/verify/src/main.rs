use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use racah_verify::acceptance::{run_all_criteria, CRITERIA};
use racah_verify::config::SUITES;
use racah_verify::eval::{evaluate, parse_degrees, parse_list, FAMILIES};
use racah_verify::export::{gram_matrix, operator, to_json, OPERATORS};
use racah_verify::report::{write_all, write_report, Index};
use racah_verify::{run_all, run_suite, with_pool, Fault, Result, SuiteConfig, SuiteReport, Tier};

#[derive(Parser)]
#[command(name = "verify", version, about = "Exact verification suites for multivariable Racah polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the suites.
    List,
    /// Run one suite.
    Run {
        suite: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Tier::Desk)]
        tier: Tier,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Inject a fault, e.g. B00 or D10.
        #[arg(long)]
        fault: Option<Fault>,
        /// Write the JSON report here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every suite and write one report per suite plus an index.
    All {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Tier::Desk)]
        tier: Tier,
        #[arg(long)]
        fault: Option<Fault>,
        #[arg(long, default_value = "reports")]
        out: PathBuf,
    },
    /// Run the acceptance criteria.
    Acceptance {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Evaluate a family at one point, printed as an exact fraction.
    Eval {
        family: String,
        /// Degrees, comma separated.
        #[arg(long)]
        n: String,
        /// Point, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Export golden JSON files.
    Export {
        #[command(subcommand)]
        what: Export,
    },
}

#[derive(Subcommand)]
enum Export {
    /// Coefficients of one operator.
    Operator {
        family: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        j: usize,
    },
    /// Gram matrix of the Racah polynomials for seeded parameters.
    Gram {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn summary_line(r: &SuiteReport) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    format!(
        "{:<20} {} {:>5}/{:<5} {:>8.2}s",
        r.suite,
        verdict,
        r.summary.passed,
        r.summary.total,
        r.wall_time.as_secs_f64()
    )
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::List => {
            for s in SUITES {
                println!("{}", s);
            }
            Ok(true)
        }
        Cmd::Run { suite, p, seed, tier, trials, max_degree, fault, out } => {
            let cfg = SuiteConfig { suite, p, seed, tier, trials, max_degree, fault };
            cfg.validate()?;
            let report = with_pool(|| run_suite(&cfg))?;
            match out {
                Some(path) => {
                    write_report(&path, &report)?;
                    println!("{}", summary_line(&report));
                    for f in report.failures() {
                        println!("  failed {}", f.id);
                    }
                }
                None => print!("{}", report.to_json()?),
            }
            Ok(report.pass)
        }
        Cmd::All { seed, tier, fault, out } => {
            let reports = run_all(seed, tier, fault)?;
            for r in &reports {
                println!("{}", summary_line(r));
            }
            let index = Index::new(seed, tier, &reports);
            let path = write_all(&out, &index, &reports)?;
            println!("index: {}", path.display());
            Ok(index.pass)
        }
        Cmd::Acceptance { seed } => {
            let results = with_pool(|| run_all_criteria(seed))?;
            for r in &results {
                println!("{}", r);
            }
            debug_assert_eq!(results.len(), CRITERIA.len());
            Ok(results.iter().all(|r| r.pass))
        }
        Cmd::Eval { family, n, x, params } => {
            let v = evaluate(&family, &parse_degrees(&n)?, &parse_list(&x)?, &parse_list(&params)?)?;
            println!("{}", v);
            Ok(true)
        }
        Cmd::Export { what } => {
            let json = match what {
                Export::Operator { family, p, j } => to_json(&operator(&family, p, j)?)?,
                Export::Gram { p, n, seed } => to_json(&gram_matrix(p, n, seed)?)?,
            };
            print!("{}", json);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {}", e);
            if let racah_verify::VerifyError::UnknownFamily(_) = e {
                eprintln!("families: {} (export: {})", FAMILIES.join(", "), OPERATORS.join(", "));
            }
            ExitCode::from(2)
        }
    }
}
