//! Runs the twelve acceptance criteria and prints one line per criterion.

use std::process::ExitCode;

use racah_verify::acceptance::run_all_criteria;
use racah_verify::with_pool;

fn main() -> ExitCode {
    let results = match with_pool(|| run_all_criteria(1)) {
        Ok(r) => r,
        Err(e) => {
            println!("acceptance: error: {}", e);
            return ExitCode::FAILURE;
        }
    };
    for r in &results {
        println!("{}", r);
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
