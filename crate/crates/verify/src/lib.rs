//! Verification harness for `racah-core`: named suites of exact checks,
//! JSON reports, golden-file export and a family evaluator.

pub mod acceptance;
pub mod appendix;
pub mod check;
pub mod config;
pub mod error;
pub mod eval;
pub mod export;
pub mod report;
pub mod suites;

pub use config::{Fault, SuiteConfig, Tier, SUITES};
pub use error::{Result, VerifyError};
pub use report::{CheckRecord, SuiteReport};
pub use suites::{run_all, run_suite, with_pool};
