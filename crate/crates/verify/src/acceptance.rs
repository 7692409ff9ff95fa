//! The twelve acceptance criteria, each mapped to suites at the desk tier.

use crate::config::{Fault, SuiteConfig, Tier, SUITES};
use crate::error::Result;
use crate::suites::run_suite;

pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub suites: &'static [&'static str],
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion { number: 1, title: "difference and shift forms agree, p <= 3", suites: &["form-equivalence"] },
    Criterion { number: 2, title: "operator is triangular on lambda-polynomials, d <= 4", suites: &["triangularity"] },
    Criterion { number: 3, title: "operator is symmetric on the lattice, p = 2, N <= 4", suites: &["self-adjointness"] },
    Criterion { number: 4, title: "Gram matrix is diagonal with nonzero norms", suites: &["orthogonality"] },
    Criterion { number: 5, title: "eigenvalue equations in x and n", suites: &["spectral-x", "spectral-n"] },
    Criterion { number: 6, title: "operators commute on both sides", suites: &["commutativity-x", "commutativity-n"] },
    Criterion { number: 7, title: "normalized Racah polynomials are self-dual", suites: &["duality-racah"] },
    Criterion { number: 8, title: "Whipple transformation and factor rewrites", suites: &["whipple"] },
    Criterion { number: 9, title: "binomial determinant is a power of two", suites: &["determinant"] },
    Criterion { number: 10, title: "two-variable tables match generated operators", suites: &["appendix-golden"] },
    Criterion {
        number: 11,
        title: "Hahn, Jacobi, Krawtchouk, Meixner and Wilson limits",
        suites: &["hahn", "jacobi", "krawtchouk-meixner", "wilson"],
    },
    Criterion { number: 12, title: "every injected fault is detected", suites: &[] },
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2}: {} {} ({})", self.number, verdict, self.title, self.detail)
    }
}

pub fn run_criterion(c: &Criterion, seed: u64) -> Result<CriterionResult> {
    if c.suites.is_empty() {
        return fault_detection(c, seed);
    }
    let mut total = 0;
    let mut failed = Vec::new();
    for name in c.suites {
        let report = run_suite(&SuiteConfig::new(name, seed, Tier::Desk))?;
        total += report.summary.total;
        failed.extend(report.failures().map(|r| r.id.clone()));
    }
    let detail = match failed.first() {
        None => format!("{} checks", total),
        Some(first) => format!("{} of {} checks failed, first {}", failed.len(), total, first),
    };
    Ok(CriterionResult { number: c.number, title: c.title, pass: failed.is_empty(), detail })
}

/// Run the smoke tier with each fault until some suite fails.
fn fault_detection(c: &Criterion, seed: u64) -> Result<CriterionResult> {
    let mut caught = Vec::new();
    let mut missed = Vec::new();
    for fault in Fault::all() {
        let mut by = None;
        for name in SUITES {
            let mut cfg = SuiteConfig::new(name, seed, Tier::Smoke);
            cfg.fault = Some(fault);
            if !run_suite(&cfg)?.pass {
                by = Some(name);
                break;
            }
        }
        match by {
            Some(name) => caught.push(format!("{}->{}", fault.name(), name)),
            None => missed.push(fault.name()),
        }
    }
    let detail = if missed.is_empty() {
        caught.join(", ")
    } else {
        format!("undetected: {}", missed.join(", "))
    };
    Ok(CriterionResult { number: c.number, title: c.title, pass: missed.is_empty(), detail })
}

pub fn run_all_criteria(seed: u64) -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|c| run_criterion(c, seed)).collect()
}
