use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;

use crate::config::{SuiteConfig, Tier};
use crate::error::{Result, VerifyError};

pub const SCHEMA_VERSION: u32 = 1;

/// Values shown when a check fails, keyed by name.
pub type Witness = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    /// First 16 hex digits of SHA-256 over the canonical inputs string.
    pub inputs_digest: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub p: Option<usize>,
    pub seed: u64,
    pub suite_seed: u64,
    pub tier: Tier,
    pub trials: Option<usize>,
    pub max_degree: Option<u32>,
    pub fault: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    /// Not serialized, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn new(cfg: &SuiteConfig, checks: Vec<CheckRecord>, wall_time: Duration) -> Self {
        let failed = checks.iter().filter(|c| !c.pass).count();
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            suite: cfg.suite.clone(),
            config: ConfigEcho {
                p: cfg.p,
                seed: cfg.seed,
                suite_seed: cfg.suite_seed(),
                tier: cfg.tier,
                trials: cfg.trials,
                max_degree: cfg.max_degree,
                fault: cfg.fault.map(|f| f.name().to_string()),
            },
            summary: Summary { total: checks.len(), passed: checks.len() - failed, failed },
            pass: failed == 0,
            checks,
            wall_time,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexEntry {
    pub suite: String,
    pub file: String,
    pub total: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Index {
    pub schema_version: u32,
    pub seed: u64,
    pub tier: Tier,
    pub pass: bool,
    pub suites: Vec<IndexEntry>,
}

impl Index {
    pub fn new(seed: u64, tier: Tier, reports: &[SuiteReport]) -> Self {
        let suites: Vec<IndexEntry> = reports
            .iter()
            .map(|r| IndexEntry {
                suite: r.suite.clone(),
                file: report_file_name(&r.suite),
                total: r.summary.total,
                failed: r.summary.failed,
                pass: r.pass,
            })
            .collect();
        Index { schema_version: SCHEMA_VERSION, seed, tier, pass: suites.iter().all(|e| e.pass), suites }
    }
}

pub fn report_file_name(suite: &str) -> String {
    format!("{}.json", suite)
}

fn write(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(|source| VerifyError::Io { path: dir.into(), source })?;
        }
    }
    std::fs::write(path, contents).map_err(|source| VerifyError::Io { path: path.into(), source })
}

/// Write one suite report to `path`.
pub fn write_report(path: &Path, report: &SuiteReport) -> Result<()> {
    write(path, &report.to_json()?)
}

/// Write every report into `dir` plus an `index.json`. Returns the index path.
pub fn write_all(dir: &Path, index: &Index, reports: &[SuiteReport]) -> Result<PathBuf> {
    for r in reports {
        write_report(&dir.join(report_file_name(&r.suite)), r)?;
    }
    let path = dir.join("index.json");
    let mut s = serde_json::to_string_pretty(index)?;
    s.push('\n');
    write(&path, &s)?;
    Ok(path)
}
