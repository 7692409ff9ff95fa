use std::fmt;
use std::str::FromStr;

use racah_core::racah::Mutation;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Result, VerifyError};

/// Every suite, in the order `verify all` runs and reports them.
pub const SUITES: [&str; 16] = [
    "triangularity",
    "form-equivalence",
    "self-adjointness",
    "orthogonality",
    "spectral-x",
    "spectral-n",
    "commutativity-x",
    "commutativity-n",
    "duality-racah",
    "whipple",
    "determinant",
    "appendix-golden",
    "hahn",
    "jacobi",
    "krawtchouk-meixner",
    "wilson",
];

/// Environment variable bounding the number of worker threads.
pub const WORKERS_ENV: &str = "RACAH_VERIFY_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Smoke,
    Desk,
    Deep,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Smoke => "smoke",
            Tier::Desk => "desk",
            Tier::Deep => "deep",
        })
    }
}

/// A deliberately broken formula, for checking that the suites notice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// One of the built-in coefficient mutations of the operator.
    Core(Mutation),
    /// A constant in the tabulated two-variable dual coefficient `D_(1,0)`.
    AppendixD,
}

impl Fault {
    pub fn all() -> Vec<Fault> {
        let mut v: Vec<Fault> = Mutation::ALL.iter().map(|&m| Fault::Core(m)).collect();
        v.push(Fault::AppendixD);
        v
    }

    pub fn name(self) -> &'static str {
        match self {
            Fault::Core(m) => m.name(),
            Fault::AppendixD => "D10",
        }
    }

    pub fn mutation(fault: Option<Fault>) -> Option<Mutation> {
        match fault {
            Some(Fault::Core(m)) => Some(m),
            _ => None,
        }
    }
}

impl FromStr for Fault {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        Fault::all()
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| VerifyError::ConfigInvalid(format!("unknown fault `{}`", s)))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: String,
    /// Restrict to one dimension; `None` uses the tier's range.
    pub p: Option<usize>,
    pub seed: u64,
    pub tier: Tier,
    /// Overrides the tier's sample count where a suite samples.
    pub trials: Option<usize>,
    /// Overrides the tier's degree or size bound.
    pub max_degree: Option<u32>,
    pub fault: Option<Fault>,
}

impl SuiteConfig {
    pub fn new(suite: &str, seed: u64, tier: Tier) -> Self {
        SuiteConfig { suite: suite.into(), p: None, seed, tier, trials: None, max_degree: None, fault: None }
    }

    pub fn validate(&self) -> Result<()> {
        if !SUITES.contains(&self.suite.as_str()) {
            return Err(VerifyError::UnknownSuite(self.suite.clone()));
        }
        if let Some(p) = self.p {
            if !(1..=4).contains(&p) {
                return Err(VerifyError::ConfigInvalid(format!("p = {} is outside 1..=4", p)));
            }
        }
        if self.trials == Some(0) {
            return Err(VerifyError::ConfigInvalid("trials must be positive".into()));
        }
        Ok(())
    }

    /// The suite's own seed: the global seed xor the first eight bytes of
    /// SHA-256 of the suite name.
    pub fn suite_seed(&self) -> u64 {
        self.seed ^ name_hash(&self.suite)
    }

    /// `p` values to run, given the tier's default range.
    pub fn dims(&self, default: &[usize]) -> Vec<usize> {
        match self.p {
            Some(p) => vec![p],
            None => default.to_vec(),
        }
    }

    pub fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    pub fn degree_or(&self, default: u32) -> u32 {
        self.max_degree.unwrap_or(default)
    }

    /// Pick a value by tier.
    pub fn by_tier<T>(&self, smoke: T, desk: T, deep: T) -> T {
        match self.tier {
            Tier::Smoke => smoke,
            Tier::Desk => desk,
            Tier::Deep => deep,
        }
    }
}

pub fn name_hash(name: &str) -> u64 {
    let d = Sha256::digest(name.as_bytes());
    u64::from_le_bytes(d[..8].try_into().expect("digest is 32 bytes"))
}

/// Worker count from the environment, else the available parallelism.
pub fn workers() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(VerifyError::ConfigInvalid(format!("{} must be a positive integer, got `{}`", WORKERS_ENV, v))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}
