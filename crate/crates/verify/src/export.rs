//! Golden files: operator coefficient tables and Gram matrices as JSON.

use racah_core::algebra::{DiffOperator, Sampler, Signature};
use racah_core::dual::ln;
use racah_core::limits::{hahn, krawtchouk};
use racah_core::racah::{simplex, RacahParams, RacahSystem};
use racah_core::scalar::fmt_rational;
use serde::Serialize;

use crate::error::{Result, VerifyError};
use crate::suites::gram;

pub const OPERATORS: [&str; 5] = ["racah-x", "racah-n", "hahn-y", "krawtchouk-x", "krawtchouk-n"];

#[derive(Clone, Debug, Serialize)]
pub struct OperatorTerm {
    pub shift: Vec<i32>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorGolden {
    pub family: String,
    pub p: usize,
    pub j: usize,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub terms: Vec<OperatorTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramGolden {
    pub p: usize,
    pub n: i64,
    pub seed: u64,
    pub beta: Vec<String>,
    pub indices: Vec<Vec<u32>>,
    pub matrix: Vec<Vec<String>>,
}

fn names(prefix: &str, range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| format!("{}{}", prefix, i)).collect()
}

pub fn operator(family: &str, p: usize, j: usize) -> Result<OperatorGolden> {
    if p == 0 || !(1..=p).contains(&j) {
        return Err(VerifyError::ConfigInvalid(format!("need 1 <= j <= p, got p={} j={}", p, j)));
    }
    let racah_params = || {
        let mut v = names("b", 0..p + 2);
        v.push("N".into());
        v
    };
    let (op, sig): (DiffOperator, Signature) = match family {
        "racah-x" => (RacahSystem::new(p).lx(j), Signature::new(names("x", 1..p + 1), racah_params())),
        "racah-n" => (ln(&RacahSystem::new(p), j), Signature::new(names("n", 1..p + 1), racah_params())),
        "hahn-y" => {
            let mut params = vec!["unused".to_string()];
            params.extend(names("g", 1..p + 2));
            params.push("N".into());
            (hahn::y_operator(p, j), Signature::new(names("y", 1..p + 1), params))
        }
        "krawtchouk-x" | "krawtchouk-n" => {
            let mut params = names("p", 1..p + 1);
            params.push("N".into());
            let op = if family == "krawtchouk-x" { krawtchouk::lx(p, j) } else { krawtchouk::ln(p, j) };
            let v = if family == "krawtchouk-x" { "x" } else { "n" };
            (op, Signature::new(names(v, 1..p + 1), params))
        }
        other => return Err(VerifyError::UnknownFamily(other.into())),
    };
    let terms = op
        .terms()
        .map(|(nu, c)| OperatorTerm { shift: nu.clone(), coeff: c.display_with(&sig).to_string() })
        .collect();
    Ok(OperatorGolden { family: family.into(), p, j, vars: sig.vars.clone(), params: sig.params.clone(), terms })
}

/// Gram matrix of the Racah polynomials for seeded generic `beta` and
/// integer `N`.
pub fn gram_matrix(p: usize, big_n: i64, seed: u64) -> Result<GramGolden> {
    if p == 0 || big_n < 0 {
        return Err(VerifyError::ConfigInvalid("need p >= 1 and N >= 0".into()));
    }
    let params = RacahParams::generic(p, &mut Sampler::new(seed), Some(big_n));
    let g = gram(&params)?;
    Ok(GramGolden {
        p,
        n: big_n,
        seed,
        beta: params.beta.iter().map(fmt_rational).collect(),
        indices: simplex(p, big_n as u32),
        matrix: g.iter().map(|row| row.iter().map(fmt_rational).collect()).collect(),
    })
}

pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}
