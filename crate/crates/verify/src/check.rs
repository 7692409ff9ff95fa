//! Collecting check records inside a suite.

use std::fmt::Display;

use racah_core::scalar::fmt_rational;
use racah_core::Rational;
use sha2::{Digest, Sha256};

use crate::report::{CheckRecord, Witness};

/// Outcome of one check: `None` passes, `Some(w)` fails with witness `w`.
pub type Outcome = racah_core::Result<Option<Witness>>;

pub fn digest(inputs: &str) -> String {
    hex::encode(&Sha256::digest(inputs.as_bytes())[..8])
}

pub fn record(id: impl Into<String>, anchor: &str, inputs: &str, outcome: Outcome) -> CheckRecord {
    let (pass, witness) = match outcome {
        Ok(None) => (true, None),
        Ok(Some(w)) => (false, Some(w)),
        Err(e) => (false, Some(witness([("error", e.to_string())]))),
    };
    CheckRecord { id: id.into(), anchor: anchor.into(), inputs_digest: digest(inputs), pass, witness }
}

pub fn witness<K: Into<String>, V: Into<String>>(pairs: impl IntoIterator<Item = (K, V)>) -> Witness {
    pairs.into_iter().map(|(k, v)| (k.into(), v.into())).collect()
}

/// Pass iff `lhs == rhs`.
pub fn equal<T: PartialEq + Display>(lhs: &T, rhs: &T) -> Option<Witness> {
    (lhs != rhs).then(|| witness([("lhs", lhs.to_string()), ("rhs", rhs.to_string())]))
}

pub fn equal_q(lhs: &Rational, rhs: &Rational) -> Option<Witness> {
    (lhs != rhs).then(|| witness([("lhs", fmt_rational(lhs)), ("rhs", fmt_rational(rhs))]))
}

pub fn holds(ok: bool, what: &str) -> Option<Witness> {
    (!ok).then(|| witness([("failed", what)]))
}

/// Canonical text of a rational vector, for digests and witnesses.
pub fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rational).collect();
    format!("[{}]", parts.join(","))
}

pub fn fmt_list<T: std::fmt::Debug>(v: &[T]) -> String {
    format!("{:?}", v).replace(' ', "")
}

/// Merge several outcomes: the first failure wins.
pub fn all_of(items: impl IntoIterator<Item = Outcome>) -> Outcome {
    for o in items {
        if let Some(w) = o? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
