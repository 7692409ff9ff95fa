//! Point evaluation of the families from textual arguments.

use racah_core::limits::hahn::hahn_poly;
use racah_core::limits::jacobi::jacobi_poly;
use racah_core::limits::krawtchouk::{kraw_poly, meixner_poly};
use racah_core::limits::wilson::{wilson_poly, WilsonParams};
use racah_core::racah::{racah_hat, racah_poly};
use racah_core::scalar::parse_rational;
use racah_core::Rational;

use crate::error::{Result, VerifyError};

pub const FAMILIES: [&str; 7] = ["racah", "racah-hat", "hahn", "jacobi", "krawtchouk", "meixner", "wilson"];

/// Parse a comma-separated list of rationals such as `1,-2/3,4`.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_rational(t).map_err(VerifyError::from)).collect()
}

pub fn parse_degrees(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| VerifyError::ConfigInvalid(format!("degree `{}` is not a nonnegative integer", t.trim())))
        })
        .collect()
}

fn expect_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(VerifyError::ConfigInvalid(format!("{} needs {} values, got {}", what, want, got)));
    }
    Ok(())
}

/// Evaluate `family` at degree `n` and point `x`.
///
/// Parameter lists, with `p = n.len()`:
/// `racah`, `racah-hat`: `beta_0..beta_{p+1}, N`;
/// `hahn`: `gamma_1..gamma_{p+1}, N`;
/// `jacobi`: `gamma_1..gamma_{p+1}` (the point is `z`);
/// `krawtchouk`: `p_1..p_p, N`;
/// `meixner`: `c_1..c_p, s`;
/// `wilson`: `a, b, c, d, eps_2..eps_p` (the point is `y`).
pub fn evaluate(family: &str, n: &[u32], x: &[Rational], params: &[Rational]) -> Result<Rational> {
    let p = n.len();
    if p == 0 {
        return Err(VerifyError::ConfigInvalid("need at least one degree".into()));
    }
    expect_len("point", x.len(), p)?;
    let last = params.last().cloned().unwrap_or_else(|| racah_core::scalar::int(0));
    let head = &params[..params.len().saturating_sub(1)];
    Ok(match family {
        "racah" | "racah-hat" => {
            expect_len(family, params.len(), p + 3)?;
            if family == "racah" {
                racah_poly(n, x, head, &last)
            } else {
                racah_hat(n, x, head, &last)?
            }
        }
        "hahn" => {
            expect_len(family, params.len(), p + 2)?;
            hahn_poly(n, x, head, &last)?
        }
        "jacobi" => {
            expect_len(family, params.len(), p + 1)?;
            jacobi_poly(n, params).eval(x)
        }
        "krawtchouk" => {
            expect_len(family, params.len(), p + 1)?;
            kraw_poly(n, x, head, &last)?
        }
        "meixner" => {
            expect_len(family, params.len(), p + 1)?;
            meixner_poly(n, x, head, &last)?
        }
        "wilson" => {
            expect_len(family, params.len(), p + 3)?;
            let wp = WilsonParams {
                a: params[0].clone(),
                b: params[1].clone(),
                c: params[2].clone(),
                d: params[3].clone(),
                eps: params[4..].to_vec(),
            };
            wilson_poly(n, x, &wp)?
        }
        other => return Err(VerifyError::UnknownFamily(other.into())),
    })
}
