//! Command-line front end for `balpha-core`: graph sources, number formatting,
//! the query commands and the verification harness.

pub mod commands;
pub mod error;
pub mod number;
pub mod source;
pub mod verify;

use balpha_core::Tolerances;

use crate::error::{CliError, CliResult};

pub const TOLERANCE_KEYS: [&str; 9] =
    ["eig", "det", "poly", "psd", "beta_bracket", "beta_sign", "bound", "jacobi", "jacobi_max_sweeps"];

/// Applies one `KEY=VALUE` override and returns the key.
pub fn apply_tolerance(tol: &mut Tolerances, spec: &str) -> CliResult<&'static str> {
    let (key, value) = spec
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("tolerance {spec:?} must be KEY=VALUE")))?;
    let key = TOLERANCE_KEYS
        .into_iter()
        .find(|k| *k == key.trim())
        .ok_or_else(|| CliError::Usage(format!("unknown tolerance {key:?}; expected one of {}", TOLERANCE_KEYS.join(", "))))?;
    let bad = || CliError::Usage(format!("tolerance {key} needs a positive number, got {value:?}"));
    if key == "jacobi_max_sweeps" {
        tol.jacobi_max_sweeps = value.trim().parse().ok().filter(|&v| v > 0).ok_or_else(bad)?;
        return Ok(key);
    }
    let v: f64 = value.trim().parse().ok().filter(|v: &f64| v.is_finite() && *v > 0.0).ok_or_else(bad)?;
    let slot = match key {
        "eig" => &mut tol.eig,
        "det" => &mut tol.det,
        "poly" => &mut tol.poly,
        "psd" => &mut tol.psd,
        "beta_bracket" => &mut tol.beta_bracket,
        "beta_sign" => &mut tol.beta_sign,
        "bound" => &mut tol.bound,
        _ => &mut tol.jacobi,
    };
    *slot = v;
    Ok(key)
}
