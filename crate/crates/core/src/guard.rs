//! Size guards for the brute-force enumerations.
//!
//! Every exhaustive routine checks its input against a default limit. Setting
//! `LATTICE_DUAL_GUARD` to a positive integer replaces all defaults at once.

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "LATTICE_DUAL_GUARD";

/// Default bound on |P| for downset enumeration.
pub const DOWNSETS: usize = 20;
/// Default bound on |M| for concept enumeration.
pub const CONCEPTS: usize = 25;
/// Default bound on |M| for brute-force base recognition.
pub const BASE: usize = 18;
/// Default bound on the number of variables for brute-force satisfiability.
pub const ASSIGNMENTS: usize = 25;

pub fn limit(default: usize) -> usize {
    std::env::var(ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(default)
}

pub(crate) fn check(what: &'static str, size: usize, default: usize) -> Result<()> {
    let limit = limit(default);
    if size > limit {
        return Err(Error::GuardExceeded { what, size, limit });
    }
    Ok(())
}
