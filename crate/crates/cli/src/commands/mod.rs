//! Subcommand implementations and the flag/config resolution shared by them.

pub mod aim_check;
pub mod potential;
pub mod solve;
pub mod table;
pub mod wavefn;

use crate::config::ConfigFile;
use crate::PhysArgs;
use tptdirac_core::model::{quantization_residual, QuantumState};
use tptdirac_core::{ModelParams, SymmetryLimit};

/// Resolve physical parameters from flags plus an optional config file.
/// Flags win over config values; anything still missing is an error.
pub fn resolve_params(phys: &PhysArgs) -> Result<ModelParams, String> {
    let cfg = match &phys.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let take = |flag: Option<f64>, key: &str| -> Result<Option<f64>, String> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => cfg.get_f64(key),
        }
    };
    let limit_raw = phys
        .limit
        .clone()
        .or_else(|| cfg.get_str("limit").map(str::to_string))
        .ok_or("missing --limit (spin|pspin)")?;
    let limit = parse_limit(&limit_raw)?;
    let m = take(phys.m, "M")?.ok_or("missing --M")?;
    let c = take(phys.c, "C")?.ok_or("missing --C")?;
    let v1 = take(phys.v1, "V1")?.ok_or("missing --V1")?;
    let v2 = take(phys.v2, "V2")?.ok_or("missing --V2")?;
    let alpha = take(phys.alpha, "alpha")?.ok_or("missing --alpha")?;
    let a = take(phys.a, "A")?.unwrap_or(0.0);
    ModelParams::new(m, v1, v2, alpha, a, limit, c).map_err(|e| e.to_string())
}

pub fn parse_limit(s: &str) -> Result<SymmetryLimit, String> {
    match s {
        "spin" => Ok(SymmetryLimit::Spin),
        "pspin" => Ok(SymmetryLimit::PSpin),
        other => Err(format!("unknown limit '{other}', expected spin or pspin")),
    }
}

/// Comma-separated integer list, e.g. "--kappa -2,-1,1,2".
pub fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>, String> {
    raw.split(',')
        .map(|tok| tok.trim().parse::<T>().map_err(|_| format!("bad {what} entry '{tok}'")))
        .collect()
}

/// Echo line describing the parameter set, used in CSV headers.
pub fn params_echo(p: &ModelParams) -> String {
    use crate::output::sig12;
    format!(
        "# limit={} M={} C={} V1={} V2={} alpha={} A={}",
        p.limit,
        sig12(p.mass),
        sig12(p.c),
        sig12(p.v1),
        sig12(p.v2),
        sig12(p.alpha),
        sig12(p.tensor),
    )
}

/// Residual documentation for a printed reference energy: the value of the
/// spectrum-equation residual there, or the radicand failure. Mismatched
/// reference entries whose own residual violates |f| <= 1e-6 are documented
/// misprint candidates rather than solver disagreements.
#[derive(Debug, Clone, Copy)]
pub struct PrintedDoc {
    pub residual: f64,
    pub valid: bool,
}

impl PrintedDoc {
    pub fn evaluate(params: &ModelParams, state: &QuantumState, e_printed: f64) -> Self {
        let r = quantization_residual(params, state, e_printed);
        Self { residual: r.value, valid: r.valid }
    }

    /// The printed value fails the equation's own residual check.
    pub fn is_documented_misprint(&self) -> bool {
        !self.valid || self.residual.abs() > 1e-6
    }
}
