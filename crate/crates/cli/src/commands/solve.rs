//! `solve`: bound-state energies for the requested states.

use super::{parse_list, params_echo, resolve_params};
use crate::output::{sig12, Sink};
use crate::SolveArgs;
use std::io::Write;
use tptdirac_core::model::{solve_energies, EnergyRootSet, ModelError, QuantumState};
use tptdirac_core::ModelParams;

/// A window whose every cell fails radicand validity holds no bound states;
/// for the command surface that is an empty listing, not a usage error.
pub(crate) fn solve_or_empty(
    params: &ModelParams,
    state: &QuantumState,
    window: Option<(f64, f64)>,
    grid: usize,
) -> Result<EnergyRootSet, String> {
    match solve_energies(params, state, window, grid) {
        Ok(set) => Ok(set),
        Err(ModelError::DegenerateWindow) => Ok(EnergyRootSet {
            roots: Vec::new(),
            scan_window: window.unwrap_or((f64::NAN, f64::NAN)),
            grid_points: grid,
        }),
        Err(e) => Err(e.to_string()),
    }
}

pub fn run(args: SolveArgs) -> u8 {
    match run_inner(args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

/// Parse `field=v1,v2,...` into sweep variants of the base parameter set.
fn sweep_variants(base: ModelParams, spec: &str) -> Result<Vec<(f64, ModelParams)>, String> {
    let (field, values) = spec
        .split_once('=')
        .ok_or("sweep must look like field=v1,v2,... (fields: M, C, A, alpha)")?;
    let values: Vec<f64> = parse_list(values, "sweep value")?;
    values
        .into_iter()
        .map(|v| {
            let mut p = base;
            match field.trim() {
                "M" => p.mass = v,
                "C" => p.c = v,
                "A" => p.tensor = v,
                "alpha" => p.alpha = v,
                other => return Err(format!("unknown sweep field '{other}'")),
            }
            ModelParams::new(p.mass, p.v1, p.v2, p.alpha, p.tensor, p.limit, p.c)
                .map(|checked| (v, checked))
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn run_inner(args: SolveArgs) -> Result<u8, String> {
    let params = resolve_params(&args.phys)?;
    let ns: Vec<u32> = parse_list(args.n.as_deref().ok_or("missing --n")?, "n")?;
    let kappas: Vec<i32> = parse_list(args.kappa.as_deref().ok_or("missing --kappa")?, "kappa")?;
    let grid = args.grid.unwrap_or(4000);
    let window = match (args.emin, args.emax) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        (None, None) => None,
        _ => return Err("provide both --emin and --emax or neither".into()),
    };
    let variants = match &args.sweep {
        Some(spec) => sweep_variants(params, spec)?,
        None => vec![(f64::NAN, params)],
    };

    let mut sink = Sink::open(args.output.as_deref()).map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(&params_echo(&params));
    out.push('\n');
    if args.sweep.is_some() {
        out.push_str("sweep,n,kappa,label,energy,residual,valid_radicands\n");
    } else {
        out.push_str("n,kappa,label,energy,residual,valid_radicands\n");
    }

    let mut any_empty = false;
    for (sweep_value, p) in &variants {
        for &n in &ns {
            for &kappa in &kappas {
                let state = QuantumState::new(n, kappa, p.limit).map_err(|e| e.to_string())?;
                let set = solve_or_empty(p, &state, window, grid)?;
                if set.roots.is_empty() {
                    any_empty = true;
                }
                for root in &set.roots {
                    let prefix = if args.sweep.is_some() {
                        format!("{},", sig12(*sweep_value))
                    } else {
                        String::new()
                    };
                    out.push_str(&format!(
                        "{prefix}{},{},{},{},{},{}\n",
                        n,
                        kappa,
                        state.label,
                        sig12(root.energy),
                        sig12(root.residual),
                        root.valid_radicands,
                    ));
                }
            }
        }
    }
    sink.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
    sink.flush().map_err(|e| e.to_string())?;
    Ok(if any_empty { 2 } else { 0 })
}
