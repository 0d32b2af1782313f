//! `wavefn`: sampled two-component radial solution as CSV.

use super::resolve_params;
use crate::output::{sig12, Sink};
use crate::WavefnArgs;
use std::io::Write;
use super::solve::solve_or_empty;
use tptdirac_core::model::QuantumState;
use tptdirac_core::wavefn::{sample_radial, NormConvention};

pub fn run(args: WavefnArgs) -> u8 {
    match run_inner(args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn run_inner(args: WavefnArgs) -> Result<u8, String> {
    let params = resolve_params(&args.phys)?;
    let n = args.n.ok_or("missing --n")?;
    let kappa = args.kappa.ok_or("missing --kappa")?;
    let state = QuantumState::new(n, kappa, params.limit).map_err(|e| e.to_string())?;
    let grid = args.grid.unwrap_or(4000);
    let window = match (args.emin, args.emax) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        _ => None,
    };

    let energy = match args.energy {
        Some(e) => e,
        None => {
            let set = solve_or_empty(&params, &state, window, grid)?;
            match set.roots.get(args.root_index) {
                Some(root) => root.energy,
                None => {
                    eprintln!(
                        "no root at index {} in window {:?} ({} found)",
                        args.root_index,
                        set.scan_window,
                        set.roots.len()
                    );
                    return Ok(2);
                }
            }
        }
    };

    // interior grid, endpoints strictly inside (0, pi/(2 alpha))
    let rmax = params.r_max();
    let npts = args.points.max(3);
    let r_grid: Vec<f64> = (1..=npts).map(|i| rmax * i as f64 / (npts as f64 + 1.0)).collect();
    let convention = if args.rspace { NormConvention::RSpace } else { NormConvention::ZSpace };
    let sol =
        sample_radial(&params, &state, energy, &r_grid, convention).map_err(|e| e.to_string())?;

    let mut sink = Sink::open(args.output.as_deref()).map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(&super::params_echo(&params));
    out.push('\n');
    out.push_str(&format!(
        "# state={} n={} kappa={} energy={} p={} q={} u={} v={} norm={} norm_method={}\n",
        sol.state.label,
        n,
        kappa,
        sig12(sol.energy),
        sig12(sol.exponents.p),
        sig12(sol.exponents.q),
        sig12(sol.exponents.u),
        sig12(sol.exponents.v),
        sig12(sol.norm),
        sol.norm_method,
    ));
    out.push_str("r,z,F,G,dominant_sq\n");
    for s in &sol.samples {
        let z = {
            let sn = (params.alpha * s.r).sin();
            sn * sn
        };
        let dominant = match params.limit {
            tptdirac_core::SymmetryLimit::PSpin => s.g,
            tptdirac_core::SymmetryLimit::Spin => s.f,
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            sig12(s.r),
            sig12(z),
            sig12(s.f),
            sig12(s.g),
            sig12(dominant * dominant),
        ));
    }
    sink.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
    sink.flush().map_err(|e| e.to_string())?;
    Ok(0)
}
