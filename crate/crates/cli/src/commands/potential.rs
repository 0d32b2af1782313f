//! `potential`: CSV profile of the potential over a pole-free range.

use crate::config::ConfigFile;
use crate::output::{sig12, Sink};
use crate::presets::potential_preset;
use crate::PotentialArgs;
use std::io::Write;
use tptdirac_core::model::potential_tpt;
use tptdirac_core::{ModelParams, SymmetryLimit};

pub fn run(args: PotentialArgs) -> u8 {
    match run_inner(args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

/// Distance from alpha*r to the nearest pole of the potential (multiples
/// of pi/2).
fn pole_distance(alpha: f64, r: f64) -> f64 {
    let x = alpha * r;
    let half_pi = core::f64::consts::FRAC_PI_2;
    let k = (x / half_pi).round();
    (x - k * half_pi).abs()
}

fn run_inner(args: PotentialArgs) -> Result<u8, String> {
    let cfg = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let (v1, v2, alpha) = if let Some(name) =
        args.preset.clone().or_else(|| cfg.get_str("preset").map(str::to_string))
    {
        potential_preset(&name).ok_or(format!("unknown potential preset '{name}'"))?
    } else {
        let v1 = args.v1.or(cfg.get_f64("V1")?).ok_or("missing --V1 or --preset")?;
        let v2 = args.v2.or(cfg.get_f64("V2")?).ok_or("missing --V2 or --preset")?;
        let alpha = args.alpha.or(cfg.get_f64("alpha")?).ok_or("missing --alpha or --preset")?;
        (v1, v2, alpha)
    };
    let params = ModelParams::new(1.0, v1, v2, alpha, 0.0, SymmetryLimit::Spin, 0.0)
        .map_err(|e| e.to_string())?;

    // default range: the interior of the first well, away from both poles
    let rmax_default = core::f64::consts::FRAC_PI_2 / alpha;
    let rmin = args.rmin.or(cfg.get_f64("rmin")?).unwrap_or(rmax_default * 0.02);
    let rmax = args.rmax.or(cfg.get_f64("rmax")?).unwrap_or(rmax_default * 0.98);
    if !(rmax > rmin) {
        return Err("rmax must exceed rmin".into());
    }
    let npts = args.points.max(2);

    // refuse ranges that graze a pole
    for i in 0..npts {
        let r = rmin + (rmax - rmin) * i as f64 / (npts as f64 - 1.0);
        if pole_distance(alpha, r) < 1e-9 {
            eprintln!("sample range touches a potential pole near r = {r}");
            return Ok(1);
        }
    }

    let mut sink = Sink::open(args.output.as_deref()).map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(&format!("# V1={} V2={} alpha={}\n", sig12(v1), sig12(v2), sig12(alpha)));
    out.push_str("r,V\n");
    for i in 0..npts {
        let r = rmin + (rmax - rmin) * i as f64 / (npts as f64 - 1.0);
        let v = potential_tpt(r, &params).map_err(|e| e.to_string())?;
        out.push_str(&format!("{},{}\n", sig12(r), sig12(v)));
    }
    sink.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
    sink.flush().map_err(|e| e.to_string())?;
    Ok(0)
}
