//! Library side of the command-line front end. The binary in `main.rs`
//! only parses arguments and dispatches here; keeping the logic in a lib
//! makes the comparison machinery reachable from the integration and
//! acceptance test suites.

pub mod commands;
pub mod config;
pub mod fixtures;
pub mod output;
pub mod presets;

use clap::Args;

/// Physical parameters shared by most subcommands. Every flag has a
/// config-file equivalent under the same key (see `--config`).
#[derive(Args, Debug, Clone, Default)]
pub struct PhysArgs {
    /// Symmetry limit: spin or pspin.
    #[arg(long)]
    pub limit: Option<String>,
    /// Mass M in fm^-1.
    #[arg(long = "M")]
    pub m: Option<f64>,
    /// Symmetry constant C_s or C_ps in fm^-1.
    #[arg(long = "C", allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Potential strength V1 in fm^-1.
    #[arg(long = "V1", allow_hyphen_values = true)]
    pub v1: Option<f64>,
    /// Potential strength V2 in fm^-1.
    #[arg(long = "V2", allow_hyphen_values = true)]
    pub v2: Option<f64>,
    /// Range parameter alpha in fm^-1.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Tensor strength A (dimensionless).
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Flat key=value configuration file; explicit flags win.
    #[arg(long)]
    pub config: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    /// Radial quantum number(s), comma separated.
    #[arg(long)]
    pub n: Option<String>,
    /// Spin-orbit quantum number(s), comma separated, nonzero.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Lower edge of the scan window (defaults to the limit-specific window).
    #[arg(long, allow_hyphen_values = true)]
    pub emin: Option<f64>,
    /// Upper edge of the scan window.
    #[arg(long, allow_hyphen_values = true)]
    pub emax: Option<f64>,
    /// Scan grid cells.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Parameter sweep, e.g. `--sweep M=0.1,0.5,1.0` or `--sweep C=-5,-10`
    /// (fields: M, C, A, alpha). Re-solves every state per value.
    #[arg(long, allow_hyphen_values = true)]
    pub sweep: Option<String>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// Which reference table: table1 .. table8.
    #[arg(long)]
    pub preset: Option<String>,
    /// Diff the regenerated values against the printed ones.
    #[arg(long)]
    pub compare: bool,
    /// Scan grid cells per state.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<String>,
    /// Flat key=value configuration file; explicit flags win.
    #[arg(long)]
    pub config: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct WavefnArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    /// Radial quantum number.
    #[arg(long)]
    pub n: Option<u32>,
    /// Spin-orbit quantum number, nonzero.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<i32>,
    /// Energy root to sample; solved on the fly when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub energy: Option<f64>,
    /// Which root to take when several are found (0 = lowest).
    #[arg(long, default_value_t = 0)]
    pub root_index: usize,
    /// Number of interior radial samples.
    #[arg(long, default_value_t = 4001)]
    pub points: usize,
    /// Normalize in r instead of the default z convention.
    #[arg(long)]
    pub rspace: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub emin: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub emax: Option<f64>,
    #[arg(long)]
    pub grid: Option<usize>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct PotentialArgs {
    /// fig1 (alpha = 0.02) or fig2 (alpha = 0.03), both with V1 = 5, V2 = 3.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long = "V1", allow_hyphen_values = true)]
    pub v1: Option<f64>,
    #[arg(long = "V2", allow_hyphen_values = true)]
    pub v2: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Sample range start in fm.
    #[arg(long)]
    pub rmin: Option<f64>,
    /// Sample range end in fm.
    #[arg(long)]
    pub rmax: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub points: usize,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<String>,
    /// Flat key=value configuration file; explicit flags win.
    #[arg(long)]
    pub config: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct AimCheckArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    /// Spin-orbit quantum number(s), comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Highest radial quantum number to check (n runs from 0).
    #[arg(long, default_value_t = 3)]
    pub nmax: u32,
}

