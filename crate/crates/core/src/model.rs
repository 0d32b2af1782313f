//! Physical model: the trigonometric Poschl-Teller potential, spin and
//! pseudo-spin symmetry limits, kappa bookkeeping, derived parameters, the
//! closed-form quantization residual, energy root scans and the
//! non-relativistic limit.
//!
//! Energies and potential strengths are in fm^-1 throughout.

use crate::aim::{AimProblem, SeriesTaylor};
use crate::fp;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors from model construction and evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelError {
    /// Parameter set violates alpha > 0 or M > 0.
    InvalidParams(&'static str),
    /// kappa = 0 does not label a physical state.
    ZeroKappa,
    /// Evaluation at a pole of the potential.
    Singularity,
    /// A closed-form radicand is negative where the formula requires it
    /// non-negative.
    NegativeRadicand(&'static str),
    /// The scan window is empty after radicand-validity masking.
    DegenerateWindow,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidParams(what) => write!(f, "invalid model parameters: {what}"),
            Self::ZeroKappa => write!(f, "kappa must be a nonzero integer"),
            Self::Singularity => write!(f, "evaluation at a potential pole"),
            Self::NegativeRadicand(what) => write!(f, "negative radicand: {what}"),
            Self::DegenerateWindow => {
                write!(f, "scan window empty after radicand-validity masking")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ModelError {}

/// Which symmetry limit the constant C refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryLimit {
    /// Difference potential constant: C is C_s, the upper component F is
    /// dominant.
    Spin,
    /// Sum potential constant: C is C_ps, the lower component G is dominant.
    PSpin,
}

impl fmt::Display for SymmetryLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Spin => write!(f, "spin"),
            Self::PSpin => write!(f, "pspin"),
        }
    }
}

/// Physical parameters of one model configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Mass M (fm^-1).
    pub mass: f64,
    /// Potential-well strength V1 (fm^-1).
    pub v1: f64,
    /// Potential-well strength V2 (fm^-1).
    pub v2: f64,
    /// Range parameter alpha (fm^-1), > 0.
    pub alpha: f64,
    /// Dimensionless tensor strength A.
    pub tensor: f64,
    /// Active symmetry limit.
    pub limit: SymmetryLimit,
    /// C_s (spin) or C_ps (pspin), in fm^-1.
    pub c: f64,
}

impl ModelParams {
    pub fn new(
        mass: f64,
        v1: f64,
        v2: f64,
        alpha: f64,
        tensor: f64,
        limit: SymmetryLimit,
        c: f64,
    ) -> Result<Self, ModelError> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(ModelError::InvalidParams("alpha must be positive"));
        }
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(ModelError::InvalidParams("mass must be positive"));
        }
        Ok(Self { mass, v1, v2, alpha, tensor, limit, c })
    }

    /// Upper end of the physical radial interval (0, pi / (2 alpha)).
    pub fn r_max(&self) -> f64 {
        core::f64::consts::FRAC_PI_2 / self.alpha
    }
}

/// Spectroscopic letter for orbital angular momentum l.
fn orbital_letter(ell: u32) -> char {
    const LETTERS: [char; 12] = ['s', 'p', 'd', 'f', 'g', 'h', 'i', 'k', 'l', 'm', 'n', 'o'];
    LETTERS.get(ell as usize).copied().unwrap_or('?')
}

/// Quantum numbers derived from kappa alone.
///
/// j = |kappa| - 1/2 in both limits; the mapping of l and l-tilde follows
/// the tabulated convention:
/// kappa < 0: l = -kappa - 1, l-tilde = -kappa;
/// kappa > 0: l = kappa, l-tilde = kappa - 1.
pub fn kappa_mapping(kappa: i32) -> Result<(u32, u32, u32), ModelError> {
    if kappa == 0 {
        return Err(ModelError::ZeroKappa);
    }
    if kappa.unsigned_abs() > 10_000 {
        return Err(ModelError::InvalidParams("kappa out of the physical range"));
    }
    let (ell, ell_tilde) = if kappa < 0 {
        ((-kappa - 1) as u32, (-kappa) as u32)
    } else {
        (kappa as u32, (kappa - 1) as u32)
    };
    let j2 = 2 * kappa.unsigned_abs() - 1;
    Ok((ell, ell_tilde, j2))
}

/// A bound-state label (n, kappa) with its derived quantum numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumState {
    /// Radial quantum number, >= 0.
    pub n: u32,
    /// Spin-orbit quantum number, nonzero.
    pub kappa: i32,
    /// Orbital angular momentum of the upper component.
    pub ell: u32,
    /// Pseudo-orbital angular momentum of the lower component.
    pub ell_tilde: u32,
    /// Twice the total angular momentum (j is half-integer).
    pub j2: u32,
    /// Spectroscopic label in the tabulated convention, e.g. "1s1/2".
    pub label: String,
}

impl QuantumState {
    pub fn new(n: u32, kappa: i32, limit: SymmetryLimit) -> Result<Self, ModelError> {
        let (ell, ell_tilde, j2) = kappa_mapping(kappa)?;
        // Labels print the upper component's (l, j). Pseudo-spin rows with
        // kappa > 0 are conventionally labelled with n - 1.
        let label_n = match limit {
            SymmetryLimit::PSpin if kappa > 0 => n.saturating_sub(1),
            _ => n,
        };
        let label = format!("{}{}{}/2", label_n, orbital_letter(ell), j2);
        Ok(Self { n, kappa, ell, ell_tilde, j2, label })
    }
}

/// The convenience parameters that appear in the quantization condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub gamma1: f64,
    pub gamma2: f64,
    /// Signed square of the binding combination. Bound states have it
    /// negative; no square root of it is ever taken.
    pub beta_sq: f64,
    /// Centrifugal strength (kappa + A)(kappa + A -+ 1) per the limit.
    pub delta: f64,
}

/// Evaluate the derived parameters for the active limit at energy E.
pub fn derived_params(params: &ModelParams, e: f64, kappa: i32) -> DerivedParams {
    let ka = kappa as f64 + params.tensor;
    match params.limit {
        SymmetryLimit::PSpin => {
            let factor = e - params.mass - params.c;
            DerivedParams {
                gamma1: factor * params.v1,
                gamma2: factor * params.v2,
                beta_sq: (params.mass + e) * (params.mass - e + params.c),
                delta: ka * (ka - 1.0),
            }
        }
        SymmetryLimit::Spin => {
            let factor = params.mass + e - params.c;
            DerivedParams {
                gamma1: factor * params.v1,
                gamma2: factor * params.v2,
                beta_sq: (params.mass - e) * (params.mass + e - params.c),
                delta: ka * (ka + 1.0),
            }
        }
    }
}

/// The trigonometric Poschl-Teller potential
/// V(r) = V1 / sin^2(alpha r) + V2 / cos^2(alpha r).
pub fn potential_tpt(r: f64, params: &ModelParams) -> Result<f64, ModelError> {
    let s = fp::sin(params.alpha * r);
    let c = fp::cos(params.alpha * r);
    if s == 0.0 || c == 0.0 {
        return Err(ModelError::Singularity);
    }
    Ok(params.v1 / (s * s) + params.v2 / (c * c))
}

/// Relative error of the centrifugal replacement
/// 1/r^2 ~ alpha^2 / sin^2(alpha r), i.e. |alpha^2/sin^2 - 1/r^2| r^2.
pub fn centrifugal_approx_error(alpha: f64, r: f64) -> f64 {
    let x = alpha * r;
    let s = fp::sin(x);
    fp::abs(x * x / (s * s) - 1.0)
}

/// A sample of the quantization residual at one energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    /// f(E); meaningful only when `valid` holds.
    pub value: f64,
    /// All radicands of the closed form are non-negative here.
    pub valid: bool,
}

/// Closed-form quantization residual
/// f(E) = beta^2 + 4 alpha^2 [n + 1/2 + (sqrt(1 + 4 gamma2/alpha^2)
///         + sqrt(1 + 4 delta + 4 gamma1/alpha^2)) / 4]^2.
///
/// Zeros of f over the valid region are the bound-state energies. Validity
/// is reported, never assumed; scans mask invalid cells instead of failing.
pub fn quantization_residual(params: &ModelParams, state: &QuantumState, e: f64) -> Residual {
    let d = derived_params(params, e, state.kappa);
    let a2 = params.alpha * params.alpha;
    let rad_q = 1.0 + 4.0 * d.gamma2 / a2;
    let rad_eta = 1.0 + 4.0 * d.delta + 4.0 * d.gamma1 / a2;
    if rad_q < 0.0 || rad_eta < 0.0 {
        return Residual { value: f64::NAN, valid: false };
    }
    let bracket = state.n as f64 + 0.5 + 0.25 * (fp::sqrt(rad_q) + fp::sqrt(rad_eta));
    Residual { value: d.beta_sq + 4.0 * a2 * bracket * bracket, valid: true }
}

/// One bound-state root of the quantization residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyRoot {
    pub energy: f64,
    /// Residual re-evaluated at the refined root.
    pub residual: f64,
    pub valid_radicands: bool,
}

/// All bracketed roots in a scan window.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyRootSet {
    /// Ascending roots.
    pub roots: Vec<EnergyRoot>,
    pub scan_window: (f64, f64),
    pub grid_points: usize,
}

/// Default scan window for the limit. Chosen to cover the bound-state bands
/// on both sides of the spectral gap with one grid cell of margin.
pub fn default_window(params: &ModelParams) -> (f64, f64) {
    match params.limit {
        SymmetryLimit::PSpin => (-params.mass - fp::abs(params.c) - 1.0, params.mass + 1.0),
        SymmetryLimit::Spin => (-params.mass - 1.0, params.mass + fp::abs(params.c) + 1.0),
    }
}

/// Bisection refinement target in E.
const ROOT_TOL: f64 = 1e-12;

/// Scan the quantization residual over `window`, keep valid-radicand cells,
/// bracket sign changes and bisect each to 1e-12 in E.
///
/// An empty root set is a valid outcome. `DegenerateWindow` signals that no
/// grid cell survived validity masking at all.
pub fn solve_energies(
    params: &ModelParams,
    state: &QuantumState,
    window: Option<(f64, f64)>,
    grid: usize,
) -> Result<EnergyRootSet, ModelError> {
    let (lo, hi) = window.unwrap_or_else(|| default_window(params));
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(ModelError::InvalidParams("scan window must be finite and nonempty"));
    }
    let grid = grid.max(16);

    let f = |e: f64| quantization_residual(params, state, e);

    let mut any_valid = false;
    let mut roots: Vec<EnergyRoot> = Vec::new();
    let step = (hi - lo) / grid as f64;
    let mut prev_e = lo;
    let mut prev = f(lo);
    any_valid |= prev.valid;
    for i in 1..=grid {
        let e = lo + step * i as f64;
        let cur = f(e);
        any_valid |= cur.valid;
        if prev.valid && cur.valid && prev.value != 0.0 && prev.value * cur.value <= 0.0 {
            let root = bisect_residual(&f, prev_e, e);
            let res = f(root);
            roots.push(EnergyRoot {
                energy: root,
                residual: res.value,
                valid_radicands: res.valid,
            });
        }
        prev_e = e;
        prev = cur;
    }
    if !any_valid {
        return Err(ModelError::DegenerateWindow);
    }
    roots.sort_by(|a, b| a.energy.partial_cmp(&b.energy).unwrap());
    roots.dedup_by(|a, b| fp::abs(a.energy - b.energy) <= 4.0 * ROOT_TOL);
    Ok(EnergyRootSet { roots, scan_window: (lo, hi), grid_points: grid })
}

fn bisect_residual<F: Fn(f64) -> Residual>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo).value;
    for _ in 0..200 {
        if hi - lo <= ROOT_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid).value;
        if !fmid.is_finite() {
            hi = mid;
            continue;
        }
        if fmid == 0.0 {
            return mid;
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    0.5 * (lo + hi)
}

/// Default expansion point for AIM in the z variable, the midpoint of
/// (0, 1), far from both singular endpoints of the reduced equation.
pub const AIM_Z0: f64 = 0.5;
/// Default series order; exact termination happens at depth n + 1 so this
/// leaves generous headroom for the generic path.
pub const AIM_ORDER: usize = 36;
/// Default iteration budget.
pub const AIM_KMAX: usize = 15;

/// Coefficient series of the reduced second-order equation in z = sin^2(ar)
/// at energy `e`, expanded about `z0`.
///
/// Cells where the endpoint-exponent radicands go negative return NaN-filled
/// constants, which the scanning code treats as masked.
pub fn aim_coefficients(
    params: &ModelParams,
    kappa: i32,
    e: f64,
    z0: f64,
    order: usize,
) -> (SeriesTaylor, SeriesTaylor) {
    let d = derived_params(params, e, kappa);
    let a2 = params.alpha * params.alpha;
    let rad_p = 1.0 + 4.0 * (d.delta + d.gamma1 / a2);
    let rad_q = 1.0 + 4.0 * d.gamma2 / a2;
    if rad_p < 0.0 || rad_q < 0.0 || !rad_p.is_finite() || !rad_q.is_finite() {
        return (
            SeriesTaylor::constant(z0, f64::NAN, order),
            SeriesTaylor::constant(z0, f64::NAN, order),
        );
    }
    let p = 0.25 + 0.25 * fp::sqrt(rad_p);
    let q = 0.25 + 0.25 * fp::sqrt(rad_q);
    let z = SeriesTaylor::variable(z0, order);
    let one = SeriesTaylor::constant(z0, 1.0, order);
    let inv = z
        .mul(&one.sub(&z))
        .reciprocal()
        .expect("z0 must avoid the singular endpoints 0 and 1");
    // lambda0 = [4 z (p+q+1/2) - (4p+1)] / (2 z (1-z))
    let numerator = z
        .scale(4.0 * (p + q + 0.5))
        .add(&SeriesTaylor::constant(z0, -(4.0 * p + 1.0), order));
    let lambda0 = numerator.mul(&inv).scale(0.5);
    // s0 = [beta^2/alpha^2 + 4 (p+q)^2] / (4 z (1-z))
    let s0 = inv.scale(0.25 * (d.beta_sq / a2 + 4.0 * (p + q) * (p + q)));
    (lambda0, s0)
}

/// AIM problem over the physical energy for one kappa channel.
pub fn tpt_aim_problem(
    params: ModelParams,
    kappa: i32,
    z0: f64,
    order: usize,
    k_max: usize,
) -> AimProblem<impl Fn(f64) -> SeriesTaylor, impl Fn(f64) -> SeriesTaylor> {
    let for_lambda = params;
    let for_s = params;
    AimProblem::new(
        move |e| aim_coefficients(&for_lambda, kappa, e, z0, order).0,
        move |e| aim_coefficients(&for_s, kappa, e, z0, order).1,
        z0,
        k_max,
    )
}

/// Non-relativistic closed-form energy
/// E = (alpha^2 / 8 mu) [2 + sqrt(1 + 8 mu V2 / alpha^2)
///      + sqrt((1 + 2 l)^2 + 8 mu V1 / alpha^2) + 4 n]^2.
pub fn nonrel_energy(
    n: u32,
    ell: u32,
    mu: f64,
    alpha: f64,
    v1: f64,
    v2: f64,
) -> Result<f64, ModelError> {
    if !(mu > 0.0) || !(alpha > 0.0) {
        return Err(ModelError::InvalidParams("mu and alpha must be positive"));
    }
    let a2 = alpha * alpha;
    let rad2 = 1.0 + 8.0 * mu * v2 / a2;
    let l1 = 1.0 + 2.0 * ell as f64;
    let rad1 = l1 * l1 + 8.0 * mu * v1 / a2;
    if rad2 < 0.0 || rad1 < 0.0 {
        return Err(ModelError::NegativeRadicand("non-relativistic closed form"));
    }
    let bracket = 2.0 + fp::sqrt(rad2) + fp::sqrt(rad1) + 4.0 * n as f64;
    Ok(a2 / (8.0 * mu) * bracket * bracket)
}
