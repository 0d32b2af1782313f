//! Generic Asymptotic Iteration Method engine.
//!
//! The method rewrites a linear second-order equation as
//! y'' = lambda0(x) y' + s0(x) y and iterates
//!
//! ```text
//! lambda_k = lambda_{k-1}' + s_{k-1} + lambda0 lambda_{k-1}
//! s_k      = s_{k-1}' + s0 lambda_{k-1}
//! ```
//!
//! Eigenvalues are the roots of the termination determinant
//! delta_k = lambda_k s_{k-1} - lambda_{k-1} s_k evaluated at a chosen
//! expansion point. The coefficient functions are carried as truncated
//! Taylor series so the repeated differentiation stays exact up to the
//! stored order.

use crate::fp;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from the AIM engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AimError {
    /// The series order cannot support the requested iteration depth;
    /// each iteration consumes one derivative order.
    OrderExhausted { needed: usize, available: usize },
    /// Requested depth exceeds the configured `k_max`.
    DepthExceeded { requested: usize, k_max: usize },
    /// A coefficient series evaluated to a non-finite value at the
    /// expansion point for every probed energy.
    NonFiniteCoefficients,
}

impl fmt::Display for AimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OrderExhausted { needed, available } => write!(
                f,
                "series order exhausted: need order >= {needed}, have {available}"
            ),
            Self::DepthExceeded { requested, k_max } => {
                write!(f, "iteration depth {requested} exceeds k_max {k_max}")
            }
            Self::NonFiniteCoefficients => {
                write!(f, "coefficient series non-finite over the whole scan")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AimError {}

/// Truncated Taylor series about a fixed expansion point.
///
/// `coeffs[i]` is the coefficient of (x - center)^i. All arithmetic is
/// exact truncation: products are Cauchy products cut at the shorter
/// operand's order and differentiation shifts and scales coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTaylor {
    center: f64,
    coeffs: Vec<f64>,
}

impl SeriesTaylor {
    /// Series from raw coefficients; `coeffs[0]` is the value at the center.
    pub fn new(center: f64, coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Self { center, coeffs }
    }

    /// Constant series of the given order.
    pub fn constant(center: f64, value: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Self { center, coeffs }
    }

    /// The identity function x expanded about the center.
    pub fn variable(center: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = center;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Self { center, coeffs }
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    /// Truncation order K (the series carries K+1 coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Value at the expansion point.
    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            center: self.center,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.center, other.center);
        let len = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeffs[i] + other.coeffs[i]).collect();
        Self { center: self.center, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    /// Cauchy product truncated at the shorter operand's order.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.center, other.center);
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![0.0; len];
        for i in 0..len {
            let a = self.coeffs[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..len - i {
                coeffs[i + j] += a * other.coeffs[j];
            }
        }
        Self { center: self.center, coeffs }
    }

    /// Derivative; drops one order. Differentiating a constant-order series
    /// yields the zero constant.
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::constant(self.center, 0.0, 0);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * (i as f64 + 1.0))
            .collect();
        Self { center: self.center, coeffs }
    }

    /// All coefficients finite. NaN-filled series are the masking
    /// convention for invalid parameter regions.
    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Multiplicative inverse as a truncated series; `None` when the value
    /// at the center vanishes.
    pub fn reciprocal(&self) -> Option<Self> {
        let a0 = self.coeffs[0];
        if a0 == 0.0 {
            return None;
        }
        let len = self.coeffs.len();
        let mut coeffs = vec![0.0; len];
        coeffs[0] = 1.0 / a0;
        for i in 1..len {
            let mut acc = 0.0;
            for j in 1..=i {
                acc += self.coeffs[j] * coeffs[i - j];
            }
            coeffs[i] = -acc / a0;
        }
        Some(Self { center: self.center, coeffs })
    }

}

/// An eigenvalue returned by the scan, with its depth-consistency flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AimRoot {
    pub energy: f64,
    /// Roots at depth k and k+1 agreed within ten times the refinement
    /// tolerance.
    pub converged: bool,
}

/// An AIM problem: coefficient-series factories over the eigenvalue
/// parameter, the expansion point, and the iteration budget.
pub struct AimProblem<L, S>
where
    L: Fn(f64) -> SeriesTaylor,
    S: Fn(f64) -> SeriesTaylor,
{
    pub lambda0: L,
    pub s0: S,
    pub x0: f64,
    pub k_max: usize,
}

impl<L, S> AimProblem<L, S>
where
    L: Fn(f64) -> SeriesTaylor,
    S: Fn(f64) -> SeriesTaylor,
{
    pub fn new(lambda0: L, s0: S, x0: f64, k_max: usize) -> Self {
        Self { lambda0, s0, x0, k_max }
    }

    /// k applications of the recurrence, returning (lambda_k, s_k).
    pub fn iterate(&self, e: f64, k: usize) -> Result<(SeriesTaylor, SeriesTaylor), AimError> {
        if k > self.k_max {
            return Err(AimError::DepthExceeded { requested: k, k_max: self.k_max });
        }
        let lambda0 = (self.lambda0)(e);
        let s0 = (self.s0)(e);
        let available = lambda0.order().min(s0.order());
        let needed = 2 * k + 2;
        if available < needed {
            return Err(AimError::OrderExhausted { needed, available });
        }
        let mut lam = lambda0.clone();
        let mut s = s0.clone();
        for _ in 0..k {
            let lam_next = lam.differentiate().add(&s).add(&lambda0.mul(&lam));
            let s_next = s.differentiate().add(&s0.mul(&lam));
            lam = lam_next;
            s = s_next;
        }
        Ok((lam, s))
    }

    /// Termination determinant delta_k at the expansion point.
    pub fn delta(&self, e: f64, k: usize) -> Result<f64, AimError> {
        assert!(k >= 1, "delta_k needs k >= 1");
        let (lam_prev, s_prev) = self.iterate(e, k - 1)?;
        let lambda0 = (self.lambda0)(e);
        let s0 = (self.s0)(e);
        let lam_k = lam_prev.differentiate().add(&s_prev).add(&lambda0.mul(&lam_prev));
        let s_k = s_prev.differentiate().add(&s0.mul(&lam_prev));
        Ok(lam_k.value() * s_prev.value() - lam_prev.value() * s_k.value())
    }

    /// Scan delta_k for sign changes over `window`, refine each bracket by
    /// bisection to `tol`, and check depth consistency against k+1.
    ///
    /// Cells where the coefficients are non-finite (the caller's way of
    /// masking invalid parameter regions) are skipped. An empty result is a
    /// valid outcome, not an error.
    pub fn eigenvalues(
        &self,
        window: (f64, f64),
        grid: usize,
        k: usize,
        tol: f64,
    ) -> Result<Vec<AimRoot>, AimError> {
        assert!(grid >= 16, "scan grid must have at least 16 cells");
        let (lo, hi) = window;
        assert!(hi > lo && lo.is_finite() && hi.is_finite());

        let mut es = Vec::with_capacity(grid + 1);
        let mut ds = Vec::with_capacity(grid + 1);
        let mut max_abs: f64 = 0.0;
        for i in 0..=grid {
            let e = lo + (hi - lo) * i as f64 / grid as f64;
            let d = self.delta(e, k)?;
            if d.is_finite() {
                max_abs = max_abs.max(fp::abs(d));
            }
            es.push(e);
            ds.push(d);
        }
        if max_abs == 0.0 {
            return Ok(Vec::new());
        }
        // normalize before sign detection so factorial growth in k cannot
        // overflow comparisons
        for d in ds.iter_mut() {
            *d /= max_abs;
        }

        let mut roots = Vec::new();
        for i in 0..grid {
            let (d0, d1) = (ds[i], ds[i + 1]);
            if !d0.is_finite() || !d1.is_finite() || d0 * d1 > 0.0 {
                continue;
            }
            if d0 == 0.0 {
                continue; // counted at the previous cell or an exact grid hit
            }
            let root_k = self.bisect(es[i], es[i + 1], k, tol)?;
            // depth consistency: re-refine at k+1 inside a widened bracket
            let pad = (es[i + 1] - es[i]).max(tol * 16.0);
            let converged = match self.refine_near(root_k, pad, k + 1, tol)? {
                Some(root_k1) => fp::abs(root_k1 - root_k) <= 10.0 * tol,
                None => false,
            };
            roots.push(AimRoot { energy: root_k, converged });
        }
        roots.sort_by(|a, b| a.energy.partial_cmp(&b.energy).unwrap());
        Ok(roots)
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, k: usize, tol: f64) -> Result<f64, AimError> {
        let mut flo = self.delta(lo, k)?;
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let fmid = self.delta(mid, k)?;
            if !fmid.is_finite() {
                // shrink toward the finite side
                hi = mid;
                continue;
            }
            if fmid == 0.0 {
                return Ok(mid);
            }
            if flo * fmid < 0.0 {
                hi = mid;
            } else {
                lo = mid;
                flo = fmid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    fn refine_near(
        &self,
        center: f64,
        pad: f64,
        k: usize,
        tol: f64,
    ) -> Result<Option<f64>, AimError> {
        let lo = center - pad;
        let hi = center + pad;
        let steps = 32;
        let mut prev_e = lo;
        let mut prev_d = self.delta(lo, k)?;
        for i in 1..=steps {
            let e = lo + (hi - lo) * i as f64 / steps as f64;
            let d = self.delta(e, k)?;
            if prev_d.is_finite() && d.is_finite() && prev_d * d <= 0.0 && prev_d != 0.0 {
                return Ok(Some(self.bisect(prev_e, e, k, tol)?));
            }
            prev_e = e;
            prev_d = d;
        }
        Ok(None)
    }
}
