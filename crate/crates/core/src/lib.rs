//! Relativistic bound states of the trigonometric Poschl-Teller (tPT) potential
//! with a Coulomb-like tensor term, under spin and pseudo-spin symmetry.
//!
//! The crate is organised as four layers:
//!
//! * [`specfun`]: log-gamma, Pochhammer symbols, terminating hypergeometric
//!   series, Jacobi polynomials and a Gauss-Jacobi quadrature rule.
//! * [`aim`]: a generic Asymptotic Iteration Method engine over truncated
//!   Taylor-series arithmetic, with the delta_k quantization condition and
//!   eigenvalue root extraction.
//! * [`model`]: the physical model itself, i.e. potentials, symmetry limits,
//!   kappa bookkeeping, the closed-form quantization residual, energy root
//!   scans and the non-relativistic limit.
//! * [`wavefn`]: closed-form two-component spinor wavefunctions, their
//!   normalization and the partner component recovered through the
//!   first-order relation.
//!
//! The crate is `no_std` compatible (`default-features = false`); it only
//! needs `alloc`. All floating-point transcendentals go through `libm` so the
//! same code paths run with and without `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod aim;
pub mod model;
pub mod specfun;
pub mod wavefn;

pub use aim::{AimError, AimProblem, AimRoot, SeriesTaylor};
pub use model::{
    DerivedParams, EnergyRoot, EnergyRootSet, ModelError, ModelParams, QuantumState,
    SymmetryLimit,
};
pub use specfun::{JacobiParams, SpecFunError};
pub use wavefn::{Exponents, NormMethod, RadialSample, SpinorSolution, WavefnError};

/// Thin wrappers over `libm` so the core stays `no_std` clean.
pub(crate) mod fp {
    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
    #[inline]
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline]
    pub fn powf(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }
    #[inline]
    pub fn powi(x: f64, mut n: i32) -> f64 {
        // exponentiation by squaring, exact for the small integer powers used here
        let mut base = if n < 0 { 1.0 / x } else { x };
        if n < 0 {
            n = -n;
        }
        let mut acc = 1.0;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base *= base;
            n >>= 1;
        }
        acc
    }
}

/// Neumaier-compensated accumulator. The closed-form sums in this crate are
/// alternating with large cancellation, so plain f64 accumulation loses
/// digits the reference data actually carries.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if fp::abs(self.sum) >= fp::abs(value) {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
