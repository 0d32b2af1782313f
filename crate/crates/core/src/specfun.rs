//! Self-contained special-function kernel: log-gamma, Pochhammer symbols,
//! terminating hypergeometric series, Jacobi polynomials with derivatives,
//! and a Gauss-Jacobi quadrature rule built on top of them.
//!
//! Everything here is pure and reentrant. Sums that can cancel accumulate
//! through a compensated accumulator.

use crate::{fp, CompensatedSum};
use alloc::vec::Vec;
use core::fmt;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecFunError {
    /// Argument outside the function's domain (e.g. `ln_gamma` at x <= 0).
    Domain(&'static str),
    /// A lower hypergeometric parameter hits a non-positive integer inside
    /// the summation range, so a term divides by zero.
    ParameterPole(&'static str),
    /// Jacobi indices violate n >= 0, u > -1, v > -1.
    InvalidJacobi(&'static str),
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(what) => write!(f, "domain error: {what}"),
            Self::ParameterPole(what) => write!(f, "lower-parameter pole: {what}"),
            Self::InvalidJacobi(what) => write!(f, "invalid Jacobi parameters: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SpecFunError {}

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const LN_SQRT_TWO_PI: f64 = 0.9189385332046727417803297;
const PI: f64 = core::f64::consts::PI;

/// Natural log of the gamma function for x > 0.
///
/// Relative error stays below 1e-13 on [1e-3, 1e4], which is the range the
/// normalization integrals need.
pub fn ln_gamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::Domain("ln_gamma requires x > 0"));
    }
    if x < 0.5 {
        // ln G(x) = ln(pi / sin(pi x)) - ln G(1 - x); both arguments positive here
        return Ok(fp::ln(PI / fp::sin(PI * x)) - ln_gamma_lanczos(1.0 - x));
    }
    Ok(ln_gamma_lanczos(x))
}

fn ln_gamma_lanczos(x: f64) -> f64 {
    let mut acc = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G - 0.5;
    LN_SQRT_TWO_PI + (x - 0.5) * fp::ln(t) - t + fp::ln(acc)
}

/// Rising factorial (sigma)_n = sigma (sigma+1) ... (sigma+n-1).
///
/// Computed by direct product so negative and zero factors pass through
/// exactly; the empty product is 1.
pub fn pochhammer(sigma: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 0..n {
        acc *= sigma + k as f64;
    }
    acc
}

/// f64 factorial by direct product.
pub fn factorial(n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

/// Generalized binomial coefficient C(a, k) for real a and integer k,
/// defined as pochhammer(a-k+1, k)/k! for k >= 0 and 0 for k < 0.
///
/// The k < 0 convention truncates the finite Jacobi sums at m = n.
pub fn binomial_general(a: f64, k: i64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let k = k as u32;
    pochhammer(a - k as f64 + 1.0, k) / factorial(k)
}

fn is_nonpositive_integer_within(c: f64, range: u32) -> bool {
    // true when c is 0, -1, ..., -(range-1) so that c + k vanishes for some k < range
    if c > 0.0 || c < -((range as f64) - 1.0) - 1e-9 {
        return false;
    }
    let r = libm::round(c);
    fp::abs(c - r) < 1e-12
}

/// Terminating Gauss series 2F1(-n, b; c; z) summed term by term.
pub fn hyp2f1_terminating(n: u32, b: f64, c: f64, z: f64) -> Result<f64, SpecFunError> {
    if is_nonpositive_integer_within(c, n) {
        return Err(SpecFunError::ParameterPole("2F1 lower parameter c"));
    }
    let mut sum = CompensatedSum::new();
    let mut term = 1.0;
    sum.add(term);
    for k in 0..n {
        let kf = k as f64;
        term *= (-(n as f64) + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum.add(term);
    }
    Ok(sum.value())
}

/// Terminating 3F2 at unit argument with three lower parameters,
/// 3F2(-n, a2, a3; b1, b2, b3; 1).
///
/// The three-lower-parameter signature mirrors the closed-form normalization
/// sum this crate evaluates; a conventional 3F2 carries only two.
pub fn hyp3f2_unit_terminating(
    n: u32,
    a2: f64,
    a3: f64,
    b1: f64,
    b2: f64,
    b3: f64,
) -> Result<f64, SpecFunError> {
    for (b, what) in [(b1, "3F2 lower parameter b1"), (b2, "3F2 lower parameter b2"), (b3, "3F2 lower parameter b3")] {
        if is_nonpositive_integer_within(b, n) {
            return Err(SpecFunError::ParameterPole(what));
        }
    }
    let mut sum = CompensatedSum::new();
    let mut term = 1.0;
    sum.add(term);
    for k in 0..n {
        let kf = k as f64;
        term *= (-(n as f64) + kf) * (a2 + kf) * (a3 + kf)
            / ((b1 + kf) * (b2 + kf) * (b3 + kf) * (kf + 1.0));
        sum.add(term);
    }
    Ok(sum.value())
}

/// Degree and indices of a Jacobi polynomial P_n^(u,v).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub n: u32,
    pub u: f64,
    pub v: f64,
}

impl JacobiParams {
    /// Indices must satisfy u > -1 and v > -1 so the weight is integrable.
    pub fn new(n: u32, u: f64, v: f64) -> Result<Self, SpecFunError> {
        if !(u > -1.0) || !u.is_finite() {
            return Err(SpecFunError::InvalidJacobi("u must be finite and > -1"));
        }
        if !(v > -1.0) || !v.is_finite() {
            return Err(SpecFunError::InvalidJacobi("v must be finite and > -1"));
        }
        Ok(Self { n, u, v })
    }
}

/// P_n^(u,v)(x) by the three-term recurrence in the degree.
pub fn jacobi_eval(params: JacobiParams, x: f64) -> f64 {
    let JacobiParams { n, u, v } = params;
    if n == 0 {
        return 1.0;
    }
    let mut pm1 = 1.0;
    let mut p = 0.5 * ((u - v) + (u + v + 2.0) * x);
    for k in 2..=n {
        let kf = k as f64;
        let a = 2.0 * kf * (kf + u + v) * (2.0 * kf + u + v - 2.0);
        let b = (2.0 * kf + u + v - 1.0)
            * ((2.0 * kf + u + v) * (2.0 * kf + u + v - 2.0) * x + u * u - v * v);
        let c = 2.0 * (kf + u - 1.0) * (kf + v - 1.0) * (2.0 * kf + u + v);
        let next = (b * p - c * pm1) / a;
        pm1 = p;
        p = next;
    }
    p
}

/// P_n^(u,v)(x) evaluated by the explicit double-binomial sum
/// 2^-n sum_m C(n+u, m) C(n+v, n-m) (x-1)^(n-m) (1+x)^m.
///
/// Serves as the independent route against `jacobi_eval`.
pub fn jacobi_sum(params: JacobiParams, x: f64) -> f64 {
    let JacobiParams { n, u, v } = params;
    let mut sum = CompensatedSum::new();
    for m in 0..=n {
        let c1 = binomial_general(n as f64 + u, m as i64);
        let c2 = binomial_general(n as f64 + v, (n - m) as i64);
        let term = c1 * c2 * fp::powi(x - 1.0, (n - m) as i32) * fp::powi(1.0 + x, m as i32);
        sum.add(term);
    }
    sum.value() * fp::powi(0.5, n as i32)
}

/// d/dx P_n^(u,v)(x) = (n+u+v+1)/2 P_(n-1)^(u+1,v+1)(x); zero for n = 0.
pub fn jacobi_derivative(params: JacobiParams, x: f64) -> f64 {
    let JacobiParams { n, u, v } = params;
    if n == 0 {
        return 0.0;
    }
    let shifted = JacobiParams { n: n - 1, u: u + 1.0, v: v + 1.0 };
    0.5 * (n as f64 + u + v + 1.0) * jacobi_eval(shifted, x)
}

/// Nodes and weights of the N-point Gauss-Jacobi rule for the weight
/// (1-x)^alpha (1+x)^beta on [-1, 1].
///
/// Nodes are the roots of P_N^(alpha,beta), found by bracketing on a fine
/// angular grid and polishing with bisection plus Newton steps. The rule is
/// exact for polynomials of degree <= 2N-1.
pub fn gauss_jacobi_rule(
    npts: usize,
    alpha: f64,
    beta: f64,
) -> Result<Vec<(f64, f64)>, SpecFunError> {
    if npts == 0 {
        return Err(SpecFunError::InvalidJacobi("rule needs at least one node"));
    }
    let params = JacobiParams::new(npts as u32, alpha, beta)?;

    // Bracket the npts real roots by sampling at Chebyshev angles.
    let samples = 8 * npts + 16;
    let mut brackets: Vec<(f64, f64)> = Vec::with_capacity(npts);
    let mut prev_x = -1.0 + 1e-14;
    let mut prev_f = jacobi_eval(params, prev_x);
    for i in 1..=samples {
        let theta = PI * (1.0 - i as f64 / (samples as f64 + 1.0));
        let x = fp::cos(theta);
        let f = jacobi_eval(params, x);
        if prev_f == 0.0 {
            brackets.push((prev_x, prev_x));
        } else if prev_f * f < 0.0 {
            brackets.push((prev_x, x));
        }
        prev_x = x;
        prev_f = f;
    }
    if brackets.len() != npts {
        return Err(SpecFunError::InvalidJacobi("failed to bracket all quadrature nodes"));
    }

    // ln of the classical weight prefactor
    // 2^(a+b+1) G(n+a+1) G(n+b+1) / (n! G(n+a+b+1))
    let nf = npts as f64;
    let ln_prefactor = (alpha + beta + 1.0) * core::f64::consts::LN_2
        + ln_gamma(nf + alpha + 1.0)?
        + ln_gamma(nf + beta + 1.0)?
        - ln_gamma(nf + 1.0)?
        - ln_gamma(nf + alpha + beta + 1.0)?;
    let prefactor = fp::exp(ln_prefactor);

    let mut rule = Vec::with_capacity(npts);
    for &(mut lo, mut hi) in &brackets {
        let mut flo = jacobi_eval(params, lo);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            let fmid = jacobi_eval(params, mid);
            if fmid == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if flo * fmid < 0.0 {
                hi = mid;
            } else {
                lo = mid;
                flo = fmid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..8 {
            let f = jacobi_eval(params, x);
            let d = jacobi_derivative(params, x);
            if d == 0.0 {
                break;
            }
            let step = f / d;
            if fp::abs(step) >= 1e-3 {
                break;
            }
            x -= step;
            if fp::abs(step) < 1e-16 * (1.0 + fp::abs(x)) {
                break;
            }
        }
        let d = jacobi_derivative(params, x);
        let w = prefactor / ((1.0 - x * x) * d * d);
        rule.push((x, w));
    }
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact rational arithmetic over i128, the oracle for the terminating
    /// hypergeometric sums.
    #[derive(Clone, Copy, Debug, PartialEq)]
    struct Rat {
        num: i128,
        den: i128,
    }

    impl Rat {
        fn new(num: i128, den: i128) -> Self {
            assert!(den != 0);
            let g = gcd(num.abs(), den.abs()).max(1);
            let sign = if den < 0 { -1 } else { 1 };
            Rat { num: sign * num / g, den: sign * den / g }
        }
        fn int(n: i128) -> Self {
            Rat::new(n, 1)
        }
        fn add(self, o: Rat) -> Rat {
            Rat::new(self.num * o.den + o.num * self.den, self.den * o.den)
        }
        fn mul(self, o: Rat) -> Rat {
            Rat::new(self.num * o.num, self.den * o.den)
        }
        fn div(self, o: Rat) -> Rat {
            Rat::new(self.num * o.den, self.den * o.num)
        }
        fn to_f64(self) -> f64 {
            self.num as f64 / self.den as f64
        }
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol,
            "expected {b}, got {a} (diff {})",
            (a - b).abs()
        );
    }

    #[test]
    fn ln_gamma_known_values() {
        assert_close(ln_gamma(1.0).unwrap(), 0.0, 1e-14);
        assert_close(ln_gamma(5.0).unwrap(), (24.0f64).ln(), 1e-13);
        assert_close(ln_gamma(0.5).unwrap(), 0.5 * core::f64::consts::PI.ln(), 1e-13);
    }

    #[test]
    fn ln_gamma_recurrence_over_range() {
        // ln G(x+1) = ln G(x) + ln x across the advertised range
        let mut x = 1e-3;
        while x < 1e4 {
            let lhs = ln_gamma(x + 1.0).unwrap();
            let rhs = ln_gamma(x).unwrap() + x.ln();
            let scale = lhs.abs().max(1.0);
            assert!(
                (lhs - rhs).abs() <= 1e-13 * scale,
                "recurrence failed at x={x}: {lhs} vs {rhs}"
            );
            x *= 3.7;
        }
    }

    #[test]
    fn ln_gamma_rejects_nonpositive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
    }

    #[test]
    fn pochhammer_values() {
        assert_close(pochhammer(2.5, 0), 1.0, 0.0);
        assert_close(pochhammer(3.0, 4), 360.0, 0.0);
        assert_close(pochhammer(-2.0, 3), 0.0, 0.0);
    }

    #[test]
    fn hyp2f1_trivial_cases() {
        assert_close(hyp2f1_terminating(0, 7.3, 1.1, 0.4).unwrap(), 1.0, 0.0);
        assert_close(hyp2f1_terminating(1, 2.0, 2.0, 0.5).unwrap(), 0.5, 1e-15);
    }

    #[test]
    fn hyp2f1_rational_oracle() {
        // 2F1(-3, 9/2; 3/2; 3/10) summed exactly in rational arithmetic
        let n = 3i128;
        let b = Rat::new(9, 2);
        let c = Rat::new(3, 2);
        let z = Rat::new(3, 10);
        let mut term = Rat::int(1);
        let mut total = Rat::int(1);
        for k in 0..n {
            let kf = Rat::int(k);
            term = term
                .mul(Rat::int(-n).add(kf))
                .mul(b.add(kf))
                .div(c.add(kf))
                .div(kf.add(Rat::int(1)))
                .mul(z);
            total = total.add(term);
        }
        assert_eq!(total, Rat::new(-8713, 35000));
        let got = hyp2f1_terminating(3, 4.5, 1.5, 0.3).unwrap();
        assert_close(got, total.to_f64(), 1e-15);
        assert_close(got, -0.24894285714285714, 1e-15);
    }

    #[test]
    fn hyp2f1_pole_detection() {
        assert!(hyp2f1_terminating(3, 1.0, 0.0, 0.5).is_err());
        assert!(hyp2f1_terminating(3, 1.0, -2.0, 0.5).is_err());
        // c = -3 is outside the sum range for n = 3 (k runs to 2), so fine
        assert!(hyp2f1_terminating(3, 1.0, -3.0, 0.5).is_ok());
    }

    #[test]
    fn hyp3f2_trivial_cases() {
        assert_close(hyp3f2_unit_terminating(0, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap(), 1.0, 0.0);
        assert_close(hyp3f2_unit_terminating(1, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap(), 0.0, 1e-15);
    }

    #[test]
    fn hyp3f2_pole_detection() {
        // a lower parameter hitting 0 or a negative integer inside the sum
        assert!(hyp3f2_unit_terminating(2, 1.0, 1.0, 0.0, 1.0, 1.0).is_err());
        assert!(hyp3f2_unit_terminating(2, 1.0, 1.0, 1.0, -1.0, 1.0).is_err());
        assert!(hyp3f2_unit_terminating(2, 1.0, 1.0, 1.0, 1.0, -2.0).is_ok());
    }

    #[test]
    fn hyp3f2_rational_oracle() {
        // 3F2(-2, 7/2, 2; 3/2, 5/2, 4; 1) = 79/375 exactly
        let n = 2i128;
        let ps = [Rat::new(7, 2), Rat::int(2)];
        let qs = [Rat::new(3, 2), Rat::new(5, 2), Rat::int(4)];
        let mut term = Rat::int(1);
        let mut total = Rat::int(1);
        for k in 0..n {
            let kf = Rat::int(k);
            term = term.mul(Rat::int(-n).add(kf));
            for p in ps {
                term = term.mul(p.add(kf));
            }
            for q in qs {
                term = term.div(q.add(kf));
            }
            term = term.div(kf.add(Rat::int(1)));
            total = total.add(term);
        }
        assert_eq!(total, Rat::new(79, 375));
        let got = hyp3f2_unit_terminating(2, 3.5, 2.0, 1.5, 2.5, 4.0).unwrap();
        assert_close(got, 79.0 / 375.0, 1e-15);
    }

    #[test]
    fn jacobi_eval_trivial() {
        let p0 = JacobiParams::new(0, 1.2, -0.3).unwrap();
        assert_close(jacobi_eval(p0, 0.3), 1.0, 0.0);
        // P_1^(u,v)(1) = 1 + u
        let p1 = JacobiParams::new(1, 0.5, 0.5).unwrap();
        assert_close(jacobi_eval(p1, 1.0), 1.5, 1e-15);
    }

    #[test]
    fn jacobi_eval_matches_sum() {
        // recurrence route vs explicit-sum route at a fixed probe point
        let p = JacobiParams::new(4, 1.3, 0.7).unwrap();
        let a = jacobi_eval(p, -0.2);
        let b = jacobi_sum(p, -0.2);
        assert_close(a, b, 1e-12 * a.abs().max(1.0));

        let q = JacobiParams::new(3, 0.5, 1.5).unwrap();
        let a = jacobi_eval(q, 0.4);
        let b = jacobi_sum(q, 0.4);
        assert_close(a, b, 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn jacobi_sum_trivial() {
        let p = JacobiParams::new(0, 0.9, 0.1).unwrap();
        assert_close(jacobi_sum(p, 0.9), 1.0, 0.0);
        // Legendre P_2(1) = 1
        let leg = JacobiParams::new(2, 0.0, 0.0).unwrap();
        assert_close(jacobi_sum(leg, 1.0), 1.0, 1e-14);
    }

    #[test]
    fn jacobi_derivative_basics() {
        let p0 = JacobiParams::new(0, 0.4, 2.0).unwrap();
        assert_close(jacobi_derivative(p0, 0.2), 0.0, 0.0);
        let leg1 = JacobiParams::new(1, 0.0, 0.0).unwrap();
        assert_close(jacobi_derivative(leg1, 0.7), 1.0, 1e-15);
    }

    #[test]
    fn jacobi_derivative_finite_difference() {
        let p = JacobiParams::new(3, 0.8, 0.2).unwrap();
        let x = 0.1;
        let h = 1e-6;
        let fd = (jacobi_eval(p, x + h) - jacobi_eval(p, x - h)) / (2.0 * h);
        assert_close(jacobi_derivative(p, x), fd, 1e-7);
    }

    #[test]
    fn jacobi_params_validation() {
        assert!(JacobiParams::new(2, -1.0, 0.0).is_err());
        assert!(JacobiParams::new(2, 0.0, -1.5).is_err());
        assert!(JacobiParams::new(2, -0.99, -0.99).is_ok());
    }

    #[test]
    fn gauss_jacobi_total_mass() {
        // sum of weights equals int (1-x)^a (1+x)^b dx = 2^(a+b+1) B(a+1, b+1)
        for &(a, b) in &[(0.0, 0.0), (0.7, -0.3), (1.5, 2.25)] {
            let rule = gauss_jacobi_rule(24, a, b).unwrap();
            let total: f64 = rule.iter().map(|&(_, w)| w).sum();
            let ln_expected = (a + b + 1.0) * core::f64::consts::LN_2
                + ln_gamma(a + 1.0).unwrap()
                + ln_gamma(b + 1.0).unwrap()
                - ln_gamma(a + b + 2.0).unwrap();
            let expected = ln_expected.exp();
            assert_close(total, expected, 1e-12 * expected);
        }
    }

    #[test]
    fn gauss_jacobi_polynomial_exactness() {
        // degree-9 monomial under a nontrivial weight, reference value from
        // the beta-function expansion of int (1-x)^a (1+x)^b x^9 dx
        let (a, b) = (0.5, 1.25);
        let rule = gauss_jacobi_rule(16, a, b).unwrap();
        let got: f64 = rule.iter().map(|&(x, w)| w * x.powi(9)).sum();
        // oracle: expand x^9 = (-(1-x) + 1)^9 and use beta integrals; the
        // alternating oracle sum itself cancels ~3 digits, hence the
        // absolute tolerance
        let mut expected = 0.0;
        for j in 0..=9 {
            let c = binomial_general(9.0, j as i64) * (-1.0f64).powi(j as i32);
            let ln_term = (a + b + 2.0 + j as f64 - 1.0) * core::f64::consts::LN_2
                + ln_gamma(a + 1.0 + j as f64).unwrap()
                + ln_gamma(b + 1.0).unwrap()
                - ln_gamma(a + b + 2.0 + j as f64).unwrap();
            expected += c * ln_term.exp();
        }
        assert_close(got, expected, 1e-10);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn chu_vandermonde(n in 0u32..=8, b in -3.0f64..3.0, coff in 0.1f64..4.0) {
                // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n, with c kept off the poles
                let c = coff + n as f64;
                let lhs = hyp2f1_terminating(n, b, c, 1.0).unwrap();
                let rhs = pochhammer(c - b, n) / pochhammer(c, n);
                prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0));
            }

            #[test]
            fn pochhammer_additivity(sigma in -5.0f64..5.0, m in 0u32..=10, n in 0u32..=10) {
                let lhs = pochhammer(sigma, m + n);
                let rhs = pochhammer(sigma, m) * pochhammer(sigma + m as f64, n);
                prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0));
            }

            #[test]
            fn jacobi_routes_agree(n in 0u32..=10, ui in 0usize..4, vi in 0usize..4, xi in 0usize..50) {
                let choices = [-0.4, 0.5, 1.7, 3.25];
                let u = choices[ui];
                let v = choices[vi];
                let x = -1.0 + 2.0 * xi as f64 / 49.0;
                let p = JacobiParams::new(n, u, v).unwrap();
                let a = jacobi_eval(p, x);
                let b = jacobi_sum(p, x);
                prop_assert!((a - b).abs() <= 1e-11 * a.abs().max(1.0));
            }

            #[test]
            fn jacobi_derivative_richardson(n in 1u32..=6, x in -0.9f64..0.9) {
                let p = JacobiParams::new(n, 0.3, 1.1).unwrap();
                // step-halving Richardson extrapolation of the central difference
                let h = 1e-4;
                let d1 = (jacobi_eval(p, x + h) - jacobi_eval(p, x - h)) / (2.0 * h);
                let d2 = (jacobi_eval(p, x + h / 2.0) - jacobi_eval(p, x - h / 2.0)) / h;
                let richardson = (4.0 * d2 - d1) / 3.0;
                prop_assert!((jacobi_derivative(p, x) - richardson).abs() <= 1e-7);
            }
        }
    }
}
