//! Generalized Laguerre polynomials `L_m^(alpha)(±z)` with rational parameter.

use num_traits::{One, Zero};

use crate::poly::PolyQ;
use crate::rational::{factorial, qi, to_f64, Q};

/// Orientation of the polynomial variable: `Negative` means the polynomial
/// is taken at argument `-z`, as in `L_m^(alpha)(-z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Positive => 1.0,
            Orientation::Negative => -1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaguerreSpec {
    pub degree: usize,
    pub alpha: Q,
    pub orientation: Orientation,
}

impl LaguerreSpec {
    pub fn new(degree: usize, alpha: Q, orientation: Orientation) -> Self {
        LaguerreSpec {
            degree,
            alpha,
            orientation,
        }
    }

    pub fn positive(degree: usize, alpha: Q) -> Self {
        Self::new(degree, alpha, Orientation::Positive)
    }

    pub fn negative(degree: usize, alpha: Q) -> Self {
        Self::new(degree, alpha, Orientation::Negative)
    }
}

/// Exact coefficients of `L_m^(alpha)(±z)` as a polynomial in `z`.
///
/// Built from the top coefficient `(-1)^m / m!` downwards with
/// `c_k = -c_{k+1} (k+1)(alpha+k+1) / (m-k)`; the degree is exactly `m`.
pub fn laguerre_coeffs(spec: &LaguerreSpec) -> PolyQ {
    let m = spec.degree;
    let mut coeffs = vec![Q::zero(); m + 1];
    let top = Q::one() / factorial(m as u64);
    coeffs[m] = if m.is_multiple_of(2) { top } else { -top };
    for k in (0..m).rev() {
        let kk = qi(k as i64);
        let ratio = -(&kk + Q::one()) * (&spec.alpha + &kk + Q::one()) / qi((m - k) as i64);
        coeffs[k] = &coeffs[k + 1] * ratio;
    }
    let poly = PolyQ::from_coeffs(coeffs);
    match spec.orientation {
        Orientation::Positive => poly,
        Orientation::Negative => poly.reflect(),
    }
}

/// Floating evaluation by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+alpha-t) L_k - (k+alpha) L_{k-1}` at `t = ±z`.
pub fn laguerre_eval(spec: &LaguerreSpec, z: f64) -> f64 {
    laguerre_eval_f64(spec.degree, to_f64(&spec.alpha), spec.orientation.sign() * z)
}

/// Recurrence evaluation of `L_m^(alpha)(t)` for a floating parameter.
pub fn laguerre_eval_f64(m: usize, alpha: f64, t: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - t;
    for k in 1..m {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
