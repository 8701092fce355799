//! Exact univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{to_f64, Q};

/// Polynomial with exact rational coefficients in ascending degree order.
///
/// The coefficient vector is kept trimmed, so the leading coefficient is
/// nonzero unless the polynomial is identically zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<Q>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, z: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Q::from_integer(k.into()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `z * p(z)`.
    pub fn mul_z(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Q::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQ { coeffs }
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Euclidean division `self = quot * divisor + rem`.
    ///
    /// # Panics
    /// If `divisor` is the zero polynomial.
    pub fn div_rem(&self, divisor: &PolyQ) -> (PolyQ, PolyQ) {
        let dlead = divisor.leading().expect("division by zero polynomial");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (PolyQ::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / dlead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem))
    }

    /// Divides by the absolute value of the leading coefficient; the sign
    /// pattern of the polynomial is unchanged.
    pub fn normalize_positive(&self) -> PolyQ {
        match self.leading() {
            Some(l) => self.scale(&(Q::one() / l.abs())),
            None => PolyQ::zero(),
        }
    }

    pub fn to_f64(&self) -> PolyF64 {
        PolyF64::new(self.coeffs.iter().map(to_f64).collect())
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: &PolyQ) -> PolyQ {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

/// Floating-point copy of a [`PolyQ`] for hot evaluation loops.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyF64 {
    coeffs: Vec<f64>,
}

impl PolyF64 {
    pub fn new(coeffs: Vec<f64>) -> Self {
        PolyF64 { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c)
    }

    /// Value and first two derivatives by a single Horner sweep.
    pub fn eval_with_derivatives(&self, z: f64) -> (f64, f64, f64) {
        let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            ddp = ddp * z + 2.0 * dp;
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp, ddp)
    }
}
