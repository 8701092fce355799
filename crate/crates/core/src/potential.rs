//! One-dimensional potentials and the rational parts built from a
//! denominator polynomial `g(z)`.

use std::sync::Arc;

use crate::poly::{PolyF64, PolyQ};

/// A real potential of one variable (`x` for Morse-type problems, `r` for
/// radial ones).
pub trait Potential: Send + Sync {
    fn value(&self, x: f64) -> f64;
}

impl<F> Potential for F
where
    F: Fn(f64) -> f64 + Send + Sync,
{
    fn value(&self, x: f64) -> f64 {
        self(x)
    }
}

impl<P: Potential + ?Sized> Potential for Arc<P> {
    fn value(&self, x: f64) -> f64 {
        (**self).value(x)
    }
}

/// Which rational-part formula a potential uses. The four conventions have
/// different prefactors and are deliberately kept apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RationalConvention {
    /// SUSY-extended Morse: `-2z { g'/g + z [g''/g - (g'/g)^2] }`.
    MorseExtension,
    /// Morse side of the radial-oscillator map: `-z { g'/g + 2z [g''/g - (g'/g)^2] }`.
    QesMorse,
    /// Extended radial oscillator: `-2 omega { g'/g + 2z [g''/g - (g'/g)^2] }`.
    RadialExtension,
    /// Radial side of the inverse map: `-4 omega { g'/g + z [g''/g - (g'/g)^2] }`.
    QesRadial,
}

/// Rational part `V_rat(z)` as an expression in `g`, `g'` and `g''`.
///
/// Evaluated directly in `z`, never as a difference of two potentials.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPart {
    g: PolyQ,
    g_f: PolyF64,
    convention: RationalConvention,
    omega: f64,
}

impl RationalPart {
    pub fn new(g: PolyQ, convention: RationalConvention, omega: f64) -> Self {
        RationalPart {
            g_f: g.to_f64(),
            g,
            convention,
            omega,
        }
    }

    pub fn g(&self) -> &PolyQ {
        &self.g
    }

    pub fn convention(&self) -> RationalConvention {
        self.convention
    }

    /// Value of `g(z)`.
    pub fn denominator(&self, z: f64) -> f64 {
        self.g_f.eval(z)
    }

    pub fn eval_z(&self, z: f64) -> f64 {
        let (g, dg, ddg) = self.g_f.eval_with_derivatives(z);
        let r = dg / g;
        let curvature = ddg / g - r * r;
        match self.convention {
            RationalConvention::MorseExtension => -2.0 * z * (r + z * curvature),
            RationalConvention::QesMorse => -z * (r + 2.0 * z * curvature),
            RationalConvention::RadialExtension => -2.0 * self.omega * (r + 2.0 * z * curvature),
            RationalConvention::QesRadial => -4.0 * self.omega * (r + z * curvature),
        }
    }
}
