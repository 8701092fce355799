//! Conventional Morse potential `V_{A,B}(x) = B^2 e^{-2x} - B(2A+1) e^{-x}`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::laguerre::{laguerre_eval, LaguerreSpec};
use crate::potential::Potential;
use crate::rational::{largest_integer_below, qi, to_f64, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct MorseParams {
    a: Q,
    b: Q,
    a_f: f64,
    b_f: f64,
}

impl MorseParams {
    /// `B > 0` is required; `A` may take any rational value (bound states
    /// exist only for `A > 0`).
    pub fn new(a: Q, b: Q) -> Result<Self> {
        if !b.is_positive() {
            return Err(Error::range("B > 0", format!("B = {b}")));
        }
        Ok(MorseParams {
            a_f: to_f64(&a),
            b_f: to_f64(&b),
            a,
            b,
        })
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn a_f64(&self) -> f64 {
        self.a_f
    }

    pub fn b_f64(&self) -> f64 {
        self.b_f
    }

    pub fn value(&self, x: f64) -> f64 {
        let e = (-x).exp();
        e * (self.b_f * self.b_f * e - self.b_f * (2.0 * self.a_f + 1.0))
    }

    /// Position and value of the minimum, present when `2A + 1 > 0`.
    pub fn minimum(&self) -> Option<(f64, f64)> {
        let s = (2.0 * self.a_f + 1.0) / (2.0 * self.b_f);
        (s > 0.0).then(|| (-s.ln(), -0.25 * (2.0 * self.a_f + 1.0).powi(2)))
    }

    /// The variable `z = 2B e^{-x}`.
    pub fn z(&self, x: f64) -> f64 {
        z_of_x(self.b_f, x)
    }
}

impl Potential for MorseParams {
    fn value(&self, x: f64) -> f64 {
        MorseParams::value(self, x)
    }
}

pub fn z_of_x(b: f64, x: f64) -> f64 {
    2.0 * b * (-x).exp()
}

pub fn morse_potential(params: &MorseParams, x: f64) -> f64 {
    params.value(x)
}

/// Largest integer strictly below `A`, or `None` when `A <= 0`.
pub fn nu_max(a: &Q) -> Option<u64> {
    if !a.is_positive() {
        return None;
    }
    largest_integer_below(a).to_u64()
}

/// A bound state `nu` of `V_{A,B}`: energy `-(A-nu)^2` and wavefunction
/// `z^{A-nu} e^{-z/2} L_nu^{(2A-2nu)}(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MorseState {
    pub nu: u64,
    pub energy: Q,
    /// Exponent `A - nu` of the factor `e^{-(A-nu) x}`.
    pub decay: Q,
    pub laguerre: LaguerreSpec,
}

impl MorseState {
    pub fn energy_f64(&self) -> f64 {
        to_f64(&self.energy)
    }
}

pub fn morse_state(a: &Q, nu: u64) -> MorseState {
    let decay = a - qi(nu as i64);
    MorseState {
        nu,
        energy: -(&decay * &decay),
        laguerre: LaguerreSpec::positive(nu as usize, &decay * qi(2)),
        decay,
    }
}

pub fn morse_spectrum(params: &MorseParams) -> Vec<MorseState> {
    match nu_max(params.a()) {
        Some(top) => (0..=top).map(|nu| morse_state(params.a(), nu)).collect(),
        None => Vec::new(),
    }
}

/// Unnormalized `exp[-(A-nu)x - B e^{-x}] L_nu^{(2A-2nu)}(2B e^{-x})`.
pub fn morse_wavefunction(params: &MorseParams, nu: u64, x: f64) -> Result<f64> {
    let top = nu_max(params.a());
    if top.is_none_or(|t| nu > t) {
        return Err(Error::IndexOutOfRange {
            nu: nu as i64,
            allowed: match top {
                Some(t) => format!("0..={t}"),
                None => "empty (A <= 0)".into(),
            },
        });
    }
    let state = morse_state(params.a(), nu);
    let z = params.z(x);
    let envelope = (-to_f64(&state.decay) * x - 0.5 * z).exp();
    Ok(envelope * laguerre_eval(&state.laguerre, z))
}

pub(crate) fn bigint_to_i64(n: &BigInt) -> i64 {
    n.to_i64().unwrap_or(if n.is_negative() { i64::MIN } else { i64::MAX })
}
