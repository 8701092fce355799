//! The polynomials `y^{(A)}_n` in the bound states of the extended
//! potentials, their Laguerre identities and their differential equations.

use num_traits::{One, Zero};

use super::{g_poly, ExtendedPotential, Family};
use crate::error::{Error, Result};
use crate::laguerre::{laguerre_coeffs, LaguerreSpec};
use crate::morse::nu_max;
use crate::poly::{PolyF64, PolyQ};
use crate::rational::{factorial, qi, to_f64, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct YPolynomial {
    pub family: Family,
    pub a: Q,
    pub m: usize,
    pub nu: i64,
    pub n: usize,
    pub poly: PolyQ,
}

impl YPolynomial {
    /// Leading coefficient predicted by the normalization of the defining
    /// operator expression.
    pub fn expected_leading(&self) -> Q {
        let m = self.m as i64;
        match self.family {
            Family::II => {
                let nu = self.nu;
                let sign = if (m + nu - 1) % 2 == 0 { qi(1) } else { qi(-1) };
                qi(m - nu) * (qi(m + nu - 2) - &self.a * qi(2)) * sign / (factorial(m as u64) * factorial(nu as u64))
            }
            Family::III => {
                if self.nu < 0 {
                    return Q::one();
                }
                let sign = if self.nu % 2 == 0 { qi(1) } else { qi(-1) };
                sign / (factorial(m as u64) * factorial(self.nu as u64))
            }
        }
    }
}

/// Allowed `nu` for the family: II `0..=ceil(A+1)-1`, III `-m-1` and
/// `0..=ceil(A-1)-1`.
fn check_nu(family: Family, a: &Q, m: usize, nu: i64) -> Result<()> {
    let (top, extra) = match family {
        Family::II => (nu_max(&(a + Q::one())), None),
        Family::III => (nu_max(&(a - Q::one())), Some(-(m as i64) - 1)),
    };
    let ok = Some(nu) == extra || (nu >= 0 && top.is_some_and(|t| nu as u64 <= t));
    if ok {
        return Ok(());
    }
    let mut allowed = match top {
        Some(t) => format!("0..={t}"),
        None => "no regular levels".to_string(),
    };
    if let Some(e) = extra {
        allowed = format!("{e} or {allowed}");
    }
    Err(Error::IndexOutOfRange { nu, allowed })
}

fn laguerre(m: i64, alpha: Q) -> PolyQ {
    if m < 0 {
        PolyQ::zero()
    } else {
        laguerre_coeffs(&LaguerreSpec::positive(m as usize, alpha))
    }
}

/// Alpha of the Laguerre factor in the conventional state `nu` of `V^(+)`.
fn state_alpha(family: Family, a: &Q, nu: i64) -> Q {
    match family {
        Family::II => a * qi(2) + qi(2) - qi(2 * nu),
        Family::III => a * qi(2) - qi(2) - qi(2 * nu),
    }
}

/// `y` from the defining operator expression applied to `L_nu`.
pub fn y_polynomial(family: Family, a: &Q, m: usize, nu: i64) -> Result<YPolynomial> {
    check_nu(family, a, m, nu)?;
    let g = g_poly(family, a, m);
    let zg_dot = g.derivative().mul_z();
    let poly = if family == Family::III && nu < 0 {
        PolyQ::one()
    } else {
        let l = laguerre(nu, state_alpha(family, a, nu));
        let z_dl = l.derivative().mul_z();
        // g (-z d/dz + c + k z) L + z g' L
        let (c, k) = match family {
            Family::II => (qi(nu - m as i64), Q::zero()),
            Family::III => (qi(1 - m as i64 + nu) - a * qi(2), Q::one()),
        };
        let inner = &(&l.scale(&c) - &z_dl) + &l.mul_z().scale(&k);
        &(&g * &inner) + &(&zg_dot * &l)
    };
    let n = match family {
        Family::II => (m as i64 + nu - 1) as usize,
        Family::III => (m as i64 + nu + 1) as usize,
    };
    Ok(YPolynomial {
        family,
        a: a.clone(),
        m,
        nu,
        n,
        poly,
    })
}

/// Differences between the defining expression and the quoted Laguerre
/// identities: one for type II, two for type III. All must vanish.
pub fn y_identity_residual(family: Family, a: &Q, m: usize, nu: i64) -> Result<Vec<PolyQ>> {
    let y = y_polynomial(family, a, m, nu)?.poly;
    let mi = m as i64;
    let g = g_poly(family, a, m);
    match family {
        Family::II => {
            let alpha = state_alpha(family, a, nu);
            let lower = g_poly(Family::II, &(a - Q::one()), m - 1);
            let rhs = &(&g * &laguerre(nu - 1, alpha.clone())).scale(&(a * qi(2) + qi(2) - qi(nu)))
                - &(&lower * &laguerre(nu, alpha)).scale(&(a * qi(2) + qi(2) - qi(mi)));
            Ok(vec![&y - &rhs])
        }
        Family::III => {
            if nu < 0 {
                return Ok(vec![&y - &PolyQ::one(), &y - &PolyQ::one()]);
            }
            let alpha = state_alpha(family, a, nu);
            let up = g_poly(Family::III, &(a - Q::one()), m + 1);
            let down = g_poly(Family::III, &(a + Q::one()), m - 1);
            let first = &(&up * &laguerre(nu, alpha.clone())).scale(&qi(mi + 1))
                + &(&g * &laguerre(nu - 1, alpha.clone())).scale(&(a * qi(2) - qi(2) - qi(nu)));
            let second = &(&down * &laguerre(nu, alpha.clone())).scale(&(a * qi(2) + qi(mi)))
                - &(&g * &laguerre(nu + 1, alpha)).scale(&qi(nu + 1));
            Ok(vec![&y - &first, &y - &second])
        }
    }
}

/// Residual of the second-order equation satisfied by `y`, multiplied
/// through by `g^2` so that it is a polynomial.
pub fn ode_residual(family: Family, a: &Q, m: usize, nu: i64) -> Result<PolyQ> {
    let y = y_polynomial(family, a, m, nu)?.poly;
    let g = g_poly(family, a, m);
    let dg = g.derivative();
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let z = PolyQ::z();
    // g * { z y'' + [c g - z (g + 2 g')]/g y' + (...) y }
    let res = match family {
        Family::II => {
            let c = a * qi(2) + qi(3) - qi(2 * nu);
            let p1 = &g.scale(&c) - &(&g + &dg.scale(&qi(2))).mul_z();
            // -2 (2A+2-m-nu-z) g'/g - (m-nu+1)
            let lin = PolyQ::from_coeffs(vec![a * qi(2) + qi(2 - m as i64 - nu), qi(-1)]);
            let p0 = &(&lin * &dg).scale(&qi(-2)) - &g.scale(&qi(m as i64 - nu + 1));
            &(&(&(&g * &z) * &d2) + &(&p1 * &d1)) + &(&p0 * &y)
        }
        Family::III => {
            let c = a * qi(2) - qi(1) - qi(2 * nu);
            let p1 = &g.scale(&c) - &(&g + &dg.scale(&qi(2))).mul_z();
            let p0 = (&g + &dg.scale(&qi(2))).scale(&qi(m as i64 + nu + 1));
            &(&(&(&g * &z) * &d2) + &(&p1 * &d1)) + &(&p0 * &y)
        }
    };
    Ok(&res * &g)
}

/// A bound state of an extended potential, ready for repeated evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionState {
    pub nu: i64,
    pub energy: Q,
    pub y: YPolynomial,
    /// Power of `z` in the envelope `z^p e^{-z/2}`.
    power: f64,
    b: f64,
    y_f: PolyF64,
    g_f: PolyF64,
}

impl ExtensionState {
    pub fn new(ext: &ExtendedPotential, nu: i64) -> Result<Self> {
        let spec = ext.spec();
        let energy = ext
            .spectrum()
            .into_iter()
            .find(|(k, _)| *k == nu)
            .map(|(_, e)| e)
            .ok_or_else(|| Error::IndexOutOfRange {
                nu,
                allowed: format!("{:?}", ext.spectrum().iter().map(|l| l.0).collect::<Vec<_>>()),
            })?;
        let y = y_polynomial(spec.family, &spec.a, spec.m, nu)?;
        let power = to_f64(&(spec.plus_a() - qi(nu)));
        Ok(ExtensionState {
            nu,
            energy,
            power,
            b: ext.core().b_f64(),
            y_f: y.poly.to_f64(),
            g_f: ext.g().to_f64(),
            y,
        })
    }

    /// Unnormalized `xi(z) y(z) / g(z)` with `xi = z^p e^{-z/2}`.
    pub fn value(&self, x: f64) -> f64 {
        let z = 2.0 * self.b * (-x).exp();
        let ratio = self.y_f.eval(z) / self.g_f.eval(z);
        let log_env = self.power * z.ln() - 0.5 * z;
        ratio * log_env.exp()
    }
}

pub fn extension_wavefunction(ext: &ExtendedPotential, nu: i64, x: f64) -> Result<f64> {
    Ok(ExtensionState::new(ext, nu)?.value(x))
}
