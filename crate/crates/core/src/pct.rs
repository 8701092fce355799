//! Point canonical transformations between the radial oscillator
//! `V_l(r) = omega^2 r^2 / 4 + l(l+1)/r^2` and Morse-type potentials.
//!
//! With `r = e^{-x/2}` and `psi(r) = e^{-x/4} phi(x)`, the oscillator
//! variable `z = omega r^2 / 2` becomes the Morse variable `z = 2B e^{-x}`
//! for `B = omega / 4`, and
//! `V_M(x) - epsilon = (r^2/4) (V_RO(r) - E) + 1/16` at fixed energy.
//! Mapped wavefunctions are returned unnormalized.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::extensions::{ExtendedPotential, ExtensionSpec, ExtensionState, Family};
use crate::laguerre::{laguerre_coeffs, laguerre_eval_f64, LaguerreSpec};
use crate::morse::{bigint_to_i64, MorseParams};
use crate::poly::{PolyF64, PolyQ};
use crate::polyode::LinearOde;
use crate::potential::{Potential, RationalConvention, RationalPart};
use crate::rational::{q, qi, to_f64, Q};
use crate::roots::count_positive_roots;

#[derive(Clone, Debug, PartialEq)]
pub struct RadialParams {
    l: Q,
    omega: Q,
    l_f: f64,
    omega_f: f64,
}

impl RadialParams {
    /// `omega > 0` and `alpha = l + 1/2 > 0`. Values `-1/2 < l < 0` are
    /// accepted because the inverse map can produce them.
    pub fn new(l: Q, omega: Q) -> Result<Self> {
        if !omega.is_positive() {
            return Err(Error::range("omega > 0", format!("omega = {omega}")));
        }
        if (&l + q(1, 2)) <= Q::zero() {
            return Err(Error::range("l > -1/2", format!("l = {l}")));
        }
        Ok(RadialParams {
            l_f: to_f64(&l),
            omega_f: to_f64(&omega),
            l,
            omega,
        })
    }

    pub fn l(&self) -> &Q {
        &self.l
    }

    pub fn omega(&self) -> &Q {
        &self.omega
    }

    pub fn alpha(&self) -> Q {
        &self.l + q(1, 2)
    }

    pub fn omega_f64(&self) -> f64 {
        self.omega_f
    }

    pub fn z(&self, r: f64) -> f64 {
        0.5 * self.omega_f * r * r
    }

    pub fn value(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return f64::NAN;
        }
        0.25 * self.omega_f * self.omega_f * r * r + self.l_f * (self.l_f + 1.0) / (r * r)
    }

    /// `omega (2 nu + l + 3/2)`.
    pub fn level(&self, nu: u64) -> Q {
        &self.omega * (qi(2 * nu as i64) + &self.l + q(3, 2))
    }

    /// `r^{l+1} e^{-omega r^2/4} L_nu^{(alpha)}(omega r^2 / 2)`.
    pub fn wavefunction(&self, nu: u64, r: f64) -> f64 {
        let z = self.z(r);
        r.powf(self.l_f + 1.0) * (-0.5 * z).exp() * laguerre_eval_f64(nu as usize, self.l_f + 0.5, z)
    }
}

impl Potential for RadialParams {
    fn value(&self, r: f64) -> f64 {
        RadialParams::value(self, r)
    }
}

pub fn ro_potential(params: &RadialParams, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(Error::range("r > 0", format!("r = {r}")));
    }
    Ok(params.value(r))
}

/// Radial domain `[r_min, sqrt(4 (|E_max| + 25) / omega)]`. A Dirichlet
/// wall at `r_min` shifts levels by `O(r_min^{2l+1})`, so `r_min` is `1e-4`
/// capped at `1e-10^{1/(2l+1)}`.
pub fn ro_domain(omega: f64, l: f64, e_max: f64) -> (f64, f64) {
    let r_min = 1e-4f64.min(1e-10f64.powf(1.0 / (2.0 * l + 1.0)));
    (r_min, (4.0 * (e_max.abs() + 25.0) / omega).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RoType {
    I,
    II,
    III,
}

impl fmt::Display for RoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RoType::I => "I",
            RoType::II => "II",
            RoType::III => "III",
        })
    }
}

impl std::str::FromStr for RoType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(RoType::I),
            "II" | "2" => Ok(RoType::II),
            "III" | "3" => Ok(RoType::III),
            other => Err(Error::Parse(format!("unknown type '{other}' (expected I, II or III)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoExtensionSpec {
    pub ty: RoType,
    pub params: RadialParams,
    pub m: usize,
}

impl RoExtensionSpec {
    pub fn new(ty: RoType, l: Q, omega: Q, m: usize) -> Result<Self> {
        let params = RadialParams::new(l, omega)?;
        if m < 1 {
            return Err(Error::range("m >= 1", format!("m = {m}")));
        }
        let alpha = params.alpha();
        if ty != RoType::I && alpha <= qi(m as i64 - 1) {
            return Err(Error::range("alpha > m-1", format!("alpha = {alpha}, m = {m}")));
        }
        if ty == RoType::III && m % 2 == 1 {
            return Err(Error::range("m in {2, 4, 6, ...}", format!("m = {m}")));
        }
        let spec = RoExtensionSpec { ty, params, m };
        let g = spec.g();
        let roots = count_positive_roots(&g)?;
        if roots > 0 {
            return Err(Error::NotNodeless {
                what: format!("g = {g}"),
                roots,
                interval: "(0, inf)".into(),
            });
        }
        Ok(spec)
    }

    /// I: `L_m^{(alpha-1)}(-z)`, II: `L_m^{(-alpha-1)}(z)`,
    /// III: `L_m^{(-alpha-1)}(-z)`.
    pub fn g_spec(&self) -> LaguerreSpec {
        let alpha = self.params.alpha();
        match self.ty {
            RoType::I => LaguerreSpec::negative(self.m, alpha - Q::one()),
            RoType::II => LaguerreSpec::positive(self.m, -alpha - Q::one()),
            RoType::III => LaguerreSpec::negative(self.m, -alpha - Q::one()),
        }
    }

    pub fn g(&self) -> PolyQ {
        laguerre_coeffs(&self.g_spec())
    }

    /// `A_0 = alpha/2` (I, II) or `alpha/2 + 1` (III).
    pub fn a0(&self) -> Q {
        let half = self.params.alpha() / qi(2);
        match self.ty {
            RoType::III => half + Q::one(),
            _ => half,
        }
    }

    pub fn is_valid_nu(&self, nu: i64) -> bool {
        nu >= 0 || (self.ty == RoType::III && nu == -(self.m as i64) - 1)
    }
}

/// `V_l(r) - 2 omega { g'/g + 2z [g''/g - (g'/g)^2] }`, `z = omega r^2 / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct RoExtendedPotential {
    spec: RoExtensionSpec,
    rat: RationalPart,
}

impl RoExtendedPotential {
    pub fn new(spec: RoExtensionSpec) -> Self {
        let rat = RationalPart::new(spec.g(), RationalConvention::RadialExtension, spec.params.omega_f64());
        RoExtendedPotential { spec, rat }
    }

    pub fn spec(&self) -> &RoExtensionSpec {
        &self.spec
    }

    pub fn rational_part(&self, r: f64) -> f64 {
        self.rat.eval_z(self.spec.params.z(r))
    }

    pub fn value(&self, r: f64) -> f64 {
        self.spec.params.value(r) + self.rational_part(r)
    }

    /// Lowest `count` levels: `omega (2 nu + l + 3/2)` for I/II, and
    /// `omega (2 nu + l + 7/2)` with `nu = -m-1, 0, 1, ...` for III.
    pub fn spectrum(&self, count: usize) -> Vec<(i64, Q)> {
        let p = &self.spec.params;
        let level = |nu: i64, shift: Q| p.omega() * (qi(2 * nu) + p.l() + shift);
        match self.spec.ty {
            RoType::I | RoType::II => (0..count as i64).map(|nu| (nu, level(nu, q(3, 2)))).collect(),
            RoType::III => std::iter::once(-(self.spec.m as i64) - 1)
                .chain(0..)
                .take(count)
                .map(|nu| (nu, level(nu, q(7, 2))))
                .collect(),
        }
    }
}

impl Potential for RoExtendedPotential {
    fn value(&self, r: f64) -> f64 {
        RoExtendedPotential::value(self, r)
    }
}

pub fn ro_extended_potential(spec: &RoExtensionSpec, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(Error::range("r > 0", format!("r = {r}")));
    }
    Ok(RoExtendedPotential::new(spec.clone()).value(r))
}

/// Result of mapping oscillator state `nu` onto the Morse line.
#[derive(Clone, Debug, PartialEq)]
pub struct PctForward {
    pub nu: u64,
    pub a0: Q,
    pub morse: MorseParams,
    pub epsilon: Q,
}

impl PctForward {
    /// `exp(-A_0 x - B e^{-x}) L_nu^{(2 A_0)}(2B e^{-x})`.
    pub fn wavefunction(&self, x: f64) -> f64 {
        let z = self.morse.z(x);
        let a0 = to_f64(&self.a0);
        (-a0 * x - 0.5 * z).exp() * laguerre_eval_f64(self.nu as usize, 2.0 * a0, z)
    }
}

/// `A_nu = A_0 + nu` with `A_0 = alpha/2`, `B = omega/4`, `epsilon = -A_0^2`.
pub fn pct_forward(params: &RadialParams, nu: u64) -> Result<PctForward> {
    let a0 = params.alpha() / qi(2);
    let morse = MorseParams::new(&a0 + qi(nu as i64), params.omega() / qi(4))?;
    Ok(PctForward {
        nu,
        epsilon: -(&a0 * &a0),
        a0,
        morse,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PctInverse {
    pub nu: u64,
    pub l0: Q,
    pub radial: RadialParams,
    pub energy: Q,
}

impl PctInverse {
    /// `r^{l_nu+1} e^{-omega r^2/4} L_nu^{(l_nu + 1/2)}(omega r^2 / 2)`.
    pub fn wavefunction(&self, r: f64) -> f64 {
        self.radial.wavefunction(self.nu, r)
    }
}

/// `omega = 4B`, `l_nu = 2A - 1/2 - 2 nu`, `E = 4B(2A+1)`, for
/// `0 <= nu <= floor(l_0 / 2)`.
pub fn pct_inverse(params: &MorseParams, nu: u64) -> Result<PctInverse> {
    let l0 = params.a() * qi(2) - q(1, 2);
    let top = if l0.is_negative() {
        None
    } else {
        Some(bigint_to_i64(&(&l0 / qi(2)).floor().to_integer()))
    };
    if top.is_none_or(|t| nu as i64 > t) {
        return Err(Error::IndexOutOfRange {
            nu: nu as i64,
            allowed: top.map_or("empty (l_0 < 0)".into(), |t| format!("0..={t}")),
        });
    }
    let radial = RadialParams::new(&l0 - qi(2 * nu as i64), params.b() * qi(4))?;
    Ok(PctInverse {
        nu,
        energy: params.b() * qi(4) * (params.a() * qi(2) + Q::one()),
        l0,
        radial,
    })
}

/// One member `V_{A_nu,B} + V_{A_0,B,rat}` of the QES hierarchy attached to
/// an extended oscillator.
#[derive(Clone, Debug)]
pub struct QesMorse {
    pub spec: RoExtensionSpec,
    pub nu: i64,
    pub a0: Q,
    pub core: MorseParams,
    pub rat: Arc<RationalPart>,
    pub epsilon: Q,
    /// Ordinal position of the known level in the bound-state spectrum.
    pub position: usize,
    /// The polynomial `y` in `phi = z^lambda e^{-z/2} y / g`.
    pub y: PolyQ,
    lambda: f64,
    y_f: PolyF64,
}

impl QesMorse {
    pub fn value(&self, x: f64) -> f64 {
        self.core.value(x) + self.rat.eval_z(self.core.z(x))
    }

    /// Unnormalized eigenfunction for `epsilon`.
    pub fn eigenfunction(&self, x: f64) -> f64 {
        let z = self.core.z(x);
        let env = (self.lambda * z.ln() - 0.5 * z).exp();
        env * self.y_f.eval(z) / self.rat.denominator(z)
    }
}

impl Potential for QesMorse {
    fn value(&self, x: f64) -> f64 {
        QesMorse::value(self, x)
    }
}

/// The hierarchy `nu -> V_{A_0+nu,B} + V_{A_0,B,rat}`; every member shares
/// the same rational part.
#[derive(Clone, Debug)]
pub struct QesHierarchy {
    spec: RoExtensionSpec,
    a0: Q,
    b: Q,
    rat: Arc<RationalPart>,
}

impl QesHierarchy {
    pub fn new(spec: RoExtensionSpec) -> Self {
        let rat = Arc::new(RationalPart::new(spec.g(), RationalConvention::QesMorse, 0.0));
        QesHierarchy {
            a0: spec.a0(),
            b: spec.params.omega() / qi(4),
            spec,
            rat,
        }
    }

    pub fn rational(&self) -> &Arc<RationalPart> {
        &self.rat
    }

    pub fn member(&self, nu: i64) -> Result<QesMorse> {
        let spec = &self.spec;
        if !spec.is_valid_nu(nu) {
            return Err(Error::IndexOutOfRange {
                nu,
                allowed: match spec.ty {
                    RoType::III => format!("{} or nu >= 0", -(spec.m as i64) - 1),
                    _ => "nu >= 0".into(),
                },
            });
        }
        let m = spec.m as i64;
        let a_nu = &self.a0 + qi(nu);
        let core = MorseParams::new(a_nu.clone(), self.b.clone())?;
        let (lambda, degree, position) = match spec.ty {
            RoType::III => (
                &self.a0 - Q::one(),
                (m + nu + 1) as usize,
                if nu < 0 { 0 } else { nu as usize + 1 },
            ),
            _ => (self.a0.clone(), (m + nu) as usize, nu as usize),
        };
        let y = qes_y(self.rat.g(), &lambda, &a_nu, degree)?;
        let nodes = count_positive_roots(&y)?;
        if nodes != position {
            return Err(Error::NoPolynomialSolution {
                degree,
                reason: format!("eigenfunction has {nodes} nodes, expected {position}"),
            });
        }
        Ok(QesMorse {
            spec: spec.clone(),
            nu,
            a0: self.a0.clone(),
            core,
            rat: Arc::clone(&self.rat),
            epsilon: -(&lambda * &lambda),
            position,
            lambda: to_f64(&lambda),
            y_f: y.to_f64(),
            y,
        })
    }
}

/// Polynomial `y` of exact degree `degree` with
/// `z g y'' + [(b - z) g - 2z g'] y' + [z g'' + (1 - b + z) g' - a g] y = 0`,
/// `a = lambda - A`, `b = 2 lambda + 1`.
fn qes_y(g: &PolyQ, lambda: &Q, a_core: &Q, degree: usize) -> Result<PolyQ> {
    let a = lambda - a_core;
    let b = lambda * qi(2) + Q::one();
    let dg = g.derivative();
    let ddg = dg.derivative();
    let b_minus_z = PolyQ::from_coeffs(vec![b.clone(), qi(-1)]);
    let one_minus_b_plus_z = PolyQ::from_coeffs(vec![Q::one() - &b, Q::one()]);
    let ode = LinearOde::new(
        g.mul_z(),
        &(&b_minus_z * g) - &dg.mul_z().scale(&qi(2)),
        &(&ddg.mul_z() + &(&one_minus_b_plus_z * &dg)) - &g.scale(&a),
    );
    ode.unique_solution(degree)
}

pub fn qes_morse_build(spec: &RoExtensionSpec, nu: i64) -> Result<QesMorse> {
    QesHierarchy::new(spec.clone()).member(nu)
}

/// `V_{l_nu}(r) - 4 omega { g'/g + z [g''/g - (g'/g)^2] }` obtained from an
/// extended Morse potential by the inverse map.
#[derive(Clone, Debug)]
pub struct QesRadial {
    pub nu: i64,
    pub l0: Q,
    pub radial: RadialParams,
    pub energy: Q,
    pub rat: Arc<RationalPart>,
    state: ExtensionState,
}

impl QesRadial {
    pub fn value(&self, r: f64) -> f64 {
        self.radial.value(r) + self.rat.eval_z(self.radial.z(r))
    }

    /// `r^{1/2} phi(x)` at `x = -2 ln r`, unnormalized.
    pub fn eigenfunction(&self, r: f64) -> f64 {
        r.sqrt() * self.state.value(-2.0 * r.ln())
    }

    /// Position of `E` in the spectrum, equal to the node count of `y`.
    pub fn position(&self) -> Result<usize> {
        count_positive_roots(&self.state.y.poly)
    }
}

impl Potential for QesRadial {
    fn value(&self, r: f64) -> f64 {
        QesRadial::value(self, r)
    }
}

/// `l_0 = 2A + 3/2` (II) or `2A - 5/2` (III), `omega = 4B`,
/// `E = 2 omega (A + 1/2)`, `l_nu = l_0 - 2 nu`.
pub fn qes_ro_build(spec: &ExtensionSpec, nu: i64) -> Result<QesRadial> {
    let ext = crate::extensions::build_extension(spec.clone())?;
    qes_ro_from(&ext, nu)
}

fn qes_ro_from(ext: &ExtendedPotential, nu: i64) -> Result<QesRadial> {
    let spec = ext.spec();
    let state = ExtensionState::new(ext, nu)?;
    let l0 = match spec.family {
        Family::II => &spec.a * qi(2) + q(3, 2),
        Family::III => &spec.a * qi(2) - q(5, 2),
    };
    let omega = &spec.b * qi(4);
    let radial = RadialParams::new(&l0 - qi(2 * nu), omega.clone())?;
    let rat = Arc::new(RationalPart::new(
        ext.g().clone(),
        RationalConvention::QesRadial,
        to_f64(&omega),
    ));
    Ok(QesRadial {
        nu,
        energy: &omega * qi(2) * (&spec.a + q(1, 2)),
        l0,
        radial,
        rat,
        state,
    })
}

/// Closed forms of `V_{A_0,B,rat} - m` for the lowest degrees.
pub fn qes_explicit_rational_part(ty: RoType, m: usize, a0: f64, b: f64, x: f64) -> Result<f64> {
    let u = b * (-x).exp();
    let (n1, n2, d) = match (ty, m) {
        (RoType::I | RoType::II, 1) => (-3.0 * a0, 2.0 * a0 * a0, u + a0),
        (RoType::I, 2) => {
            let s = 2.0 * a0 + 1.0;
            (
                -2.0 * s * (3.0 * u + a0 - 2.0),
                -4.0 * s * s * (2.0 * u + a0),
                2.0 * u * u + 2.0 * s * u + a0 * s,
            )
        }
        (RoType::II, 2) => {
            let s = 2.0 * a0 - 1.0;
            (
                -2.0 * s * (3.0 * u + a0 + 2.0),
                4.0 * s * s * (2.0 * u + a0),
                2.0 * u * u + 2.0 * s * u + a0 * s,
            )
        }
        (RoType::III, 2) => {
            let s = 2.0 * a0 - 3.0;
            (
                2.0 * s * (3.0 * u - a0 - 1.0),
                -4.0 * s * s * (2.0 * u - a0 + 1.0),
                2.0 * u * u - 2.0 * s * u + (a0 - 1.0) * s,
            )
        }
        _ => return Err(Error::Unsupported(format!("no closed form for type {ty} with m = {m}"))),
    };
    Ok(n1 / d + n2 / (d * d))
}

/// `z = omega r^2 / 2` equals `2B e^{-x}` for `r = e^{-x/2}`, `B = omega/4`.
pub fn x_of_r(r: f64) -> f64 {
    -2.0 * r.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::morse_state;
    use crate::morse::z_of_x;
    use crate::numerics::fd::schrodinger_residual;
    use crate::numerics::Grid;

    fn radial(l: Q, omega: Q) -> RadialParams {
        RadialParams::new(l, omega).unwrap()
    }

    #[test]
    fn ro_examples() {
        let p = radial(qi(0), qi(2));
        assert!((ro_potential(&p, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(ro_potential(&p, 0.0).is_err());
        let p1 = radial(qi(1), qi(2));
        assert!(p1.value(1e-8) > 1e15);
        assert_eq!(p1.level(2), qi(2) * (qi(4) + qi(1) + q(3, 2)));
    }

    #[test]
    fn forward_example_and_ground_state() {
        let f = pct_forward(&radial(qi(1), qi(4)), 0).unwrap();
        assert_eq!(f.a0, q(3, 4));
        assert_eq!(f.morse.b(), &qi(1));
        assert_eq!(f.epsilon, q(-9, 16));
        let state = morse_state(f.morse.a(), 0);
        assert_eq!(state.energy, f.epsilon);
        for x in [-1.0, 0.0, 2.0] {
            let m = crate::morse::morse_wavefunction(&f.morse, 0, x).unwrap();
            assert!((m - f.wavefunction(x)).abs() < 1e-14 * m.abs().max(1e-300));
        }
    }

    #[test]
    fn forward_maps_are_exact_changes_of_variable() {
        let p = radial(q(3, 2), qi(4));
        for nu in 0..4u64 {
            let f = pct_forward(&p, nu).unwrap();
            // Target Morse equation.
            let grid = Grid::new(-3.0, 12.0, 6001).unwrap();
            let res = schrodinger_residual(&f.morse, to_f64(&f.epsilon), &|x| f.wavefunction(x), &grid);
            assert!(res.refined < 1e-6, "{nu}: {res:?}");
            // Source oscillator equation.
            let e = to_f64(&p.level(nu));
            let rg = Grid::new(0.05, 5.0, 4001).unwrap();
            let res = schrodinger_residual(&p, e, &|r| p.wavefunction(nu, r), &rg);
            assert!(res.refined < 1e-6, "{nu}: {res:?}");
            // Pointwise psi(r) = e^{-x/4} phi(x).
            for r in [0.3, 1.0, 2.2] {
                let x = x_of_r(r);
                let lhs = p.wavefunction(nu, r);
                let rhs = (-x / 4.0).exp() * f.wavefunction(x);
                assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1e-12));
            }
            // V_M - epsilon = (r^2/4)(V_RO - E) + 1/16.
            for r in [0.2, 0.9, 3.0] {
                let x = x_of_r(r);
                let lhs = f.morse.value(x) - to_f64(&f.epsilon);
                let rhs = 0.25 * r * r * (p.value(r) - e) + 1.0 / 16.0;
                assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
            }
        }
    }

    #[test]
    fn spectrum_retrieval() {
        // Morse levels of V_{A_bar} from A_0 = A_bar - nu_bar.
        let a_bar = q(7, 2);
        for nu_bar in 0..=crate::morse::nu_max(&a_bar).unwrap() {
            let a0 = &a_bar - qi(nu_bar as i64);
            let l = &a0 * qi(2) - q(1, 2);
            let f = pct_forward(&radial(l, qi(4)), nu_bar).unwrap();
            assert_eq!(f.morse.a(), &a_bar);
            assert_eq!(f.epsilon, morse_state(&a_bar, nu_bar).energy);
        }
        // Oscillator levels from l_0 = l_bar + 2 nu_bar.
        let l_bar = qi(1);
        for nu_bar in 0..4u64 {
            let a = (&l_bar + qi(2 * nu_bar as i64) + q(1, 2)) / qi(2);
            let inv = pct_inverse(&MorseParams::new(a, qi(1)).unwrap(), nu_bar).unwrap();
            assert_eq!(inv.radial.l(), &l_bar);
            assert_eq!(inv.energy, radial(l_bar.clone(), qi(4)).level(nu_bar));
        }
    }

    #[test]
    fn inverse_example_and_round_trip() {
        let inv = pct_inverse(&MorseParams::new(q(5, 2), qi(1)).unwrap(), 0).unwrap();
        assert_eq!(inv.radial.omega(), &qi(4));
        assert_eq!(inv.l0, q(9, 2));
        assert_eq!(inv.energy, qi(24));
        assert!(pct_inverse(&MorseParams::new(q(5, 2), qi(1)).unwrap(), 3).is_err());
        let p = radial(q(7, 3), q(5, 2));
        let f = pct_forward(&p, 0).unwrap();
        let back = pct_inverse(&f.morse, 0).unwrap();
        assert_eq!(back.radial, p);
    }

    #[test]
    fn ro_extension_specs() {
        let s = RoExtensionSpec::new(RoType::I, qi(1), qi(4), 1).unwrap();
        assert_eq!(s.g(), PolyQ::from_coeffs(vec![q(3, 2), qi(1)]));
        assert!(RoExtensionSpec::new(RoType::III, qi(3), qi(4), 3).is_err());
        assert!(RoExtensionSpec::new(RoType::II, qi(0), qi(4), 2).is_err());
        let s3 = RoExtensionSpec::new(RoType::III, qi(2), qi(4), 2).unwrap();
        let v = RoExtendedPotential::new(s3);
        assert_eq!(v.spectrum(2)[0].0, -3);
        assert_eq!(v.spectrum(2)[1].0, 0);
    }

    #[test]
    fn rational_conventions_are_related_by_the_map() {
        for (ty, l, m) in [
            (RoType::I, q(1, 1), 2),
            (RoType::II, q(5, 2), 2),
            (RoType::III, q(7, 2), 2),
        ] {
            let spec = RoExtensionSpec::new(ty, l, qi(4), m).unwrap();
            let ro = RoExtendedPotential::new(spec.clone());
            let h = QesHierarchy::new(spec);
            let b = 1.0;
            for r in [0.2, 0.7, 1.5, 3.0] {
                let x = x_of_r(r);
                let morse_side = h.rational().eval_z(z_of_x(b, x));
                assert!(
                    (morse_side - 0.25 * (-x).exp() * ro.rational_part(r)).abs() < 1e-12 * (1.0 + morse_side.abs())
                );
            }
        }
        // Morse-extension and inverse-map radial conventions.
        let spec = ExtensionSpec::new(Family::II, q(1, 4), qi(1), 3).unwrap();
        let ext = crate::extensions::build_extension(spec.clone()).unwrap();
        let qr = qes_ro_build(&spec, 0).unwrap();
        for r in [0.3, 1.0, 2.0] {
            let x = x_of_r(r);
            let lhs = qr.rat.eval_z(qr.radial.z(r));
            let rhs = 4.0 / (r * r) * ext.rational_part(x);
            assert!((lhs - rhs).abs() < 1e-12 * (1.0 + lhs.abs()));
        }
    }

    #[test]
    fn qes_explicit_forms() {
        for (ty, l, m) in [
            (RoType::I, q(1, 1), 1),
            (RoType::II, q(3, 2), 1),
            (RoType::I, q(1, 2), 2),
            (RoType::II, q(5, 2), 2),
            (RoType::III, q(7, 2), 2),
        ] {
            let spec = RoExtensionSpec::new(ty, l, q(8, 3), m).unwrap();
            let a0 = to_f64(&spec.a0());
            let b = 2.0 / 3.0;
            let h = QesHierarchy::new(spec);
            for i in 0..=200 {
                let x = -5.0 + 0.1 * i as f64;
                let generic = h.rational().eval_z(z_of_x(b, x)) - m as f64;
                let closed = qes_explicit_rational_part(ty, m, a0, b, x).unwrap();
                assert!(
                    (generic - closed).abs() < 1e-12 * (1.0 + generic.abs()),
                    "{ty} m={m} x={x}: {generic} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn qes_eigenfunctions_solve_their_equation() {
        for (ty, m) in [
            (RoType::I, 1),
            (RoType::I, 2),
            (RoType::II, 1),
            (RoType::II, 2),
            (RoType::III, 2),
        ] {
            let spec = RoExtensionSpec::new(ty, qi(3), qi(4), m).unwrap();
            let h = QesHierarchy::new(spec.clone());
            let nus: Vec<i64> = if ty == RoType::III {
                vec![-3, 0, 1]
            } else {
                vec![0, 1, 2]
            };
            for nu in nus {
                let member = h.member(nu).unwrap();
                assert!(Arc::ptr_eq(&member.rat, h.rational()));
                let grid = Grid::new(-3.0, 10.0, 5001).unwrap();
                let res = schrodinger_residual(&member, to_f64(&member.epsilon), &|x| member.eigenfunction(x), &grid);
                assert!(res.refined < 1e-6, "{ty} m={m} nu={nu}: {res:?}");
            }
        }
    }

    #[test]
    fn qes_ro_energies() {
        let s2 = ExtensionSpec::new(Family::II, q(1, 4), qi(1), 3).unwrap();
        for nu in [0, 1] {
            let b = qes_ro_build(&s2, nu).unwrap();
            assert_eq!(b.l0, qi(2));
            assert_eq!(b.energy, b.radial.omega() * (&b.l0 - q(1, 2)));
            assert_eq!(b.position().unwrap(), nu as usize);
        }
        let s3 = ExtensionSpec::new(Family::III, qi(2), qi(1), 2).unwrap();
        for nu in [-3, 0] {
            let b = qes_ro_build(&s3, nu).unwrap();
            assert_eq!(b.energy, b.radial.omega() * (&b.l0 + q(7, 2)));
            let grid = Grid::new(0.05, 5.0, 4001).unwrap();
            let res = schrodinger_residual(&b, to_f64(&b.energy), &|r| b.eigenfunction(r), &grid);
            assert!(res.refined < 1e-6, "nu={nu}: {res:?}");
        }
    }
}
