//! Type II and type III rationally-extended Morse potentials
//! `V_ext = V_{A,B} - 2z { g'/g + z [g''/g - (g'/g)^2] }`.

mod diagram;
mod explicit;
mod ypoly;

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laguerre::{laguerre_coeffs, LaguerreSpec};
use crate::morse::{nu_max, z_of_x, MorseParams};
use crate::poly::PolyQ;
use crate::potential::{Potential, RationalConvention, RationalPart};
use crate::rational::{qi, Q};
use crate::roots::count_positive_roots;
use crate::susy::{Branch, ConfluentSolution, FactoredSeed};

pub use diagram::{commutative_diagram, enlarged_partner, CommutativeDiagram, EnlargedForm, EnlargedPartner};
pub use explicit::{explicit_rational_part, has_explicit_form};
pub use ypoly::{extension_wavefunction, ode_residual, y_identity_residual, y_polynomial, ExtensionState, YPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    II,
    III,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::II => "II",
            Family::III => "III",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "II" | "2" => Ok(Family::II),
            "III" | "3" => Ok(Family::III),
            other => Err(Error::Parse(format!("unknown family '{other}' (expected II or III)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionSpec {
    pub family: Family,
    pub a: Q,
    pub b: Q,
    pub m: usize,
}

impl ExtensionSpec {
    /// Validated spec: family II needs `m >= 1` and `-1 < A < (m-2)/2`,
    /// family III needs even `m >= 2` and `A > 1`.
    pub fn new(family: Family, a: Q, b: Q, m: usize) -> Result<Self> {
        if !b.is_positive() {
            return Err(Error::range("B > 0", format!("B = {b}")));
        }
        match family {
            Family::II => {
                if m < 1 {
                    return Err(Error::range("m >= 1", format!("m = {m}")));
                }
                if a <= qi(-1) {
                    return Err(Error::range("-1 < A", format!("A = {a}")));
                }
                let upper = qi(m as i64 - 2) / qi(2);
                if a >= upper {
                    return Err(Error::range("A < (m-2)/2", format!("A = {a}, (m-2)/2 = {upper}")));
                }
            }
            Family::III => {
                if m < 2 || m % 2 == 1 {
                    return Err(Error::range("m in {2, 4, 6, ...}", format!("m = {m}")));
                }
                if a <= qi(1) {
                    return Err(Error::range("A > 1", format!("A = {a}")));
                }
            }
        }
        Ok(ExtensionSpec { family, a, b, m })
    }

    /// Skips the parameter-range checks. Used for limiting cases on the
    /// boundary of the admissible ranges; callers still get a nodelessness
    /// certificate from [`ExtendedPotential::assemble`].
    pub fn unchecked(family: Family, a: Q, b: Q, m: usize) -> Self {
        ExtensionSpec { family, a, b, m }
    }

    pub fn g_spec(&self) -> LaguerreSpec {
        g_spec(self.family, &self.a, self.m)
    }

    pub fn g(&self) -> PolyQ {
        laguerre_coeffs(&self.g_spec())
    }

    /// Morse parameter `A'` of the conventional potential `V^(+)` the
    /// extension is built from.
    pub fn plus_a(&self) -> Q {
        match self.family {
            Family::II => &self.a + Q::one(),
            Family::III => &self.a - Q::one(),
        }
    }

    /// Seed of `V^(+) = V_{A',B}` generating this extension.
    pub fn seed(&self) -> FactoredSeed {
        let branch = match self.family {
            Family::II => Branch::F1,
            Family::III => Branch::F3,
        };
        ConfluentSolution::new(branch, self.plus_a(), self.m).factored(self.b.clone())
    }
}

/// `g^{(A)}_m`: `L_m^{(2A+2-2m)}(z)` (II) or `L_m^{(-2A-2m)}(-z)` (III).
pub fn g_spec(family: Family, a: &Q, m: usize) -> LaguerreSpec {
    let mq = qi(m as i64);
    match family {
        Family::II => LaguerreSpec::positive(m, a * qi(2) + qi(2) - &mq * qi(2)),
        Family::III => LaguerreSpec::negative(m, -(a * qi(2)) - &mq * qi(2)),
    }
}

pub fn g_poly(family: Family, a: &Q, m: usize) -> PolyQ {
    laguerre_coeffs(&g_spec(family, a, m))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedPotential {
    spec: ExtensionSpec,
    core: MorseParams,
    rat: RationalPart,
}

impl ExtendedPotential {
    /// Assembles `V_core + V_rat` after certifying that `g` has no root on
    /// `(0, inf)`; parameter ranges are not checked here.
    pub fn assemble(spec: ExtensionSpec) -> Result<Self> {
        let core = MorseParams::new(spec.a.clone(), spec.b.clone())?;
        let g = spec.g();
        let roots = count_positive_roots(&g)?;
        if roots > 0 {
            return Err(Error::NotNodeless {
                what: format!("g = {g}"),
                roots,
                interval: "(0, inf)".into(),
            });
        }
        let rat = RationalPart::new(g, RationalConvention::MorseExtension, 0.0);
        Ok(ExtendedPotential { spec, core, rat })
    }

    pub fn spec(&self) -> &ExtensionSpec {
        &self.spec
    }

    pub fn core(&self) -> &MorseParams {
        &self.core
    }

    pub fn g(&self) -> &PolyQ {
        self.rat.g()
    }

    pub fn rational(&self) -> &RationalPart {
        &self.rat
    }

    pub fn z(&self, x: f64) -> f64 {
        z_of_x(self.core.b_f64(), x)
    }

    pub fn rational_part(&self, x: f64) -> f64 {
        self.rat.eval_z(self.z(x))
    }

    pub fn value(&self, x: f64) -> f64 {
        self.core.value(x) + self.rational_part(x)
    }

    /// Analytic bound-state energies as `(nu, epsilon)`, lowest first.
    pub fn spectrum(&self) -> Vec<(i64, Q)> {
        spectrum_of(&self.spec)
    }
}

impl Potential for ExtendedPotential {
    fn value(&self, x: f64) -> f64 {
        ExtendedPotential::value(self, x)
    }
}

pub fn build_extension(spec: ExtensionSpec) -> Result<ExtendedPotential> {
    let spec = ExtensionSpec::new(spec.family, spec.a, spec.b, spec.m)?;
    ExtendedPotential::assemble(spec).map_err(|e| match e {
        Error::NotNodeless { what, roots, interval } => Error::NotNodeless {
            what: format!("internal consistency: admissible {what}"),
            roots,
            interval,
        },
        other => other,
    })
}

pub fn extended_potential_eval(ext: &ExtendedPotential, x: f64) -> f64 {
    ext.value(x)
}

fn spectrum_of(spec: &ExtensionSpec) -> Vec<(i64, Q)> {
    let level = |nu: i64| {
        let d = spec.plus_a() - qi(nu);
        -(&d * &d)
    };
    let mut out = Vec::new();
    if spec.family == Family::III {
        out.push((-(spec.m as i64) - 1, level(-(spec.m as i64) - 1)));
    }
    if let Some(top) = nu_max(&spec.plus_a()) {
        out.extend((0..=top as i64).map(|nu| (nu, level(nu))));
    }
    out
}

/// Type II: `-(A+1-nu)^2`, `nu = 0..=ceil(A+1)-1`; type III additionally
/// `-(A+m)^2` at `nu = -m-1`, then `-(A-1-nu)^2`.
pub fn extension_spectrum(spec: &ExtensionSpec) -> Result<Vec<(i64, Q)>> {
    let spec = ExtensionSpec::new(spec.family, spec.a.clone(), spec.b.clone(), spec.m)?;
    Ok(spectrum_of(&spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::susy::SusyPair;

    fn spec(family: Family, a: Q, m: usize) -> ExtensionSpec {
        ExtensionSpec::new(family, a, qi(1), m).unwrap()
    }

    #[test]
    fn build_examples() {
        let ext = build_extension(spec(Family::II, q(-3, 4), 1)).unwrap();
        assert_eq!(ext.g(), &laguerre_coeffs(&LaguerreSpec::positive(1, q(-3, 2))));
        let err = ExtensionSpec::new(Family::II, q(1, 2), qi(1), 2).unwrap_err();
        assert!(matches!(err, Error::ParameterRange { ref inequality, .. } if inequality == "A < (m-2)/2"));
        let err = ExtensionSpec::new(Family::III, qi(2), qi(1), 3).unwrap_err();
        assert!(matches!(err, Error::ParameterRange { ref inequality, .. } if inequality.starts_with("m in")));
        assert!(ExtensionSpec::new(Family::III, qi(1), qi(1), 2).is_err());
        assert!(ExtensionSpec::new(Family::II, qi(-1), qi(1), 3).is_err());
    }

    #[test]
    fn potential_value_example() {
        let ext = build_extension(spec(Family::II, q(-3, 4), 1)).unwrap();
        assert!((ext.rational_part(0.0) + 0.32).abs() < 1e-15);
        assert!((ext.value(0.0) - (ext.core().value(0.0) - 0.32)).abs() < 1e-15);
        assert!(ext.rational_part(60.0).abs() < 1e-20);
    }

    #[test]
    fn spectra() {
        let s = |f, a, m| extension_spectrum(&spec(f, a, m)).unwrap();
        assert_eq!(s(Family::II, q(-3, 4), 1), vec![(0, q(-1, 16))]);
        assert_eq!(s(Family::III, qi(2), 2), vec![(-3, qi(-16)), (0, qi(-1))]);
        assert_eq!(s(Family::II, q(1, 4), 3), vec![(0, q(-25, 16)), (1, q(-1, 16))]);
        assert_eq!(
            s(Family::III, q(5, 2), 4),
            vec![(-5, q(-169, 4)), (0, q(-9, 4)), (1, q(-1, 4))]
        );
    }

    #[test]
    fn agrees_with_susy_partner() {
        let cases = [
            (Family::II, q(-3, 4), 1),
            (Family::II, q(-1, 2), 2),
            (Family::II, q(1, 4), 3),
            (Family::II, q(7, 5), 5),
            (Family::III, qi(2), 2),
            (Family::III, q(5, 2), 4),
        ];
        for (family, a, m) in cases {
            let s = spec(family, a, m);
            let ext = build_extension(s.clone()).unwrap();
            let plus = MorseParams::new(s.plus_a(), s.b.clone()).unwrap();
            let pair = SusyPair::from_morse(&plus, s.seed()).unwrap();
            for i in 0..=200 {
                let x = -5.0 + 0.1 * i as f64;
                let v = ext.value(x);
                let p = pair.v_minus.value(x);
                assert!((v - p).abs() <= 1e-12 * (1.0 + v.abs()), "{family} x={x}: {v} vs {p}");
            }
        }
    }

    #[test]
    fn family_parse() {
        assert_eq!("ii".parse::<Family>().unwrap(), Family::II);
        assert_eq!("III".parse::<Family>().unwrap(), Family::III);
        assert!("IV".parse::<Family>().is_err());
    }
}
