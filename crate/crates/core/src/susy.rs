//! First-order SUSY machinery for Morse-type problems.
//!
//! Seeds are carried in the factored form
//! `phi(x) = exp(s x + c z) * prod_i P_i(z)^{k_i}` with `z = 2B e^{-x}`, so the
//! superpotential `W = -(log phi)'` and its derivative are closed-form
//! expressions in `P_i, P_i', P_i''`:
//!
//! ```text
//! W  = -s + c z + sum_i k_i z P_i'/P_i
//! W' = -z [ c + sum_i k_i (P_i'/P_i + z (P_i''/P_i - (P_i'/P_i)^2)) ]
//! ```

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::extensions::Family;
use crate::laguerre::{laguerre_coeffs, LaguerreSpec};
use crate::morse::{z_of_x, MorseParams};
use crate::numerics::fd::{intertwining_residual, IntertwiningReport};
use crate::numerics::Grid;
use crate::poly::{PolyF64, PolyQ};
use crate::potential::Potential;
use crate::rational::{qi, to_f64, Q};
use crate::roots::count_positive_roots;

/// Seed solution in factored form. No physical validation is applied; use
/// [`SeedFunction`] for the admissible Laguerre seeds.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredSeed {
    b: Q,
    x_rate: Q,
    z_rate: Q,
    factors: Vec<(PolyQ, i32)>,
    energy: Q,
}

/// Growth rates of a factored function at the two ends of the real line.
#[derive(Clone, Debug, PartialEq)]
pub struct Asymptotics {
    /// `phi ~ e^{rate x}` as `x -> +inf`.
    pub right_rate: Q,
    /// Coefficient of `z` in the exponent; negative means double-exponential
    /// decay as `x -> -inf`.
    pub left_z_rate: Q,
    /// `phi ~ e^{rate x}` as `x -> -inf` when `left_z_rate == 0`.
    pub left_rate: Q,
}

impl Asymptotics {
    pub fn square_integrable(&self) -> bool {
        let right = self.right_rate.is_negative();
        let left = if self.left_z_rate.is_zero() {
            self.left_rate.is_positive()
        } else {
            self.left_z_rate.is_negative()
        };
        right && left
    }
}

impl FactoredSeed {
    /// `exp(x_rate * x + z_rate * z) * prod P_i(z)^{k_i}` at energy `energy`.
    pub fn new(b: Q, x_rate: Q, z_rate: Q, factors: Vec<(PolyQ, i32)>, energy: Q) -> Self {
        FactoredSeed {
            b,
            x_rate,
            z_rate,
            factors: factors.into_iter().filter(|(_, k)| *k != 0).collect(),
            energy,
        }
    }

    /// Ground state `exp(-A x - B e^{-x})` of `V_{A,B}`.
    pub fn morse_ground(params: &MorseParams) -> Self {
        let a = params.a().clone();
        Self::new(
            params.b().clone(),
            -a.clone(),
            -Q::one() / qi(2),
            Vec::new(),
            -(&a * &a),
        )
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn energy(&self) -> &Q {
        &self.energy
    }

    pub fn factors(&self) -> &[(PolyQ, i32)] {
        &self.factors
    }

    pub fn x_rate(&self) -> &Q {
        &self.x_rate
    }

    pub fn z_rate(&self) -> &Q {
        &self.z_rate
    }

    pub fn value(&self, x: f64) -> f64 {
        let z = z_of_x(to_f64(&self.b), x);
        let mut log_mag = to_f64(&self.x_rate) * x + to_f64(&self.z_rate) * z;
        let mut sign = 1.0;
        for (p, k) in &self.factors {
            let v = p.eval_f64(z);
            if v < 0.0 && k % 2 != 0 {
                sign = -sign;
            }
            log_mag += f64::from(*k) * v.abs().ln();
        }
        sign * log_mag.exp()
    }

    pub fn inverse(&self) -> Self {
        FactoredSeed {
            b: self.b.clone(),
            x_rate: -self.x_rate.clone(),
            z_rate: -self.z_rate.clone(),
            factors: self.factors.iter().map(|(p, k)| (p.clone(), -k)).collect(),
            energy: self.energy.clone(),
        }
    }

    /// Every polynomial factor is rootless on `z in (0, inf)`, i.e. the seed
    /// has neither zeros nor poles on the real `x` line.
    pub fn certify_nodeless(&self) -> Result<()> {
        for (p, _) in &self.factors {
            let roots = count_positive_roots(p)?;
            if roots > 0 {
                return Err(Error::NotNodeless {
                    what: format!("seed factor {p}"),
                    roots,
                    interval: "(0, inf)".into(),
                });
            }
        }
        Ok(())
    }

    pub fn asymptotics(&self) -> Asymptotics {
        let mut right = self.x_rate.clone();
        let mut left = self.x_rate.clone();
        for (p, k) in &self.factors {
            let ord = p.lowest_order().unwrap_or(0);
            let deg = p.degree().unwrap_or(0);
            right -= qi(i64::from(*k) * ord as i64);
            left -= qi(i64::from(*k) * deg as i64);
        }
        Asymptotics {
            right_rate: right,
            left_z_rate: self.z_rate.clone(),
            left_rate: left,
        }
    }

    pub fn is_normalizable(&self) -> bool {
        self.asymptotics().square_integrable()
    }

    pub fn inverse_is_normalizable(&self) -> bool {
        self.inverse().asymptotics().square_integrable()
    }

    /// `W = -(log phi)'` in closed form; fails if the seed has a zero or pole.
    pub fn superpotential(&self) -> Result<Superpotential> {
        self.certify_nodeless()?;
        Ok(Superpotential {
            b: to_f64(&self.b),
            x_rate: to_f64(&self.x_rate),
            z_rate: to_f64(&self.z_rate),
            factors: self.factors.iter().map(|(p, k)| (p.to_f64(), f64::from(*k))).collect(),
        })
    }
}

/// Superpotential of a factored seed.
#[derive(Clone, Debug, PartialEq)]
pub struct Superpotential {
    b: f64,
    x_rate: f64,
    z_rate: f64,
    factors: Vec<(PolyF64, f64)>,
}

impl Superpotential {
    /// `(W, W')` at `x`.
    pub fn eval(&self, x: f64) -> (f64, f64) {
        let z = z_of_x(self.b, x);
        let mut w = -self.x_rate + self.z_rate * z;
        let mut inner = self.z_rate;
        for (p, k) in &self.factors {
            let (v, d, dd) = p.eval_with_derivatives(z);
            let r = d / v;
            w += k * z * r;
            inner += k * (r + z * (dd / v - r * r));
        }
        (w, -z * inner)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.eval(x).0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.eval(x).1
    }
}

/// `V^(-) = W^2 + W' + epsilon`.
#[derive(Clone, Debug, PartialEq)]
pub struct PartnerPotential {
    w: Superpotential,
    epsilon: f64,
}

impl PartnerPotential {
    pub fn superpotential(&self) -> &Superpotential {
        &self.w
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `W^2 - W' + epsilon`, which must reproduce the starting potential.
    pub fn plus_reconstruction(&self, x: f64) -> f64 {
        let (w, dw) = self.w.eval(x);
        w * w - dw + self.epsilon
    }
}

impl Potential for PartnerPotential {
    fn value(&self, x: f64) -> f64 {
        let (w, dw) = self.w.eval(x);
        w * w + dw + self.epsilon
    }
}

pub fn partner_potential(w: &Superpotential, epsilon: f64) -> PartnerPotential {
    PartnerPotential { w: w.clone(), epsilon }
}

pub fn superpotential(seed: &FactoredSeed) -> Result<Superpotential> {
    seed.superpotential()
}

/// SUSY case: ground-state deletion, strict isospectrality, or a new
/// ground state added at the factorization energy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SusyCase {
    I,
    II,
    III,
}

impl fmt::Display for SusyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SusyCase::I => "i",
            SusyCase::II => "ii",
            SusyCase::III => "iii",
        };
        f.write_str(s)
    }
}

pub fn classify_case(
    epsilon: &Q,
    seed_normalizable: bool,
    inverse_normalizable: bool,
    ground_energy: &Q,
) -> Result<SusyCase> {
    if epsilon > ground_energy {
        return Err(Error::EnergyAboveGround {
            epsilon: epsilon.to_string(),
            ground: ground_energy.to_string(),
        });
    }
    if epsilon == ground_energy {
        return if seed_normalizable {
            Ok(SusyCase::I)
        } else {
            Err(Error::range(
                "seed is the normalizable ground state when epsilon equals the ground energy",
                "seed is not square integrable",
            ))
        };
    }
    Ok(if inverse_normalizable {
        SusyCase::III
    } else {
        SusyCase::II
    })
}

/// A SUSY partner pair built from a seed of `V^(+)`.
pub struct SusyPair {
    pub seed: FactoredSeed,
    pub v_plus: Arc<dyn Potential>,
    pub w: Superpotential,
    pub v_minus: PartnerPotential,
    pub epsilon: Q,
    pub case: SusyCase,
}

impl SusyPair {
    /// `ground_energy` is the lowest level of `V^(+)` (use `0`, the
    /// continuum threshold, when `V^(+)` has no bound state).
    pub fn new(seed: FactoredSeed, v_plus: Arc<dyn Potential>, ground_energy: &Q) -> Result<Self> {
        let w = seed.superpotential()?;
        let epsilon = seed.energy().clone();
        let case = classify_case(
            &epsilon,
            seed.is_normalizable(),
            seed.inverse_is_normalizable(),
            ground_energy,
        )?;
        let v_minus = partner_potential(&w, to_f64(&epsilon));
        Ok(SusyPair {
            seed,
            v_plus,
            w,
            v_minus,
            epsilon,
            case,
        })
    }

    /// Morse `V_{A,B}` with one of its seeds; the ground energy is `-A^2`
    /// when `A > 0` and the threshold `0` otherwise.
    pub fn from_morse(params: &MorseParams, seed: FactoredSeed) -> Result<Self> {
        let a = params.a();
        let ground = if a.is_positive() { -(a * a) } else { Q::zero() };
        Self::new(seed, Arc::new(params.clone()), &ground)
    }

    /// `(A H^(+) - H^(-) A) psi` on `grid`. `epsilon_offset` shifts the
    /// energy used in `H^(-)`, which breaks the identity on purpose.
    pub fn intertwining_residual(
        &self,
        psi: &dyn Fn(f64) -> f64,
        grid: &Grid,
        epsilon_offset: f64,
    ) -> IntertwiningReport {
        let eps = to_f64(&self.epsilon);
        let shifted = partner_potential(&self.w, eps + epsilon_offset);
        intertwining_residual(&*self.v_plus, &shifted, &self.w, psi, grid)
    }
}

/// The admissible Laguerre seeds of `V_{A',B}`:
/// family II `z^{A'-m} e^{-z/2} L_m^{(2A'-2m)}(z)` with `A' < m/2`, and
/// family III `z^{-A'-m-1} e^{z/2} L_m^{(-2A'-2m-2)}(-z)` with even `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedFunction {
    pub family: Family,
    pub a_prime: Q,
    pub m: usize,
    pub b: Q,
    pub energy: Q,
    pub laguerre: LaguerreSpec,
}

impl SeedFunction {
    pub fn new(family: Family, a_prime: Q, m: usize, b: Q) -> Result<Self> {
        if !b.is_positive() {
            return Err(Error::range("B > 0", format!("B = {b}")));
        }
        let mq = qi(m as i64);
        let (energy, laguerre) = match family {
            Family::II => {
                if m < 1 {
                    return Err(Error::range("m >= 1", format!("m = {m}")));
                }
                if a_prime >= &mq / qi(2) {
                    return Err(Error::range("A' < m/2", format!("A' = {a_prime}, m = {m}")));
                }
                let d = &a_prime - &mq;
                (-(&d * &d), LaguerreSpec::positive(m, d * qi(2)))
            }
            Family::III => {
                if m < 2 || m % 2 == 1 {
                    return Err(Error::range("m in {2, 4, 6, ...}", format!("m = {m}")));
                }
                let d = &a_prime + &mq + Q::one();
                let alpha = -(&d * qi(2));
                (-(&d * &d), LaguerreSpec::negative(m, alpha))
            }
        };
        if energy >= -(&a_prime * &a_prime) {
            return Err(Error::range(
                "epsilon < -A'^2",
                format!("epsilon = {energy}, A' = {a_prime}"),
            ));
        }
        let seed = SeedFunction {
            family,
            a_prime,
            m,
            b,
            energy,
            laguerre,
        };
        seed.factored().certify_nodeless()?;
        Ok(seed)
    }

    /// Builds the seed corresponding to a polynomial branch of the confluent
    /// equation. Only `f1` (family II) and `f3` (family III) are accepted.
    pub fn from_confluent(sol: &ConfluentSolution, b: Q) -> Result<Self> {
        let family = match sol.branch {
            Branch::F1 => Family::II,
            Branch::F3 => Family::III,
            other => {
                return Err(Error::Unsupported(format!(
                    "seed construction from branch {other:?} (equivalent to f1/f3 up to lambda -> -lambda)"
                )))
            }
        };
        Self::new(family, sol.morse_a.clone(), sol.m, b)
    }

    pub fn factored(&self) -> FactoredSeed {
        let mq = qi(self.m as i64);
        let half = Q::one() / qi(2);
        let (x_rate, z_rate) = match self.family {
            Family::II => (-(&self.a_prime - &mq), -half),
            Family::III => (&self.a_prime + &mq + Q::one(), half),
        };
        FactoredSeed::new(
            self.b.clone(),
            x_rate,
            z_rate,
            vec![(laguerre_coeffs(&self.laguerre), 1)],
            self.energy.clone(),
        )
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.factored().value(x)
    }
}

pub fn seed_eval(seed: &SeedFunction, x: f64) -> f64 {
    seed.eval(x)
}

/// The four polynomial branches of the confluent hypergeometric equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `L_m^{(b-1)}(z)`, `a = -m`.
    F1,
    /// `z^{1-b} L_m^{(1-b)}(z)`, `b - a = m + 1`.
    F2,
    /// `e^z L_m^{(b-1)}(-z)`, `b - a = -m`.
    F3,
    /// `z^{1-b} e^z L_m^{(1-b)}(-z)`, `a = m + 1`.
    F4,
}

/// A polynomial-type solution `phi = z^lambda e^{-z/2} f(z)` of the Morse
/// equation, with `epsilon = -lambda^2`, `a = lambda - A`, `b = 2 lambda + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfluentSolution {
    pub branch: Branch,
    pub morse_a: Q,
    pub m: usize,
    pub lambda: Q,
    pub a: Q,
    pub b: Q,
    pub poly: LaguerreSpec,
}

impl ConfluentSolution {
    pub fn new(branch: Branch, morse_a: Q, m: usize) -> Self {
        let mq = qi(m as i64);
        let lambda = match branch {
            Branch::F1 => &morse_a - &mq,
            Branch::F2 => &mq - &morse_a,
            Branch::F3 => -(&morse_a + &mq + Q::one()),
            Branch::F4 => &morse_a + &mq + Q::one(),
        };
        let a = &lambda - &morse_a;
        let b = &lambda * qi(2) + Q::one();
        let poly = match branch {
            Branch::F1 => LaguerreSpec::positive(m, &b - Q::one()),
            Branch::F2 => LaguerreSpec::positive(m, Q::one() - &b),
            Branch::F3 => LaguerreSpec::negative(m, &b - Q::one()),
            Branch::F4 => LaguerreSpec::negative(m, Q::one() - &b),
        };
        ConfluentSolution {
            branch,
            morse_a,
            m,
            lambda,
            a,
            b,
            poly,
        }
    }

    pub fn energy(&self) -> Q {
        -(&self.lambda * &self.lambda)
    }

    /// Checks the stored relations and the branch condition.
    pub fn is_consistent(&self) -> bool {
        let mq = qi(self.m as i64);
        let relations = self.a == &self.lambda - &self.morse_a && self.b == &self.lambda * qi(2) + Q::one();
        let cond = match self.branch {
            Branch::F1 => self.a == -mq,
            Branch::F2 => &self.b - &self.a == mq + Q::one(),
            Branch::F3 => &self.b - &self.a == -mq,
            Branch::F4 => self.a == mq + Q::one(),
        };
        relations && cond
    }

    pub fn factored(&self, b_param: Q) -> FactoredSeed {
        let half = Q::one() / qi(2);
        // z^lambda -> e^{-lambda x}; z^{1-b} z^lambda = z^{-lambda}.
        let (x_rate, z_rate) = match self.branch {
            Branch::F1 => (-self.lambda.clone(), -half),
            Branch::F2 => (self.lambda.clone(), -half),
            Branch::F3 => (-self.lambda.clone(), half),
            Branch::F4 => (self.lambda.clone(), half),
        };
        FactoredSeed::new(
            b_param,
            x_rate,
            z_rate,
            vec![(laguerre_coeffs(&self.poly), 1)],
            self.energy(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::fd::schrodinger_residual;
    use crate::rational::q;

    fn morse(a: Q, b: Q) -> MorseParams {
        MorseParams::new(a, b).unwrap()
    }

    #[test]
    fn seed_examples() {
        let s3 = SeedFunction::new(Family::III, qi(1), 2, qi(1)).unwrap();
        let v = s3.eval(0.0);
        assert!((v - 11.0 * std::f64::consts::E).abs() < 1e-12, "{v}");
        let s2 = SeedFunction::new(Family::II, q(1, 4), 2, qi(1)).unwrap();
        assert_eq!(s2.energy, q(-49, 16));
        match SeedFunction::new(Family::II, qi(1), 2, qi(1)) {
            Err(Error::ParameterRange { inequality, .. }) => assert_eq!(inequality, "A' < m/2"),
            other => panic!("{other:?}"),
        }
        assert!(SeedFunction::new(Family::III, qi(1), 3, qi(1)).is_err());
    }

    #[test]
    fn seed_energy_below_ground() {
        for (an, ad) in [(1, 10), (1, 2), (9, 10), (7, 5)] {
            for m in 1..=5usize {
                let a = q(an, ad);
                if let Ok(s) = SeedFunction::new(Family::II, a.clone(), m, qi(1)) {
                    assert!(s.energy < -(&a * &a));
                }
            }
            for m in [2usize, 4, 6] {
                let a = q(an, ad) + qi(1);
                let s = SeedFunction::new(Family::III, a.clone(), m, qi(1)).unwrap();
                assert!(s.energy < -(&a * &a));
            }
        }
    }

    #[test]
    fn confluent_relations_and_equivalences() {
        let a = q(7, 3);
        for branch in [Branch::F1, Branch::F2, Branch::F3, Branch::F4] {
            for m in 0..5 {
                let sol = ConfluentSolution::new(branch, a.clone(), m);
                assert!(sol.is_consistent(), "{branch:?} m={m}");
                assert_eq!(sol.energy(), -(&sol.lambda * &sol.lambda));
            }
        }
        // f2 reproduces f1 and f4 reproduces f3 as functions.
        for x in [-1.0, 0.3, 2.0] {
            let f1 = ConfluentSolution::new(Branch::F1, a.clone(), 2)
                .factored(qi(1))
                .value(x);
            let f2 = ConfluentSolution::new(Branch::F2, a.clone(), 2)
                .factored(qi(1))
                .value(x);
            assert!((f1 - f2).abs() <= 1e-12 * f1.abs());
            let f3 = ConfluentSolution::new(Branch::F3, a.clone(), 2)
                .factored(qi(1))
                .value(x);
            let f4 = ConfluentSolution::new(Branch::F4, a.clone(), 2)
                .factored(qi(1))
                .value(x);
            assert!((f3 - f4).abs() <= 1e-12 * f3.abs());
        }
        let f2 = ConfluentSolution::new(Branch::F2, a.clone(), 2);
        assert!(SeedFunction::from_confluent(&f2, qi(1)).is_err());
        let f3 = ConfluentSolution::new(Branch::F3, qi(1), 2);
        let seed = SeedFunction::from_confluent(&f3, qi(1)).unwrap();
        assert_eq!(seed.family, Family::III);
    }

    #[test]
    fn all_branches_solve_the_morse_equation() {
        let a = q(3, 2);
        let params = morse(a.clone(), qi(1));
        for branch in [Branch::F1, Branch::F2, Branch::F3, Branch::F4] {
            let seed = ConfluentSolution::new(branch, a.clone(), 3).factored(qi(1));
            let grid = Grid::new(-2.0, 3.0, 5001).unwrap();
            let res = schrodinger_residual(&params, to_f64(seed.energy()), &|x| seed.value(x), &grid);
            assert!(res.refined < 1e-6, "{branch:?}: {res:?}");
        }
    }

    #[test]
    fn superpotential_closed_forms() {
        let p = morse(q(5, 2), qi(1));
        let w = FactoredSeed::morse_ground(&p).superpotential().unwrap();
        for x in [-2.0, 0.0, 1.5, 7.0] {
            assert!((w.value(x) - (2.5 - (-x).exp())).abs() < 1e-14);
            assert!((w.derivative(x) - (-x).exp()).abs() < 1e-14);
        }
        // m = 0 family-II seed is the conventional one with A -> A'.
        let sol = ConfluentSolution::new(Branch::F1, q(5, 2), 0).factored(qi(1));
        let w0 = sol.superpotential().unwrap();
        for x in [-1.0, 0.5, 4.0] {
            assert!((w0.value(x) - w.value(x)).abs() < 1e-14);
        }
        // Family III: W = -(A'+m+1) + B e^{-x} + z L'/L.
        let s3 = SeedFunction::new(Family::III, qi(1), 2, qi(1)).unwrap();
        let w3 = s3.factored().superpotential().unwrap();
        let l = laguerre_coeffs(&s3.laguerre);
        for x in [-1.0f64, 0.0, 2.0] {
            let z = 2.0 * (-x).exp();
            let expect = -4.0 + (-x).exp() + z * l.derivative().eval_f64(z) / l.eval_f64(z);
            assert!((w3.value(x) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn shape_invariance_and_reconstruction() {
        for (an, ad) in [(1, 1), (5, 2), (4, 1)] {
            for (bn, bd) in [(1, 2), (1, 1), (3, 1)] {
                let p = morse(q(an, ad), q(bn, bd));
                let pair = SusyPair::from_morse(&p, FactoredSeed::morse_ground(&p)).unwrap();
                assert_eq!(pair.case, SusyCase::I);
                let lower = morse(q(an, ad) - qi(1), q(bn, bd));
                for i in 0..=200 {
                    let x = -5.0 + 0.1 * i as f64;
                    let scale = 1.0 + p.value(x).abs();
                    assert!((pair.v_minus.value(x) - lower.value(x)).abs() <= 1e-12 * scale);
                    assert!((pair.v_minus.plus_reconstruction(x) - p.value(x)).abs() <= 1e-12 * scale);
                }
            }
        }
    }

    #[test]
    fn case_classification() {
        let p = morse(qi(2), qi(1));
        let ground = FactoredSeed::morse_ground(&p);
        assert!(ground.is_normalizable());
        let ii = SeedFunction::new(Family::II, qi(2), 5, qi(1)).unwrap().factored();
        let iii = SeedFunction::new(Family::III, qi(2), 2, qi(1)).unwrap().factored();
        assert_eq!(SusyPair::from_morse(&p, ground).unwrap().case, SusyCase::I);
        assert_eq!(SusyPair::from_morse(&p, ii).unwrap().case, SusyCase::II);
        assert_eq!(SusyPair::from_morse(&p, iii).unwrap().case, SusyCase::III);
        assert!(classify_case(&qi(0), false, false, &qi(-1)).is_err());
    }

    #[test]
    fn family_two_inverse_is_not_normalizable() {
        for m in 1..6usize {
            for (an, ad) in [(1, 10), (1, 3), (1, 1)] {
                if let Ok(s) = SeedFunction::new(Family::II, q(an, ad), m, qi(1)) {
                    let f = s.factored();
                    assert!(!f.is_normalizable());
                    assert!(!f.inverse_is_normalizable());
                    let a = f.asymptotics();
                    // Grows like e^{(m - A') x} on the right.
                    assert_eq!(a.right_rate, qi(m as i64) - q(an, ad));
                }
            }
        }
    }
}
