//! Ground-state deletion on a type II extension and the two-path diagram
//! `V_{A+1} -> V_A -> V^{(m-1)}_{A-1,ext}` versus
//! `V_{A+1} -> V^{(m)}_{A,ext} -> V^{(m-1)}_{A-1,ext}`.

use num_traits::One;

use super::{g_poly, ExtendedPotential, ExtensionSpec, Family};
use crate::error::{Error, Result};
use crate::morse::MorseParams;
use crate::potential::Potential;
use crate::rational::{format_rational, qi, to_f64, Q};
use crate::susy::{partner_potential, Branch, ConfluentSolution, FactoredSeed, PartnerPotential};

/// Closed form of the partner: conventional for `m = 1`, extended otherwise.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum EnlargedForm {
    Conventional(MorseParams),
    Extended(ExtendedPotential),
}

impl Potential for EnlargedForm {
    fn value(&self, x: f64) -> f64 {
        match self {
            EnlargedForm::Conventional(p) => p.value(x),
            EnlargedForm::Extended(e) => e.value(x),
        }
    }
}

/// `V^(-)` obtained by deleting the ground state of a type II extension.
#[derive(Clone, Debug, PartialEq)]
pub struct EnlargedPartner {
    /// Ground state `exp(-(A+1)x - z/2) g^{(A-1)}_{m-1} / g^{(A)}_m`.
    pub seed: FactoredSeed,
    pub susy: PartnerPotential,
    pub closed_form: EnlargedForm,
}

impl EnlargedPartner {
    pub fn is_conventional(&self) -> bool {
        matches!(self.closed_form, EnlargedForm::Conventional(_))
    }
}

/// Partner of `V^{(m)}_{A,B,ext}` under ground-state deletion. The spec is
/// not range-checked so that boundary cases can be studied; `g^{(A)}_m` and
/// `g^{(A-1)}_{m-1}` must still be nodeless on `(0, inf)`.
pub fn enlarged_partner(spec: &ExtensionSpec) -> Result<EnlargedPartner> {
    if spec.family == Family::III {
        // Deleting the added ground state just undoes the type III step.
        return Err(Error::InverseConstruction {
            a_minus_one: format_rational(&(&spec.a - Q::one())),
        });
    }
    if spec.m < 1 {
        return Err(Error::range("m >= 1", format!("m = {}", spec.m)));
    }
    let a = &spec.a;
    let b = &spec.b;
    let a_plus = a + Q::one();
    let seed = FactoredSeed::new(
        b.clone(),
        -a_plus.clone(),
        -Q::one() / qi(2),
        vec![
            (g_poly(Family::II, &(a - Q::one()), spec.m - 1), 1),
            (g_poly(Family::II, a, spec.m), -1),
        ],
        -(&a_plus * &a_plus),
    );
    let w = seed.superpotential()?;
    let susy = partner_potential(&w, to_f64(seed.energy()));
    let lower_a = a - Q::one();
    let closed_form = if spec.m == 1 {
        EnlargedForm::Conventional(MorseParams::new(lower_a, b.clone())?)
    } else {
        EnlargedForm::Extended(ExtendedPotential::assemble(ExtensionSpec::unchecked(
            Family::II,
            lower_a,
            b.clone(),
            spec.m - 1,
        ))?)
    };
    Ok(EnlargedPartner {
        seed,
        susy,
        closed_form,
    })
}

/// Both routes from `V_{A+1,B}` to `V^{(m-1)}_{A-1,B,ext}`, each built by
/// two explicit SUSY steps.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutativeDiagram {
    /// `V_{A+1} -> V_A` by ground-state deletion.
    pub top: PartnerPotential,
    /// `V_A -> V^{(m-1)}_{A-1,ext}` with the seed `phi^II_{A,m-1}`.
    pub right: PartnerPotential,
    /// `V_{A+1} -> V^{(m)}_{A,ext}` with the seed `phi^II_{A+1,m}`.
    pub left: PartnerPotential,
    /// `V^{(m)}_{A,ext} -> V^{(m-1)}_{A-1,ext}` by ground-state deletion.
    pub bottom: EnlargedPartner,
    pub corner_a: MorseParams,
    pub corner_ext: ExtendedPotential,
}

pub fn commutative_diagram(a: &Q, b: &Q, m: usize) -> Result<CommutativeDiagram> {
    if m < 1 {
        return Err(Error::range("m >= 1", format!("m = {m}")));
    }
    let a_plus = a + Q::one();
    let start = MorseParams::new(a_plus.clone(), b.clone())?;
    let corner_a = MorseParams::new(a.clone(), b.clone())?;

    let ground = FactoredSeed::morse_ground(&start);
    let top = partner_potential(&ground.superpotential()?, to_f64(ground.energy()));
    // For m = 1 this seed is the ground state of V_A, i.e. a second SI step.
    let right_seed = ConfluentSolution::new(Branch::F1, a.clone(), m - 1).factored(b.clone());
    let right = partner_potential(&right_seed.superpotential()?, to_f64(right_seed.energy()));

    let spec = ExtensionSpec::unchecked(Family::II, a.clone(), b.clone(), m);
    let left_seed = spec.seed();
    let left = partner_potential(&left_seed.superpotential()?, to_f64(left_seed.energy()));
    let corner_ext = ExtendedPotential::assemble(spec.clone())?;
    let bottom = enlarged_partner(&spec)?;
    Ok(CommutativeDiagram {
        top,
        right,
        left,
        bottom,
        corner_a,
        corner_ext,
    })
}

impl CommutativeDiagram {
    /// Largest scaled discrepancy `|u - v| / (1 + |u|)` over `xs` among: the
    /// two paths, each path against the closed form, and each intermediate
    /// against its closed form.
    pub fn max_discrepancy(&self, xs: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        let mut upd = |u: f64, v: f64| {
            let d = (u - v).abs() / (1.0 + u.abs());
            worst = worst.max(if d.is_nan() { f64::INFINITY } else { d });
        };
        for &x in xs {
            let path_a = self.right.value(x);
            let path_b = self.bottom.susy.value(x);
            let closed = self.bottom.closed_form.value(x);
            upd(path_a, path_b);
            upd(closed, path_a);
            upd(closed, path_b);
            upd(self.corner_a.value(x), self.top.value(x));
            upd(self.corner_ext.value(x), self.left.value(x));
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn xs() -> Vec<f64> {
        (0..=2000).map(|i| -5.0 + 20.0 * i as f64 / 2000.0).collect()
    }

    #[test]
    fn diagram_commutes() {
        for (a, m) in [(q(1, 4), 3), (qi(0), 2), (q(-1, 2), 1), (q(1, 3), 4), (q(9, 10), 5)] {
            let d = commutative_diagram(&a, &qi(1), m).unwrap();
            let worst = d.max_discrepancy(&xs());
            assert!(worst < 1e-12, "A={a} m={m}: {worst}");
            assert_eq!(d.bottom.is_conventional(), m == 1);
        }
    }

    #[test]
    fn type_three_is_the_inverse_step() {
        let spec = ExtensionSpec::new(Family::III, qi(2), qi(1), 2).unwrap();
        match enlarged_partner(&spec) {
            Err(Error::InverseConstruction { a_minus_one }) => assert_eq!(a_minus_one, "1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn m_two_partner_has_no_bound_state() {
        let spec = ExtensionSpec::new(Family::II, q(-1, 2), qi(1), 2).unwrap();
        let p = enlarged_partner(&spec).unwrap();
        match p.closed_form {
            EnlargedForm::Extended(e) => {
                assert_eq!(e.spec().m, 1);
                assert!(e.spectrum().is_empty());
            }
            other => panic!("{other:?}"),
        }
    }
}
