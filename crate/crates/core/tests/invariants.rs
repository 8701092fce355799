use std::sync::Arc;

use proptest::prelude::*;
use rextmorse::extensions::ExtensionState;
use rextmorse::numerics::fd::schrodinger_residual;
use rextmorse::numerics::{count_nodes, discrete_residual, morse_domain, solve_with, Grid, SolveOptions};
use rextmorse::pct::QesHierarchy;
use rextmorse::rational::{q, qi, to_f64};
use rextmorse::roots::count_positive_roots;
use rextmorse::susy::{Branch, ConfluentSolution};
use rextmorse::{
    build_extension, morse_spectrum, morse_wavefunction, y_polynomial, ExtensionSpec, Family, MorseParams,
    RoExtensionSpec, RoType, SeedFunction, Q,
};

fn in_type_two_range(num: i64, m: usize) -> Q {
    // -1 < A < (m-2)/2, sampled on a 1/97 lattice.
    let width = qi(m as i64) / qi(2);
    qi(-1) + width * q(num, 97)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn morse_spectrum_is_increasing_and_negative(an in 1i64..200, ad in 1i64..20, b in 1i64..10) {
        let p = MorseParams::new(q(an, ad), q(b, 3)).unwrap();
        let levels: Vec<Q> = morse_spectrum(&p).into_iter().map(|s| s.energy).collect();
        prop_assert!(!levels.is_empty());
        prop_assert!(levels.iter().all(|e| e < &qi(0)));
        prop_assert!(levels.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn confluent_relations_hold(an in -60i64..60, ad in 1i64..7, m in 0usize..8, k in 0usize..4) {
        let branch = [Branch::F1, Branch::F2, Branch::F3, Branch::F4][k];
        let sol = ConfluentSolution::new(branch, q(an, ad), m);
        prop_assert!(sol.is_consistent());
        prop_assert_eq!(sol.energy(), -(&sol.lambda * &sol.lambda));
        prop_assert_eq!(&sol.a, &(&sol.lambda - &sol.morse_a));
        prop_assert_eq!(&sol.b, &(&sol.lambda * qi(2) + qi(1)));
    }

    #[test]
    fn type_two_seeds_sit_below_the_ground_level(num in 1i64..97, m in 1usize..7) {
        // Seeds live on V_{A+1,B}: A' = A + 1 with -1 < A < (m-2)/2.
        let a_prime = in_type_two_range(num, m) + qi(1);
        let seed = SeedFunction::new(Family::II, a_prime.clone(), m, qi(1)).unwrap();
        prop_assert!(seed.energy < -(&a_prime * &a_prime));
    }

    #[test]
    fn type_three_seeds_sit_below_the_ground_level(an in 1i64..400, half_m in 1usize..4) {
        let a_prime = q(an, 40);
        let seed = SeedFunction::new(Family::III, a_prime.clone(), 2 * half_m, qi(1)).unwrap();
        prop_assert!(seed.energy < -(&a_prime * &a_prime));
    }

    #[test]
    fn admissible_denominators_are_nodeless(num in 1i64..97, m in 1usize..8, an in 41i64..400, half_m in 1usize..4) {
        let two = ExtensionSpec::new(Family::II, in_type_two_range(num, m), qi(1), m).unwrap();
        prop_assert_eq!(count_positive_roots(&two.g()).unwrap(), 0);
        let three = ExtensionSpec::new(Family::III, q(an, 40), qi(1), 2 * half_m).unwrap();
        prop_assert_eq!(count_positive_roots(&three.g()).unwrap(), 0);
    }

    #[test]
    fn y_polynomials_have_the_stated_degree_and_leading_coefficient(num in 1i64..97, m in 1usize..6, an in 41i64..300) {
        let a = in_type_two_range(num, m);
        let spec = ExtensionSpec::new(Family::II, a.clone(), qi(1), m).unwrap();
        for (nu, _) in rextmorse::extension_spectrum(&spec).unwrap() {
            let y = y_polynomial(Family::II, &a, m, nu).unwrap();
            prop_assert_eq!(y.poly.degree(), Some(y.n));
            prop_assert_eq!(y.poly.leading().cloned().unwrap(), y.expected_leading());
        }
        let a = q(an, 40);
        let spec = ExtensionSpec::new(Family::III, a.clone(), qi(1), 2).unwrap();
        for (nu, _) in rextmorse::extension_spectrum(&spec).unwrap() {
            let y = y_polynomial(Family::III, &a, 2, nu).unwrap();
            prop_assert_eq!(y.poly.degree(), Some(y.n));
            prop_assert_eq!(y.poly.leading().cloned().unwrap(), y.expected_leading());
        }
    }
}

#[test]
fn morse_states_solve_the_equation_on_the_default_domain() {
    for (a, b) in [(q(5, 2), qi(1)), (qi(4), q(1, 2)), (q(7, 3), qi(3))] {
        let p = MorseParams::new(a, b).unwrap();
        let spectrum = morse_spectrum(&p);
        let deepest = spectrum[0].energy_f64();
        let shallowest = spectrum.last().unwrap().energy_f64();
        let (lo, hi) = morse_domain(&p, p.a_f64(), p.b_f64(), deepest, shallowest);
        let grid = Grid::with_spacing(lo, hi.min(40.0), 1e-3).unwrap();
        for s in &spectrum {
            let r = schrodinger_residual(&p, s.energy_f64(), &|x| morse_wavefunction(&p, s.nu, x).unwrap(), &grid);
            assert!(r.refined <= 1e-6, "A={} nu={}: {r:?}", p.a(), s.nu);
        }
    }
}

#[test]
fn seeds_solve_the_morse_equation() {
    let grid = Grid::with_spacing(-3.0, 12.0, 1e-3).unwrap();
    for (family, a_prime, m) in [
        (Family::II, q(1, 4), 1),
        (Family::II, q(3, 4), 3),
        (Family::III, qi(2), 2),
        (Family::III, q(3, 2), 4),
    ] {
        let seed = SeedFunction::new(family, a_prime.clone(), m, qi(1)).unwrap();
        let v = MorseParams::new(a_prime, qi(1)).unwrap();
        let r = schrodinger_residual(&v, to_f64(&seed.energy), &|x| seed.eval(x), &grid);
        assert!(r.refined <= 1e-6, "{family} m={m}: {r:?}");
    }
}

#[test]
fn extension_states_solve_the_extended_equation() {
    for (family, a, m) in [
        (Family::II, q(1, 4), 3),
        (Family::II, q(-1, 2), 2),
        (Family::III, qi(2), 2),
        (Family::III, q(5, 2), 4),
    ] {
        let ext = build_extension(ExtensionSpec::new(family, a, qi(1), m).unwrap()).unwrap();
        let grid = Grid::with_spacing(-4.0, 25.0, 1e-3).unwrap();
        for (nu, e) in ext.spectrum() {
            let state = ExtensionState::new(&ext, nu).unwrap();
            let r = schrodinger_residual(&ext, to_f64(&e), &|x| state.value(x), &grid);
            assert!(r.refined <= 1e-6, "{family} m={m} nu={nu}: {r:?}");
        }
    }
}

#[test]
fn type_two_adds_one_bound_state_to_the_core() {
    for m in 1..=3usize {
        for num in [10, 48, 90] {
            let a = in_type_two_range(num, m);
            let ext = build_extension(ExtensionSpec::new(Family::II, a.clone(), qi(1), m).unwrap()).unwrap();
            let core = ext.core().clone();
            let levels = ext.spectrum();
            let deepest = to_f64(&levels[0].1);
            let shallowest = to_f64(&levels.last().unwrap().1);
            let (lo, hi) = morse_domain(&ext, to_f64(&a) + 1.0, 1.0, deepest, shallowest);
            let grid = Grid::with_spacing(lo, hi, 2e-3).unwrap();
            let count = |v: &dyn rextmorse::Potential| {
                solve_with(
                    v,
                    &grid,
                    &SolveOptions {
                        auto_widen: false,
                        ..SolveOptions::bound_states(10)
                    },
                )
                .map(|s| s.eigenvalues.len())
                .unwrap_or(0)
            };
            assert_eq!(count(&ext), count(&core) + 1, "A={a} m={m}");
        }
    }
}

#[test]
fn eigenvectors_obey_the_node_theorem() {
    for (family, a, m) in [
        (Family::II, q(1, 4), 3),
        (Family::III, qi(2), 2),
        (Family::III, qi(3), 2),
    ] {
        let ext = build_extension(ExtensionSpec::new(family, a.clone(), qi(1), m).unwrap()).unwrap();
        let levels = ext.spectrum();
        let (lo, hi) = morse_domain(
            &ext,
            to_f64(&a),
            1.0,
            to_f64(&levels[0].1),
            to_f64(&levels.last().unwrap().1),
        );
        let grid = Grid::with_spacing(lo, hi, 2e-3).unwrap();
        let s = solve_with(&ext, &grid, &SolveOptions::bound_states(levels.len())).unwrap();
        for (i, v) in s.eigenvectors.iter().enumerate() {
            assert_eq!(count_nodes(v).unwrap(), i, "{family} A={a} m={m} level {i}");
            assert!(discrete_residual(&ext, &s.grid, s.raw[i], v) <= 1e-8);
        }
    }
}

#[test]
fn hierarchy_members_share_one_rational_part() {
    for (ty, m) in [(RoType::I, 2), (RoType::II, 1), (RoType::III, 2)] {
        let h = QesHierarchy::new(RoExtensionSpec::new(ty, qi(3), qi(4), m).unwrap());
        let members: Vec<_> = (0..3).map(|nu| h.member(nu).unwrap()).collect();
        for (nu, member) in members.iter().enumerate() {
            assert!(Arc::ptr_eq(&member.rat, h.rational()));
            assert_eq!(member.core.a(), &(&members[0].a0 + qi(nu as i64)));
        }
    }
}
