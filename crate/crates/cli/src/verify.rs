use anyhow::Result;
use rextmorse::extensions::commutative_diagram;
use rextmorse::numerics::{morse_domain, Grid};
use rextmorse::pct::ro_domain;
use rextmorse::rational::{format_rational, q, qi, to_f64};
use rextmorse::{
    enlarged_partner, extension_spectrum, morse_spectrum, morse_wavefunction, ode_residual, pct_inverse,
    qes_morse_build, qes_ro_build, y_identity_residual, ExtensionSpec, Family, MorseParams, PolyQ, RoExtensionSpec,
    RoType, SusyPair, Q,
};

use crate::args::{Fault, Group, VerifyArgs};
use crate::commands::{level_at, RESIDUAL_TOL};
use crate::params::Params;
use crate::report::{Check, Report};

/// Largest coefficient magnitude, and zero exactly when `p` is the zero
/// polynomial (a nonzero `p` never reports below `f64::MIN_POSITIVE`).
fn size(p: &PolyQ) -> f64 {
    if p.is_zero() {
        return 0.0;
    }
    p.coeffs()
        .iter()
        .map(|c| to_f64(c).abs())
        .fold(f64::MIN_POSITIVE, f64::max)
}

fn tag(spec: &ExtensionSpec) -> String {
    format!("{} A={} m={}", spec.family, format_rational(&spec.a), spec.m)
}

/// Morse extension named by the flags, not yet validated (the diagram
/// accepts the boundary `A = (m-2)/2`).
fn user_extension(args: &VerifyArgs, p: &mut Params) -> Result<Option<ExtensionSpec>> {
    let c = &args.common;
    let Some(a) = p.rational("A", c.a.as_deref(), None)? else {
        return Ok(None);
    };
    let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
    let family = c.family.unwrap_or(Family::II);
    let m = crate::params::require("m", c.m)?;
    Ok(Some(ExtensionSpec::unchecked(family, a, b, m)))
}

fn validated(spec: &ExtensionSpec) -> Result<ExtensionSpec> {
    Ok(ExtensionSpec::new(spec.family, spec.a.clone(), spec.b.clone(), spec.m)?)
}

fn default_extensions() -> Vec<ExtensionSpec> {
    let mut out = Vec::new();
    for m in 1..=4usize {
        for k in [1i64, 3, 5] {
            let a = qi(-1) + q(m as i64 * k, 12);
            out.push(ExtensionSpec::new(Family::II, a, qi(1), m).expect("admissible"));
        }
    }
    for (a, m) in [(qi(2), 2), (q(5, 2), 2), (qi(3), 4), (q(7, 3), 4)] {
        out.push(ExtensionSpec::new(Family::III, a, qi(1), m).expect("admissible"));
    }
    out
}

fn identities(specs: &[ExtensionSpec]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for spec in specs {
        for (nu, _) in extension_spectrum(spec)? {
            let ids = y_identity_residual(spec.family, &spec.a, spec.m, nu)?;
            let worst = ids.iter().map(size).fold(0.0, f64::max);
            checks.push(Check::close(
                format!("y identity {} nu={nu}", tag(spec)),
                0.0,
                worst,
                0.0,
            ));
            let ode = ode_residual(spec.family, &spec.a, spec.m, nu)?;
            checks.push(Check::close(
                format!("y ode {} nu={nu}", tag(spec)),
                0.0,
                size(&ode),
                0.0,
            ));
        }
    }
    Ok(checks)
}

fn intertwining(specs: &[ExtensionSpec], fault: Option<Fault>) -> Result<Vec<Check>> {
    let offset = match fault {
        Some(Fault::Epsilon) => 1e-2,
        None => 0.0,
    };
    let grid = Grid::new(-4.0, 16.0, 8001)?;
    let mut checks = Vec::new();
    for spec in specs {
        let v_plus = MorseParams::new(spec.plus_a(), spec.b.clone())?;
        let pair = SusyPair::from_morse(&v_plus, spec.seed())?;
        for state in morse_spectrum(&v_plus) {
            let psi = |x: f64| morse_wavefunction(&v_plus, state.nu, x).unwrap_or(f64::NAN);
            let r = pair.intertwining_residual(&psi, &grid, offset);
            checks.push(Check::close(
                format!("intertwining {} ({} case) psi_{}", tag(spec), pair.case, state.nu),
                0.0,
                r.refined,
                RESIDUAL_TOL,
            ));
        }
    }
    Ok(checks)
}

fn diagram(cases: &[(Q, Q, usize)]) -> Result<Vec<Check>> {
    let xs: Vec<f64> = (0..=2000).map(|i| -5.0 + 0.01 * i as f64).collect();
    let mut checks = Vec::new();
    for (a, b, m) in cases {
        let d = commutative_diagram(a, b, *m)?;
        let name = format!("diagram A={} B={} m={m}", format_rational(a), format_rational(b));
        checks.push(Check::close(name.clone(), 0.0, d.max_discrepancy(&xs), 1e-12));
        let conventional = if d.bottom.is_conventional() { 1.0 } else { 0.0 };
        checks.push(Check::close(
            format!("{name} partner is conventional Morse"),
            if *m == 1 { 1.0 } else { 0.0 },
            conventional,
            0.0,
        ));
    }
    Ok(checks)
}

fn qes(cases: &[(RoType, Q, Q, usize, i64)]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (ty, l, omega, m, nu) in cases {
        let member = qes_morse_build(&RoExtensionSpec::new(*ty, l.clone(), omega.clone(), *m)?, *nu)?;
        let eps = to_f64(&member.epsilon);
        let a = member.core.a_f64();
        let (lo, hi) = morse_domain(&member, a, member.core.b_f64(), -(a + *m as f64 + 2.0).powi(2), eps);
        let grid = Grid::with_spacing(lo, hi, 1e-3)?;
        checks.push(level_at(
            &member,
            &grid,
            eps,
            member.position,
            Some(0.0),
            format!(
                "qes type {ty} l={} m={m} nu={nu}: eps={} at level {}",
                format_rational(l),
                format_rational(&member.epsilon),
                member.position
            ),
        )?);
    }
    Ok(checks)
}

fn pct(morse: &[(Q, Q, u64)], radial: &[(ExtensionSpec, i64)]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (a, b, nu) in morse {
        let map = pct_inverse(&MorseParams::new(a.clone(), b.clone())?, *nu)?;
        let e = to_f64(&map.energy);
        let (lo, hi) = ro_domain(map.radial.omega_f64(), to_f64(map.radial.l()), e);
        checks.push(level_at(
            &map.radial,
            &Grid::with_spacing(lo, hi, 1e-3)?,
            e,
            *nu as usize,
            None,
            format!(
                "inverse map A={} B={} nu={nu}: E={}",
                format_rational(a),
                format_rational(b),
                format_rational(&map.energy)
            ),
        )?);
    }
    for (spec, nu) in radial {
        let qes = qes_ro_build(spec, *nu)?;
        let e = to_f64(&qes.energy);
        let (lo, hi) = ro_domain(qes.radial.omega_f64(), to_f64(qes.radial.l()), e);
        let position = qes.position()?;
        checks.push(level_at(
            &qes,
            &Grid::with_spacing(lo, hi, 1e-3)?,
            e,
            position,
            None,
            format!(
                "qes radial {} nu={nu}: E={} at level {position}",
                tag(spec),
                format_rational(&qes.energy)
            ),
        )?);
    }
    Ok(checks)
}

pub fn verify(args: &VerifyArgs) -> Result<Report> {
    let c = &args.common;
    let mut p = Params::from_common(c);
    if let Some(only) = args.only {
        p.echo.insert("only".into(), format!("{only:?}").to_lowercase());
    }
    if let Some(fault) = args.inject_fault {
        p.echo
            .insert("inject_fault".into(), format!("{fault:?}").to_lowercase());
    }
    let user = user_extension(args, &mut p)?;
    let l = p.rational("l", c.l.as_deref(), None)?;
    let omega = p.rational("omega", c.omega.as_deref(), Some("4"))?.unwrap();
    let run = |g: Group| args.only.is_none_or(|o| o == g);
    let mut checks = Vec::new();

    if run(Group::Identities) {
        if p.exact() {
            let specs = match &user {
                Some(s) => vec![validated(s)?],
                None => default_extensions(),
            };
            checks.extend(identities(&specs)?);
        } else {
            eprintln!("warning: exact identity checks skipped because of decimal input");
        }
    }
    if run(Group::Intertwining) {
        let specs = match &user {
            Some(s) => vec![validated(s)?],
            None => vec![
                ExtensionSpec::new(Family::II, q(-3, 4), qi(1), 1).expect("admissible"),
                ExtensionSpec::new(Family::II, q(1, 4), qi(1), 3).expect("admissible"),
                ExtensionSpec::new(Family::III, qi(2), qi(1), 2).expect("admissible"),
            ],
        };
        checks.extend(intertwining(&specs, args.inject_fault)?);
    }
    if run(Group::Diagram) {
        let cases = match &user {
            Some(s) if s.family == Family::II => vec![(s.a.clone(), s.b.clone(), s.m)],
            Some(s) => {
                // Type III has no enlarged partner; this reports the inverse construction.
                enlarged_partner(&validated(s)?)?;
                Vec::new()
            }
            None => vec![(q(1, 4), qi(1), 3), (qi(0), qi(1), 2), (q(-1, 2), qi(1), 1)],
        };
        checks.extend(diagram(&cases)?);
    }
    if run(Group::Qes) {
        let cases: Vec<(RoType, Q, Q, usize, i64)> = match (c.ty, &l) {
            (Some(ty), Some(l)) => {
                let m = crate::params::require("m", c.m)?;
                vec![(ty, l.clone(), omega.clone(), m, c.nu.unwrap_or(0))]
            }
            _ => [
                (RoType::I, 1),
                (RoType::I, 2),
                (RoType::II, 1),
                (RoType::II, 2),
                (RoType::III, 2),
            ]
            .into_iter()
            .flat_map(|(ty, m)| (0..2).map(move |nu| (ty, qi(3), qi(4), m, nu)))
            .collect(),
        };
        checks.extend(qes(&cases)?);
    }
    if run(Group::Pct) {
        let (morse, radial) = match &user {
            Some(s) => {
                let s = validated(s)?;
                let states = extension_spectrum(&s)?
                    .into_iter()
                    .map(|(nu, _)| (s.clone(), nu))
                    .collect();
                (Vec::new(), states)
            }
            None => {
                let ii = ExtensionSpec::new(Family::II, q(1, 4), qi(1), 3).expect("admissible");
                let iii = ExtensionSpec::new(Family::III, qi(2), qi(1), 2).expect("admissible");
                let mut radial: Vec<(ExtensionSpec, i64)> = Vec::new();
                for s in [ii, iii] {
                    for (nu, _) in extension_spectrum(&s)? {
                        radial.push((s.clone(), nu));
                    }
                }
                ((0..=2).map(|nu| (q(5, 2), qi(1), nu)).collect(), radial)
            }
        };
        checks.extend(pct(&morse, &radial)?);
    }
    Ok(Report::new("verify", p.echo, checks))
}
