use anyhow::{bail, Result};
use rextmorse::numerics::fd::schrodinger_residual;
use rextmorse::numerics::{compare_spectra, morse_domain, solve_with, Grid, SolveOptions};
use rextmorse::pct::{ro_domain, RoExtendedPotential};
use rextmorse::rational::{format_rational, to_f64};
use rextmorse::{
    build_extension, extension_wavefunction, morse_spectrum, morse_wavefunction, pct_forward, pct_inverse,
    qes_morse_build, qes_ro_build, ExtensionSpec, MorseParams, Potential, RadialParams, RoExtensionSpec,
};

use crate::args::{Common, Direction};
use crate::params::{require, Params};
use crate::report::{Check, Report, Table};

/// Relative tolerance for every numeric eigenvalue comparison.
pub const REL_TOL: f64 = 1e-5;
/// Bound on the scaled finite-difference residual of analytic eigenfunctions.
pub const RESIDUAL_TOL: f64 = 1e-6;

pub fn solve_grid(c: &Common, default: (f64, f64), h: f64) -> Result<Grid> {
    let a = c.xmin.unwrap_or(default.0);
    let b = c.xmax.unwrap_or(default.1);
    Ok(match c.points {
        Some(n) => Grid::new(a, b, n)?,
        None => Grid::with_spacing(a, b, h)?,
    })
}

/// Bound states of a Morse-type potential against labelled analytic levels,
/// plus a check on the number of bound states found.
pub fn morse_level_checks(
    v: &dyn Potential,
    a_scale: f64,
    b: f64,
    levels: &[(String, f64)],
    c: &Common,
) -> Result<Vec<Check>> {
    let energies: Vec<f64> = levels.iter().map(|l| l.1).collect();
    let deepest = energies.iter().cloned().fold(-0.25f64, f64::min);
    let shallowest = energies.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let shallowest = if shallowest.is_finite() { shallowest } else { -0.25 };
    let grid = solve_grid(c, morse_domain(v, a_scale, b, deepest, shallowest), 1e-3)?;
    let opts = SolveOptions {
        auto_widen: c.xmin.is_none() && c.xmax.is_none(),
        ..SolveOptions::bound_states(levels.len() + 3)
    };
    let numeric = solve_with(v, &grid, &opts)?;
    let report = compare_spectra(&energies, &numeric, REL_TOL);
    let mut checks: Vec<Check> = report
        .levels
        .iter()
        .zip(levels)
        .map(|(l, (label, _))| Check {
            name: format!("level {label}"),
            target: l.analytic,
            got: l.numeric.unwrap_or(f64::NAN),
            tol: l.bound,
            pass: l.pass,
        })
        .collect();
    checks.push(Check::close(
        "bound-state count",
        levels.len() as f64,
        numeric.eigenvalues.len() as f64,
        0.0,
    ));
    Ok(checks)
}

/// Level `position` of the numeric spectrum equals `energy`.
pub fn level_at(
    v: &dyn Potential,
    grid: &Grid,
    energy: f64,
    position: usize,
    ceiling: Option<f64>,
    name: String,
) -> Result<Check> {
    let opts = SolveOptions {
        ceiling,
        eigenvectors: false,
        auto_widen: false,
        ..SolveOptions::lowest(position + 1)
    };
    let s = solve_with(v, grid, &opts)?;
    let got = s.eigenvalues.get(position).copied().unwrap_or(f64::NAN);
    Ok(Check::close(name, energy, got, REL_TOL * energy.abs().max(1e-3)))
}

fn residual_check(name: &str, v: &dyn Potential, energy: f64, psi: &dyn Fn(f64) -> f64, grid: &Grid) -> Check {
    let r = schrodinger_residual(v, energy, psi, grid);
    Check::close(name, 0.0, r.refined, RESIDUAL_TOL)
}

fn labelled(levels: &[(i64, rextmorse::Q)]) -> Vec<(String, f64)> {
    levels
        .iter()
        .map(|(nu, e)| (format!("nu={nu} E={}", format_rational(e)), to_f64(e)))
        .collect()
}

pub fn spectrum(c: &Common) -> Result<Report> {
    let mut p = Params::from_common(c);
    let checks = if let Some(family) = c.family {
        let a = p.required("A", c.a.as_deref())?;
        let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
        let m = require("m", c.m)?;
        let ext = build_extension(ExtensionSpec::new(family, a, b.clone(), m)?)?;
        let scale = to_f64(&ext.spec().plus_a()).max(to_f64(&ext.spec().a));
        morse_level_checks(&ext, scale, to_f64(&b), &labelled(&ext.spectrum()), c)?
    } else if let Some(ty) = c.ty {
        let l = p.required("l", c.l.as_deref())?;
        let omega = p.rational("omega", c.omega.as_deref(), Some("4"))?.unwrap();
        let m = require("m", c.m)?;
        let pot = RoExtendedPotential::new(RoExtensionSpec::new(ty, l.clone(), omega.clone(), m)?);
        let levels = labelled(&pot.spectrum(3));
        let top = levels.last().map_or(0.0, |l| l.1);
        let grid = solve_grid(c, ro_domain(to_f64(&omega), to_f64(&l), top), 1e-3)?;
        let numeric = solve_with(&pot, &grid, &SolveOptions::lowest(levels.len()))?;
        let energies: Vec<f64> = levels.iter().map(|l| l.1).collect();
        compare_spectra(&energies, &numeric, REL_TOL)
            .levels
            .iter()
            .zip(&levels)
            .map(|(lv, (label, _))| Check {
                name: format!("level {label}"),
                target: lv.analytic,
                got: lv.numeric.unwrap_or(f64::NAN),
                tol: lv.bound,
                pass: lv.pass,
            })
            .collect()
    } else {
        let a = p.required("A", c.a.as_deref())?;
        let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
        let morse = MorseParams::new(a, b)?;
        let levels: Vec<(String, f64)> = morse_spectrum(&morse)
            .iter()
            .map(|s| (format!("nu={} E={}", s.nu, format_rational(&s.energy)), s.energy_f64()))
            .collect();
        morse_level_checks(&morse, morse.a_f64(), morse.b_f64(), &levels, c)?
    };
    Ok(Report::new("spectrum", p.echo, checks))
}

pub fn sample(c: &Common) -> Result<Table> {
    let mut p = Params::from_common(c);
    let n = c.points.unwrap_or(2001);
    if n < 2 {
        bail!("--points must be at least 2");
    }
    let points = |lo: f64, hi: f64| -> Vec<f64> {
        let (a, b) = (c.xmin.unwrap_or(lo), c.xmax.unwrap_or(hi));
        (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
    };
    let potential_columns = || -> Vec<String> {
        ["x", "z", "g", "V_core", "V_rat", "V_ext"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    };
    if let Some(family) = c.family {
        let a = p.required("A", c.a.as_deref())?;
        let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
        let m = require("m", c.m)?;
        let ext = build_extension(ExtensionSpec::new(family, a, b, m)?)?;
        let xs = points(-5.0, 15.0);
        if let Some(nu) = c.nu {
            let rows = xs
                .iter()
                .map(|&x| Ok(vec![x, extension_wavefunction(&ext, nu, x)?]))
                .collect::<Result<_>>()?;
            return Ok(Table {
                columns: vec!["x".into(), "psi".into()],
                rows,
            });
        }
        let g = ext.g().to_f64();
        let rows = xs
            .iter()
            .map(|&x| {
                let z = ext.z(x);
                let core = ext.core().value(x);
                let rat = ext.rational_part(x);
                vec![x, z, g.eval(z), core, rat, core + rat]
            })
            .collect();
        Ok(Table {
            columns: potential_columns(),
            rows,
        })
    } else if let Some(ty) = c.ty {
        let l = p.required("l", c.l.as_deref())?;
        let omega = p.rational("omega", c.omega.as_deref(), Some("4"))?.unwrap();
        let m = require("m", c.m)?;
        let spec = RoExtensionSpec::new(ty, l, omega, m)?;
        let g = spec.g().to_f64();
        let pot = RoExtendedPotential::new(spec);
        let mut columns = potential_columns();
        columns[0] = "r".into();
        let rows = points(0.05, 6.0)
            .iter()
            .map(|&r| {
                let z = pot.spec().params.z(r);
                let core = pot.spec().params.value(r);
                let rat = pot.rational_part(r);
                vec![r, z, g.eval(z), core, rat, core + rat]
            })
            .collect();
        Ok(Table { columns, rows })
    } else {
        let a = p.required("A", c.a.as_deref())?;
        let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
        let morse = MorseParams::new(a, b)?;
        let xs = points(-5.0, 15.0);
        if let Some(nu) = c.nu {
            let nu = u64::try_from(nu).map_err(|_| rextmorse::Error::IndexOutOfRange {
                nu,
                allowed: "nu >= 0".into(),
            })?;
            let rows = xs
                .iter()
                .map(|&x| Ok(vec![x, morse_wavefunction(&morse, nu, x)?]))
                .collect::<Result<_>>()?;
            return Ok(Table {
                columns: vec!["x".into(), "psi".into()],
                rows,
            });
        }
        let rows = xs
            .iter()
            .map(|&x| {
                let v = morse.value(x);
                vec![x, morse.z(x), 1.0, v, 0.0, v]
            })
            .collect();
        Ok(Table {
            columns: potential_columns(),
            rows,
        })
    }
}

fn non_negative(nu: i64) -> Result<u64> {
    Ok(u64::try_from(nu).map_err(|_| rextmorse::Error::IndexOutOfRange {
        nu,
        allowed: "nu >= 0".into(),
    })?)
}

pub fn pct(c: &Common, direction: Direction) -> Result<Report> {
    let mut p = Params::from_common(c);
    p.echo
        .insert("direction".into(), format!("{direction:?}").to_lowercase());
    let nu = non_negative(c.nu.unwrap_or(0))?;
    let checks = match direction {
        Direction::Forward => {
            let l = p.required("l", c.l.as_deref())?;
            let omega = p.rational("omega", c.omega.as_deref(), Some("4"))?.unwrap();
            let radial = RadialParams::new(l, omega)?;
            let map = pct_forward(&radial, nu)?;
            let eps = to_f64(&map.epsilon);
            let a = map.morse.a_f64();
            let (lo, hi) = morse_domain(&map.morse, a, map.morse.b_f64(), -a * a, eps);
            let grid = solve_grid(c, (lo, hi), 1e-3)?;
            let name = format!(
                "eps={} at level {nu} of V_(A={},B={})",
                format_rational(&map.epsilon),
                format_rational(map.morse.a()),
                format_rational(map.morse.b())
            );
            let level = level_at(&map.morse, &grid, eps, nu as usize, Some(0.0), name)?;
            let fd_grid = Grid::with_spacing(grid.a(), grid.b().min(40.0), 1e-3)?;
            let residual = residual_check(
                "mapped eigenfunction residual",
                &map.morse,
                eps,
                &|x| map.wavefunction(x),
                &fd_grid,
            );
            vec![level, residual]
        }
        Direction::Inverse => {
            let a = p.required("A", c.a.as_deref())?;
            let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
            let map = pct_inverse(&MorseParams::new(a, b)?, nu)?;
            let e = to_f64(&map.energy);
            let (omega, l) = (map.radial.omega_f64(), to_f64(map.radial.l()));
            let grid = solve_grid(c, ro_domain(omega, l, e), 1e-3)?;
            let name = format!(
                "E={} at level {nu} of V_(l={},omega={})",
                format_rational(&map.energy),
                format_rational(map.radial.l()),
                format_rational(map.radial.omega())
            );
            let level = level_at(&map.radial, &grid, e, nu as usize, None, name)?;
            let fd_grid = Grid::with_spacing(0.05, grid.b(), 1e-3)?;
            let residual = residual_check(
                "mapped eigenfunction residual",
                &map.radial,
                e,
                &|r| map.wavefunction(r),
                &fd_grid,
            );
            vec![level, residual]
        }
    };
    Ok(Report::new("pct", p.echo, checks))
}

pub fn qes(c: &Common) -> Result<Report> {
    let mut p = Params::from_common(c);
    let nu = c.nu.unwrap_or(0);
    let checks = if let Some(ty) = c.ty {
        let l = p.required("l", c.l.as_deref())?;
        let omega = p.rational("omega", c.omega.as_deref(), Some("4"))?.unwrap();
        let m = require("m", c.m)?;
        let member = qes_morse_build(&RoExtensionSpec::new(ty, l, omega, m)?, nu)?;
        let eps = to_f64(&member.epsilon);
        let a = member.core.a_f64();
        let deepest = -(a + m as f64 + 2.0).powi(2);
        let grid = solve_grid(c, morse_domain(&member, a, member.core.b_f64(), deepest, eps), 1e-3)?;
        let name = format!(
            "eps={} at level {} of the nu={nu} member",
            format_rational(&member.epsilon),
            member.position
        );
        let level = level_at(&member, &grid, eps, member.position, Some(0.0), name)?;
        let fd_grid = Grid::with_spacing(grid.a(), grid.b().min(40.0), 1e-3)?;
        let residual = residual_check(
            "eigenfunction residual",
            &member,
            eps,
            &|x| member.eigenfunction(x),
            &fd_grid,
        );
        vec![level, residual]
    } else if let Some(family) = c.family {
        let a = p.required("A", c.a.as_deref())?;
        let b = p.rational("B", c.b.as_deref(), Some("1"))?.unwrap();
        let m = require("m", c.m)?;
        let radial = qes_ro_build(&ExtensionSpec::new(family, a, b, m)?, nu)?;
        let e = to_f64(&radial.energy);
        let (omega, l) = (radial.radial.omega_f64(), to_f64(radial.radial.l()));
        let grid = solve_grid(c, ro_domain(omega, l, e), 1e-3)?;
        let position = radial.position()?;
        let name = format!(
            "E={} at level {position} of V_(l={},omega={}) + V_rat",
            format_rational(&radial.energy),
            format_rational(radial.radial.l()),
            format_rational(radial.radial.omega())
        );
        let level = level_at(&radial, &grid, e, position, None, name)?;
        let fd_grid = Grid::with_spacing(0.05, grid.b(), 1e-3)?;
        let residual = residual_check(
            "eigenfunction residual",
            &radial,
            e,
            &|r| radial.eigenfunction(r),
            &fd_grid,
        );
        vec![level, residual]
    } else {
        bail!("qes needs --type (oscillator extension) or --family (Morse extension)");
    };
    Ok(Report::new("qes", p.echo, checks))
}
