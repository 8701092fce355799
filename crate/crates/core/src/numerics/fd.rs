//! Pointwise finite-difference residuals of differential identities.

use super::Grid;
use crate::potential::Potential;
use crate::susy::{PartnerPotential, Superpotential};

/// Residual of a relation at spacing `h` and `h/2`, scaled by `max |psi|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualReport {
    pub coarse: f64,
    pub refined: f64,
}

fn samples(f: &dyn Fn(f64) -> f64, grid: &Grid) -> Vec<f64> {
    (0..grid.n()).map(|i| f(grid.x(i))).collect()
}

/// Fourth-order central first derivative at interior points `2..n-2`.
fn d1(v: &[f64], h: f64, i: usize) -> f64 {
    (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h)
}

/// Fourth-order central second derivative.
fn d2(v: &[f64], h: f64, i: usize) -> f64 {
    (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) / (12.0 * h * h)
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

fn schrodinger_once(v: &dyn Potential, energy: f64, psi: &dyn Fn(f64) -> f64, grid: &Grid) -> f64 {
    let p = samples(psi, grid);
    let h = grid.h();
    let scale = max_abs(&p);
    let mut worst = 0.0f64;
    for i in 2..grid.n() - 2 {
        let r = -d2(&p, h, i) + (v.value(grid.x(i)) - energy) * p[i];
        worst = worst.max(if r.is_nan() { f64::INFINITY } else { r.abs() });
    }
    worst / scale
}

/// `max |-psi'' + (V - E) psi| / max |psi|` with a fourth-order stencil.
pub fn schrodinger_residual(v: &dyn Potential, energy: f64, psi: &dyn Fn(f64) -> f64, grid: &Grid) -> ResidualReport {
    ResidualReport {
        coarse: schrodinger_once(v, energy, psi, grid),
        refined: schrodinger_once(v, energy, psi, &grid.refine()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntertwiningReport {
    pub coarse: f64,
    pub refined: f64,
    /// Set when the residual is above `1e-9` at `h` but drops by more than
    /// half at `h/2`, i.e. it is still dominated by discretization error.
    pub discretization_dominated: bool,
}

fn intertwining_once(
    v_plus: &dyn Potential,
    v_minus: &PartnerPotential,
    w: &Superpotential,
    psi: &dyn Fn(f64) -> f64,
    grid: &Grid,
) -> f64 {
    let h = grid.h();
    let p = samples(psi, grid);
    let vp = samples(&|x| v_plus.value(x), grid);
    let dw = samples(&|x| w.derivative(x), grid);
    let scale = max_abs(&p);
    let mut worst = 0.0f64;
    for i in 2..grid.n() - 2 {
        let x = grid.x(i);
        let wi = w.value(x);
        let diff = vp[i] - v_minus.value(x);
        // (A H+ - H- A) psi = [V+' + W'' + W (V+ - V-)] psi + [V+ - V- + 2W'] psi'
        let r = (d1(&vp, h, i) + d1(&dw, h, i) + wi * diff) * p[i] + (diff + 2.0 * dw[i]) * d1(&p, h, i);
        worst = worst.max(if r.is_nan() { f64::INFINITY } else { r.abs() });
    }
    worst / scale
}

/// `(A H^(+) - H^(-) A) psi` with `A = d/dx + W`. `W, W'` are closed forms;
/// `W''`, `V^(+)'` and `psi'` come from fourth-order differences.
pub fn intertwining_residual(
    v_plus: &dyn Potential,
    v_minus: &PartnerPotential,
    w: &Superpotential,
    psi: &dyn Fn(f64) -> f64,
    grid: &Grid,
) -> IntertwiningReport {
    let coarse = intertwining_once(v_plus, v_minus, w, psi, grid);
    let refined = intertwining_once(v_plus, v_minus, w, psi, &grid.refine());
    IntertwiningReport {
        coarse,
        refined,
        discretization_dominated: coarse > 1e-9 && refined < 0.5 * coarse,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::{morse_wavefunction, MorseParams};
    use crate::rational::{q, qi};
    use crate::susy::{FactoredSeed, SusyPair};
    use std::sync::Arc;

    #[test]
    fn morse_states_have_small_residual() {
        let p = MorseParams::new(q(5, 2), qi(1)).unwrap();
        let grid = super::super::Grid::new(-3.0, 12.0, 6001).unwrap();
        for (nu, e) in [(0u64, -6.25), (1, -2.25), (2, -0.25)] {
            let r = schrodinger_residual(&p, e, &|x| morse_wavefunction(&p, nu, x).unwrap(), &grid);
            assert!(r.refined < 1e-8, "{nu}: {r:?}");
            let bad = schrodinger_residual(&p, e + 0.01, &|x| morse_wavefunction(&p, nu, x).unwrap(), &grid);
            assert!(bad.refined > 1e-3);
        }
    }

    #[test]
    fn intertwining_holds_and_fault_is_detected() {
        let p = MorseParams::new(qi(3), qi(1)).unwrap();
        let pair = SusyPair::new(FactoredSeed::morse_ground(&p), Arc::new(p.clone()), &qi(-9)).unwrap();
        let grid = super::super::Grid::new(-3.0, 10.0, 4001).unwrap();
        let psi = |x: f64| morse_wavefunction(&p, 1, x).unwrap();
        let ok = pair.intertwining_residual(&psi, &grid, 0.0);
        assert!(ok.refined < 1e-6, "{ok:?}");
        let bad = pair.intertwining_residual(&psi, &grid, 1e-2);
        assert!(bad.refined > 1e-3, "{bad:?}");
    }
}
