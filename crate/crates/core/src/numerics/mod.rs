//! Finite-difference oracle for one-dimensional Schrödinger problems.
//!
//! `-psi'' + V psi = E psi` is discretized with central second differences
//! and Dirichlet endpoints. Eigenvalues come from Sturm bisection on the
//! tridiagonal matrix, eigenvectors from inverse iteration. Every solve is
//! repeated at `h/2` and the pair is Richardson-extrapolated.

pub mod fd;
mod tridiag;

use crate::error::{Error, Result};
use crate::potential::Potential;
use tridiag::SymTridiag;

#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    n: usize,
}

impl Grid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGrid(format!("n = {n}, need n >= 3")));
        }
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::InvalidGrid(format!("domain [{a}, {b}]")));
        }
        Ok(Grid { a, b, n })
    }

    /// Grid on `[a, b]` with spacing at most `h`.
    pub fn with_spacing(a: f64, b: f64, h: f64) -> Result<Self> {
        if h.is_nan() || h <= 0.0 {
            return Err(Error::InvalidGrid(format!("h = {h}")));
        }
        let n = ((b - a) / h).ceil() as usize + 1;
        Self::new(a, b, n.max(3))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / (self.n - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i == self.n - 1 {
            self.b
        } else {
            self.a + i as f64 * self.h()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Same domain with spacing `h/2`.
    pub fn refine(&self) -> Grid {
        Grid {
            a: self.a,
            b: self.b,
            n: 2 * self.n - 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    /// Number of lowest levels wanted.
    pub k: usize,
    /// Only levels strictly below this energy are returned (use `0` for
    /// bound states of potentials vanishing at infinity).
    pub ceiling: Option<f64>,
    pub eigenvectors: bool,
    /// Widen the domain while the top eigenvector's tail is above `1e-8`
    /// of its maximum near either boundary.
    pub auto_widen: bool,
    pub max_widenings: usize,
}

impl SolveOptions {
    pub fn lowest(k: usize) -> Self {
        SolveOptions {
            k,
            ceiling: None,
            eigenvectors: true,
            auto_widen: false,
            max_widenings: 4,
        }
    }

    /// All bound states below zero, at most `k` of them.
    pub fn bound_states(k: usize) -> Self {
        SolveOptions {
            k,
            ceiling: Some(0.0),
            eigenvectors: true,
            auto_widen: true,
            max_widenings: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericSpectrum {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvalues of the discretization at the grid's own spacing.
    pub raw: Vec<f64>,
    /// Eigenvalues at spacing `h/2`.
    pub refined: Vec<f64>,
    /// `|raw - refined| / 3`, the size of the leading error term at `h/2`.
    pub error_estimates: Vec<f64>,
    /// Samples on `grid` (Dirichlet zeros included), scaled to `max |psi| = 1`.
    pub eigenvectors: Vec<Vec<f64>>,
    pub grid: Grid,
    /// Fewer than `k` levels lie below the ceiling.
    pub truncated: bool,
}

struct RawSolve {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
}

fn diagonal(potential: &dyn Potential, grid: &Grid) -> Result<Vec<f64>> {
    let h = grid.h();
    let inv = 2.0 / (h * h);
    (1..grid.n() - 1)
        .map(|i| {
            let x = grid.x(i);
            let v = potential.value(x);
            if v.is_finite() {
                Ok(inv + v)
            } else {
                Err(Error::NonFinitePotential { x })
            }
        })
        .collect()
}

fn solve_raw(
    potential: &dyn Potential,
    grid: &Grid,
    k: usize,
    ceiling: Option<f64>,
    vectors: bool,
) -> Result<RawSolve> {
    let d = diagonal(potential, grid)?;
    let h = grid.h();
    let t = SymTridiag {
        d: &d,
        e: -1.0 / (h * h),
    };
    let (lo, mut hi) = t.gershgorin();
    let mut available = d.len();
    if let Some(c) = ceiling {
        available = t.count_below(c);
        hi = hi.min(c);
    }
    let count = k.min(available);
    let mut values = Vec::with_capacity(count);
    let mut lower = lo;
    for j in 0..count {
        let ev = t.kth_eigenvalue(j, lower, hi);
        values.push(ev);
        lower = ev - 1e-12 * (1.0 + ev.abs());
    }
    let vectors = if vectors {
        values
            .iter()
            .map(|&ev| {
                let inner = t.eigenvector(ev);
                let mut full = Vec::with_capacity(grid.n());
                full.push(0.0);
                full.extend(inner);
                full.push(0.0);
                normalize_sign(&mut full);
                full
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(RawSolve { values, vectors })
}

fn normalize_sign(v: &mut [f64]) {
    let m = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if m == 0.0 {
        return;
    }
    let first = v.iter().find(|x| x.abs() > 1e-6 * m).copied().unwrap_or(1.0);
    let s = if first < 0.0 { -1.0 / m } else { 1.0 / m };
    v.iter_mut().for_each(|x| *x *= s);
}

/// Largest `|psi|` in the outer 2% of the grid on each side, relative to
/// `max |psi|`.
fn tails(v: &[f64]) -> (f64, f64) {
    let n = v.len();
    let w = (n / 50).max(2);
    let m = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let left = v[..w].iter().fold(0.0f64, |a, x| a.max(x.abs())) / m;
    let right = v[n - w..].iter().fold(0.0f64, |a, x| a.max(x.abs())) / m;
    (left, right)
}

/// Lowest eigenpairs of `-d^2/dx^2 + V` on `grid` per `opts`.
pub fn solve_with(potential: &dyn Potential, grid: &Grid, opts: &SolveOptions) -> Result<NumericSpectrum> {
    if opts.k == 0 {
        return Err(Error::InvalidGrid("k must be >= 1".into()));
    }
    let mut grid = grid.clone();
    let mut coarse;
    let mut widenings = 0;
    loop {
        let want_vectors = opts.eigenvectors || opts.auto_widen;
        coarse = solve_raw(potential, &grid, opts.k, opts.ceiling, want_vectors)?;
        if !opts.auto_widen || widenings >= opts.max_widenings {
            break;
        }
        let Some(top) = coarse.vectors.last() else { break };
        let (left, right) = tails(top);
        if left <= 1e-8 && right <= 1e-8 {
            break;
        }
        let h = grid.h();
        let width = grid.b() - grid.a();
        let (a, b) = (
            if left > 1e-8 { grid.a() - 0.5 * width } else { grid.a() },
            if right > 1e-8 { grid.b() + 0.5 * width } else { grid.b() },
        );
        grid = Grid::with_spacing(a, b, h)?;
        widenings += 1;
    }
    let fine = solve_raw(potential, &grid.refine(), coarse.values.len(), opts.ceiling, false)?;
    let count = coarse.values.len().min(fine.values.len());
    let raw = coarse.values[..count].to_vec();
    let refined = fine.values[..count].to_vec();
    let eigenvalues = raw.iter().zip(&refined).map(|(c, f)| f + (f - c) / 3.0).collect();
    let error_estimates = raw.iter().zip(&refined).map(|(c, f)| (c - f).abs() / 3.0).collect();
    let mut eigenvectors = coarse.vectors;
    eigenvectors.truncate(if opts.eigenvectors { count } else { 0 });
    Ok(NumericSpectrum {
        eigenvalues,
        raw,
        refined,
        error_estimates,
        eigenvectors,
        grid,
        truncated: count < opts.k,
    })
}

/// Lowest `k` eigenpairs with no ceiling and a fixed domain.
pub fn solve_schrodinger(potential: &dyn Potential, grid: &Grid, k: usize) -> Result<NumericSpectrum> {
    solve_with(potential, grid, &SolveOptions::lowest(k))
}

/// Strict sign changes, ignoring samples below `1e-9 max |psi|`.
pub fn count_nodes(samples: &[f64]) -> Result<usize> {
    let m = samples.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if m == 0.0 {
        return Err(Error::ZeroVector);
    }
    let floor = 1e-9 * m;
    let mut last = 0.0;
    let mut nodes = 0;
    for &s in samples.iter().filter(|s| s.abs() >= floor) {
        if last != 0.0 && (s > 0.0) != (last > 0.0) {
            nodes += 1;
        }
        last = s;
    }
    Ok(nodes)
}

/// `||(H - E) psi|| / ||psi||` for the discretized operator on `grid`.
pub fn discrete_residual(potential: &dyn Potential, grid: &Grid, energy: f64, psi: &[f64]) -> f64 {
    let h2 = grid.h() * grid.h();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 1..grid.n() - 1 {
        let lap = (psi[i - 1] - 2.0 * psi[i] + psi[i + 1]) / h2;
        let r = -lap + (potential.value(grid.x(i)) - energy) * psi[i];
        num += r * r;
        den += psi[i] * psi[i];
    }
    (num / den).sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelComparison {
    pub index: usize,
    pub analytic: f64,
    pub numeric: Option<f64>,
    pub diff: f64,
    pub bound: f64,
    pub error_estimate: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub levels: Vec<LevelComparison>,
    /// Numeric levels beyond the analytic list.
    pub extra: Vec<f64>,
    pub pass: bool,
}

/// Level `i` passes when `|numeric - analytic|` and the solver's own error
/// estimate are both within `max(rel_tol |analytic|, 1e-8)`. Missing or
/// surplus numeric levels fail the comparison.
pub fn compare_spectra(analytic: &[f64], numeric: &NumericSpectrum, rel_tol: f64) -> ComparisonReport {
    let levels: Vec<LevelComparison> = analytic
        .iter()
        .enumerate()
        .map(|(index, &e)| {
            let bound = (rel_tol * e.abs()).max(1e-8);
            match numeric.eigenvalues.get(index) {
                Some(&got) => {
                    let diff = (got - e).abs();
                    let est = numeric.error_estimates[index];
                    LevelComparison {
                        index,
                        analytic: e,
                        numeric: Some(got),
                        diff,
                        bound,
                        error_estimate: est,
                        pass: diff <= bound && est <= bound,
                    }
                }
                None => LevelComparison {
                    index,
                    analytic: e,
                    numeric: None,
                    diff: f64::INFINITY,
                    bound,
                    error_estimate: f64::NAN,
                    pass: false,
                },
            }
        })
        .collect();
    let extra = numeric
        .eigenvalues
        .iter()
        .skip(analytic.len())
        .copied()
        .collect::<Vec<_>>();
    let pass = levels.iter().all(|l| l.pass) && extra.is_empty();
    ComparisonReport { levels, extra, pass }
}

/// Default domain for Morse-type potentials (`B^2 e^{-2x}` wall on the
/// left, exponential tail on the right). `deepest` and `shallowest` are the
/// extreme tracked energies, both negative.
pub fn morse_domain(potential: &dyn Potential, a: f64, b: f64, deepest: f64, shallowest: f64) -> (f64, f64) {
    let s = (2.0 * a + 1.0).max(2.0 * deepest.abs().sqrt() + 1.0).max(1.0);
    let x_min = -(s / b).ln() - 8.0;
    // Rightmost classical turning point of the shallowest level.
    let mut x_turn = x_min;
    let mut x = x_min;
    while x < 200.0 {
        if potential.value(x) < shallowest {
            x_turn = x;
        }
        x += 0.01;
    }
    let kappa = shallowest.abs().sqrt().max(1e-3);
    let x_max = x_turn + (1e10f64).ln() / kappa + 2.0;
    (x_min, x_max)
}
