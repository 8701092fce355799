//! Polynomial solutions of second-order linear ODEs with polynomial
//! coefficients, found exactly by undetermined coefficients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rational::Q;

/// `p2(z) y'' + p1(z) y' + p0(z) y = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOde {
    pub p2: PolyQ,
    pub p1: PolyQ,
    pub p0: PolyQ,
}

impl LinearOde {
    pub fn new(p2: PolyQ, p1: PolyQ, p0: PolyQ) -> Self {
        LinearOde { p2, p1, p0 }
    }

    pub fn apply(&self, y: &PolyQ) -> PolyQ {
        let d1 = y.derivative();
        let d2 = d1.derivative();
        &(&(&self.p2 * &d2) + &(&self.p1 * &d1)) + &(&self.p0 * y)
    }

    /// Basis of the polynomial solutions of degree at most `degree`.
    pub fn polynomial_solutions(&self, degree: usize) -> Vec<PolyQ> {
        let columns: Vec<PolyQ> = (0..=degree)
            .map(|k| self.apply(&PolyQ::monomial(Q::one(), k)))
            .collect();
        let rows = columns.iter().filter_map(|c| c.degree()).max().map_or(0, |d| d + 1);
        let mut mat: Vec<Vec<Q>> = (0..rows)
            .map(|r| columns.iter().map(|c| c.coeff(r)).collect())
            .collect();
        nullspace(&mut mat, degree + 1)
            .into_iter()
            .map(PolyQ::from_coeffs)
            .collect()
    }

    /// The unique (up to scale) solution of exact degree `degree`, scaled to
    /// leading coefficient one.
    pub fn unique_solution(&self, degree: usize) -> Result<PolyQ> {
        let basis = self.polynomial_solutions(degree);
        match basis.len() {
            1 => {
                let y = &basis[0];
                if y.degree() != Some(degree) {
                    return Err(Error::NoPolynomialSolution {
                        degree,
                        reason: format!("solution has degree {:?}", y.degree()),
                    });
                }
                let lead = y.leading().cloned().unwrap_or_else(Q::one);
                Ok(y.scale(&(Q::one() / lead)))
            }
            0 => Err(Error::NoPolynomialSolution {
                degree,
                reason: "trivial nullspace".into(),
            }),
            k => Err(Error::NoPolynomialSolution {
                degree,
                reason: format!("{k}-dimensional solution space"),
            }),
        }
    }
}

/// Nullspace of `mat` (rows x cols) by exact Gauss-Jordan elimination.
fn nullspace(mat: &mut [Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let inv = Q::one() / &mat[row][col];
        for v in mat[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = mat[row].clone();
        for (r, target) in mat.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let f = target[col].clone();
                for (t, p) in target.iter_mut().zip(&pivot) {
                    *t -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); cols];
            v[free] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -mat[r][free].clone();
            }
            v
        })
        .collect()
}
