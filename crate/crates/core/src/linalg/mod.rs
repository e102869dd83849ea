//! Dense real symmetric linear algebra.

mod charpoly;
mod dd;
mod eigen;
mod matrix;

pub use charpoly::{char_poly, CharPoly, MAX_CHAR_POLY_ORDER};
pub use eigen::{sym_eigenvalues, sym_eigenvalues_with, Spectrum};
pub use matrix::{IntMatrix, SymMatrix};

use std::collections::VecDeque;

/// Numerical tolerances shared across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Eigenvalue accuracy, relative to `max(1, ‖M‖∞)`.
    pub eig: f64,
    /// Pivot threshold for declaring a determinant exactly zero, relative to `max(1, ‖M‖∞)`.
    pub det: f64,
    /// Residual allowed when a characteristic polynomial is evaluated at an
    /// eigenvalue, relative to `max(1, ‖M‖∞)ⁿ`.
    pub poly: f64,
    /// Sign threshold for definiteness classification.
    pub psd: f64,
    /// Target bracket width for the β₀ bisection.
    pub beta_bracket: f64,
    /// λₙ counts as nonnegative in the β₀ predicate when `λₙ ≥ -beta_sign·n·Δ`.
    pub beta_sign: f64,
    /// Slack allowed when checking an eigenvalue inequality.
    pub bound: f64,
    /// Jacobi stopping rule: off-diagonal Frobenius norm below `jacobi·‖M‖_F`.
    pub jacobi: f64,
    pub jacobi_max_sweeps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eig: 1e-10,
            det: 1e-9,
            poly: 1e-7,
            psd: 1e-9,
            beta_bracket: 1e-10,
            beta_sign: 1e-11,
            bound: 1e-7,
            jacobi: 1e-13,
            jacobi_max_sweeps: 100,
        }
    }
}

/// Determinant by Gaussian elimination with partial pivoting. Returns exactly
/// `0.0` once a pivot falls below `det·max(1, ‖M‖∞)`.
pub fn determinant(m: &SymMatrix) -> f64 {
    determinant_with(m, &Tolerances::default())
}

pub fn determinant_with(m: &SymMatrix, tol: &Tolerances) -> f64 {
    let n = m.order();
    let threshold = tol.det * m.inf_norm().max(1.0);
    let mut a = m.to_dense();
    let mut det = 1.0;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap();
        let pivot = a[pivot_row * n + col];
        if pivot.abs() <= threshold {
            return 0.0;
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            det = -det;
        }
        det *= pivot;
        for row in col + 1..n {
            let factor = a[row * n + col] / pivot;
            if factor != 0.0 {
                for k in col..n {
                    a[row * n + k] -= factor * a[col * n + k];
                }
            }
        }
    }
    det
}

/// True iff the support digraph of `m` is strongly connected, which is
/// equivalent to `(I + |M|)^(n-1)` being entrywise positive. Symmetric
/// support makes this plain connectivity.
pub fn is_irreducible(m: &SymMatrix) -> bool {
    let n = m.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && i != j && m.get(i, j) != 0.0 {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == n
}
