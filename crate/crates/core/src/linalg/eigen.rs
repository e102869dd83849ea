use super::{SymMatrix, Tolerances};
use crate::error::{Error, Result};

/// Eigenvalues sorted in nonincreasing order, `λ₁ ≥ λ₂ ≥ … ≥ λₙ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts `values` into nonincreasing order.
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_k` with 1-based `k`.
    pub fn lambda(&self, k: usize) -> f64 {
        self.0[k - 1]
    }

    pub fn largest(&self) -> f64 {
        self.0[0]
    }

    pub fn smallest(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn spectral_radius(&self) -> f64 {
        self.largest().abs().max(self.smallest().abs())
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn product(&self) -> f64 {
        self.0.iter().product()
    }

    /// Number of eigenvalues within `tol` of `value`.
    pub fn multiplicity(&self, value: f64, tol: f64) -> usize {
        self.0.iter().filter(|&&x| (x - value).abs() <= tol).count()
    }

    /// Largest entrywise distance to another spectrum of the same length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.len(), other.len(), "spectrum lengths differ");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn sym_eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    sym_eigenvalues_with(m, &Tolerances::default())
}

/// Cyclic Jacobi rotations on a dense copy, sweeping until the off-diagonal
/// Frobenius norm drops below `tol.jacobi·‖M‖_F`.
pub fn sym_eigenvalues_with(m: &SymMatrix, tol: &Tolerances) -> Result<Spectrum> {
    let n = m.order();
    let mut a = m.to_dense();
    let target = tol.jacobi * m.frobenius_norm();

    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == tol.jacobi_max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }

    Ok(Spectrum::from_unsorted((0..n).map(|i| a[i * n + i]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_spectrum(m: &SymMatrix, expected: &[f64]) {
        let s = sym_eigenvalues(m).unwrap();
        let tol = 1e-10 * m.inf_norm().max(1.0);
        for (got, want) in s.values().iter().zip(expected) {
            assert!((got - want).abs() <= tol, "{:?} vs {expected:?}", s.values());
        }
    }

    #[test]
    fn zero_matrix() {
        assert_spectrum(&SymMatrix::zeros(3), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn triangle_adjacency() {
        let a = SymMatrix::from_rows(&[vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0], vec![1.0, 1.0, 0.0]]).unwrap();
        assert_spectrum(&a, &[2.0, -1.0, -1.0]);
    }

    #[test]
    fn path_laplacian() {
        // det(λI - L(P3)) = λ(λ-1)(λ-3)
        let l = SymMatrix::from_rows(&[vec![1.0, -1.0, 0.0], vec![-1.0, 2.0, -1.0], vec![0.0, -1.0, 1.0]]).unwrap();
        assert_spectrum(&l, &[3.0, 1.0, 0.0]);
    }

    #[test]
    fn reports_non_convergence() {
        let a = SymMatrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![2.0, 1.0, 0.5], vec![3.0, 0.5, -1.0]]).unwrap();
        let tol = Tolerances {
            jacobi: 0.0,
            jacobi_max_sweeps: 1,
            ..Tolerances::default()
        };
        assert!(matches!(sym_eigenvalues_with(&a, &tol), Err(Error::NoConvergence { sweeps: 1, .. })));
    }

    fn random_symmetric() -> impl Strategy<Value = SymMatrix> {
        (1usize..=12).prop_flat_map(|n| {
            proptest::collection::vec(-5.0f64..5.0, n * n).prop_map(move |v| SymMatrix::from_upper(n, |i, j| v[i * n + j]))
        })
    }

    proptest! {
        #[test]
        fn trace_and_determinant(m in random_symmetric()) {
            let s = sym_eigenvalues(&m).unwrap();
            let n = m.order() as f64;
            let tol_eig = 1e-10 * m.inf_norm().max(1.0);
            prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!((s.sum() - m.trace()).abs() <= n * tol_eig);
            let det = super::super::determinant(&m);
            let scale = m.inf_norm().max(1.0).powi(m.order() as i32);
            prop_assert!((s.product() - det).abs() <= 1e-9 * scale, "{} vs {}", s.product(), det);
        }
    }
}
