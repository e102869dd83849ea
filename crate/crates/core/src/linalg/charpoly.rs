use super::dd::Dd;
use super::SymMatrix;
use crate::error::{Error, Result};

/// Largest order accepted by [`char_poly`]; the trace recurrence loses
/// accuracy quickly beyond it.
pub const MAX_CHAR_POLY_ORDER: usize = 64;

/// Monic characteristic polynomial `λⁿ + a₁λⁿ⁻¹ + ⋯ + aₙ`, stored as
/// `[1, a₁, …, aₙ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    /// Panics unless `coeffs[0] == 1`.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(coeffs.first() == Some(&1.0), "characteristic polynomial must be monic");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `a_k`, the coefficient of `λⁿ⁻ᵏ`.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &a| acc * x + a)
    }
}

/// Faddeev–LeVerrier recurrence evaluated in double-double arithmetic:
/// `M₁ = I`, `a_k = -tr(A·M_k)/k`, `M_{k+1} = A·M_k + a_k·I`.
pub fn char_poly(m: &SymMatrix) -> Result<CharPoly> {
    let n = m.order();
    if n > MAX_CHAR_POLY_ORDER {
        return Err(Error::BudgetExceeded {
            what: "characteristic polynomial",
            limit: MAX_CHAR_POLY_ORDER,
            n,
        });
    }
    let a: Vec<Dd> = m.to_dense().into_iter().map(Dd::from).collect();
    let mut coeffs = vec![Dd::from(1.0)];
    let mut mk: Vec<Dd> = vec![Dd::ZERO; n * n];
    for i in 0..n {
        mk[i * n + i] = Dd::from(1.0);
    }
    for k in 1..=n {
        let product = matmul(&a, &mk, n);
        let trace = (0..n).fold(Dd::ZERO, |acc, i| acc + product[i * n + i]);
        let ak = (-trace).div_usize(k);
        coeffs.push(ak);
        if k < n {
            mk = product;
            for i in 0..n {
                mk[i * n + i] = mk[i * n + i] + ak;
            }
        }
    }
    Ok(CharPoly::from_coeffs(coeffs.into_iter().map(Dd::to_f64).collect()))
}

fn matmul(a: &[Dd], b: &[Dd], n: usize) -> Vec<Dd> {
    let mut out = vec![Dd::ZERO; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == Dd::ZERO {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = out[i * n + j] + aik * b[k * n + j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, sym_eigenvalues};
    use proptest::prelude::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> SymMatrix {
        SymMatrix::from_upper(n, |i, j| if edges.contains(&(i, j)) { 1.0 } else { 0.0 })
    }

    #[test]
    fn k2_adjacency() {
        let p = char_poly(&adjacency(2, &[(0, 1)])).unwrap();
        assert_eq!(p.coeffs(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn k3_adjacency() {
        // det(λI - A(K3)) = (λ-2)(λ+1)² = λ³ - 3λ - 2
        let p = char_poly(&adjacency(3, &[(0, 1), (0, 2), (1, 2)])).unwrap();
        assert_eq!(p.coeffs(), &[1.0, 0.0, -3.0, -2.0]);
    }

    #[test]
    fn order_guard() {
        assert!(matches!(
            char_poly(&SymMatrix::zeros(65)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(char_poly(&SymMatrix::zeros(0)).unwrap().coeffs(), &[1.0]);
    }

    fn random_symmetric() -> impl Strategy<Value = SymMatrix> {
        (1usize..=12).prop_flat_map(|n| {
            proptest::collection::vec(-3.0f64..3.0, n * n).prop_map(move |v| SymMatrix::from_upper(n, |i, j| v[i * n + j]))
        })
    }

    proptest! {
        #[test]
        fn consistent_with_spectrum(m in random_symmetric()) {
            let p = char_poly(&m).unwrap();
            let n = m.order();
            let scale = m.inf_norm().max(1.0).powi(n as i32);
            prop_assert!((p.coeff(1) + m.trace()).abs() <= 1e-12 * m.inf_norm().max(1.0));
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((p.coeff(n) - sign * determinant(&m)).abs() <= 1e-9 * scale);
            for &lambda in sym_eigenvalues(&m).unwrap().values() {
                prop_assert!(p.eval(lambda).abs() <= 1e-7 * scale, "p({lambda}) = {}", p.eval(lambda));
            }
        }
    }
}
