//! The convex family `B_α(G) = αA(G) + (1-α)L(G)`, its spectra, the
//! semidefiniteness threshold β₀ and closed forms for complete and complete
//! bipartite graphs.
//!
//! Useful rewrites: `B_α = (2α-1)A + (1-α)D = (1-2α)L + αD`. Special values:
//! `B_0 = L`, `B_{1/2} = D/2`, `B_{2/3} = Q/3`, `B_1 = A`.

use std::fmt;
use std::str::FromStr;

use num::rational::Ratio;
use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{sym_eigenvalues_with, SymMatrix, Spectrum, Tolerances};

/// A mixing parameter in `[0, 1]`. Values entered as decimals or fractions
/// also keep their exact rational form, which the combinatorial expansions use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaValue {
    value: f64,
    exact: Option<Ratio<i64>>,
}

impl AlphaValue {
    pub const ZERO: AlphaValue = AlphaValue::exact_const(0, 1);
    pub const HALF: AlphaValue = AlphaValue::exact_const(1, 2);
    pub const ONE: AlphaValue = AlphaValue::exact_const(1, 1);

    const fn exact_const(num: i64, den: i64) -> Self {
        Self {
            value: num as f64 / den as f64,
            exact: Some(Ratio::new_raw(num, den)),
        }
    }

    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::AlphaOutOfRange(value));
        }
        Ok(Self { value, exact: None })
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::AlphaOutOfRange(f64::NAN));
        }
        let r = Ratio::new(num, den);
        let value = r.to_f64().unwrap_or(f64::NAN);
        if r < Ratio::zero() || r > Ratio::from_integer(1) {
            return Err(Error::AlphaOutOfRange(value));
        }
        Ok(Self { value, exact: Some(r) })
    }

    pub fn two_thirds() -> Self {
        Self::ratio(2, 3).expect("2/3 is in range")
    }

    pub fn get(&self) -> f64 {
        self.value
    }

    pub fn exact(&self) -> Option<Ratio<i64>> {
        self.exact
    }

    pub fn is_half(&self) -> bool {
        match self.exact {
            Some(r) => r == Ratio::new(1, 2),
            None => self.value == 0.5,
        }
    }

    pub fn is_two_thirds(&self) -> bool {
        match self.exact {
            Some(r) => r == Ratio::new(2, 3),
            None => self.value == 2.0 / 3.0,
        }
    }
}

impl fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(r) if !has_terminating_decimal(*r.denom()) => write!(f, "{}/{}", r.numer(), r.denom()),
            _ => write!(f, "{}", self.value),
        }
    }
}

fn has_terminating_decimal(mut d: i64) -> bool {
    for p in [2, 5] {
        while d % p == 0 {
            d /= p;
        }
    }
    d == 1
}

impl FromStr for AlphaValue {
    type Err = Error;

    /// Accepts decimals (`0.25`, `1`, `1e-3`) and fractions (`2/3`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::AlphaOutOfRange(f64::NAN);
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            return Self::ratio(num, den);
        }
        let value: f64 = s.parse().map_err(|_| bad())?;
        if !value.is_finite() {
            return Err(bad());
        }
        let mut alpha = Self::new(value)?;
        alpha.exact = decimal_ratio(s);
        Ok(alpha)
    }
}

/// Exact value of a plain decimal literal like `0.125`, if it fits.
fn decimal_ratio(s: &str) -> Option<Ratio<i64>> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return None;
    }
    let den = 10i64.checked_pow(frac.len() as u32)?;
    let int: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    Some(Ratio::new(int.checked_mul(den)?.checked_add(frac)?, den))
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper(g.order(), |i, j| if i != j && g.has_edge(i, j) { 1.0 } else { 0.0 })
}

pub fn degree_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper(g.order(), |i, j| if i == j { g.degree(i) as f64 } else { 0.0 })
}

pub fn laplacian_matrix(g: &Graph) -> SymMatrix {
    b_alpha(g, AlphaValue::ZERO)
}

pub fn signless_laplacian_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper(g.order(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    })
}

/// `B_α(G) = (2α−1)A + (1−α)D`: diagonal `(1-α)d_i`, off-diagonal `2α-1` on edges.
pub fn b_alpha(g: &Graph, alpha: AlphaValue) -> SymMatrix {
    let a = alpha.get();
    let off = 2.0 * a - 1.0;
    let diag = 1.0 - a;
    SymMatrix::from_upper(g.order(), |i, j| {
        if i == j {
            diag * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            off
        } else {
            0.0
        }
    })
}

/// `αA + (1−α)L`, assembled literally from the definition.
pub fn b_alpha_convex_form(g: &Graph, alpha: AlphaValue) -> SymMatrix {
    let a = alpha.get();
    adjacency_matrix(g).scale(a).add(&laplacian_matrix(g).scale(1.0 - a))
}

/// `(1−2α)L + αD`.
pub fn b_alpha_laplacian_form(g: &Graph, alpha: AlphaValue) -> SymMatrix {
    let a = alpha.get();
    laplacian_matrix(g).scale(1.0 - 2.0 * a).add(&degree_matrix(g).scale(a))
}

pub fn spectrum(g: &Graph, alpha: AlphaValue) -> Result<Spectrum> {
    spectrum_with(g, alpha, &Tolerances::default())
}

pub fn spectrum_with(g: &Graph, alpha: AlphaValue, tol: &Tolerances) -> Result<Spectrum> {
    sym_eigenvalues_with(&b_alpha(g, alpha), tol)
}

/// Spectrum of `B_α(K_n)`: `(1-α)n - α` with multiplicity `n-1` and `(n-1)α` once.
pub fn spectrum_complete(n: usize, alpha: AlphaValue) -> Result<Spectrum> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("complete-graph closed form needs n >= 2, got {n}")));
    }
    let a = alpha.get();
    let nf = n as f64;
    let mut values = vec![(1.0 - a) * nf - a; n - 1];
    values.push((nf - 1.0) * a);
    Ok(Spectrum::from_unsorted(values))
}

/// Spectrum of `B_α(K_{a,b})`: `(1-α)a` (×`b-1`), `(1-α)b` (×`a-1`) and the
/// two roots `((1-α)(a+b) ± √((1-α)²(a-b)² + 4(2α-1)²ab)) / 2`. At `α = 1`
/// this is the adjacency spectrum `{±√(ab), 0, …}`.
pub fn spectrum_complete_bipartite(a: usize, b: usize, alpha: AlphaValue) -> Result<Spectrum> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidFamily(format!("complete bipartite sizes must be >= 1, got ({a}, {b})")));
    }
    let (af, bf) = (a as f64, b as f64);
    let t = alpha.get();
    let mut values = vec![(1.0 - t) * af; b - 1];
    values.extend(std::iter::repeat((1.0 - t) * bf).take(a - 1));
    let (hi, lo) = bipartite_pair(af, bf, t);
    values.push(hi);
    values.push(lo);
    Ok(Spectrum::from_unsorted(values))
}

fn bipartite_pair(a: f64, b: f64, t: f64) -> (f64, f64) {
    let s = (1.0 - t) * (a + b);
    let disc = ((1.0 - t).powi(2) * (a - b).powi(2) + 4.0 * (2.0 * t - 1.0).powi(2) * a * b).sqrt();
    ((s + disc) / 2.0, (s - disc) / 2.0)
}

/// Largest eigenvalue of `B_α(K_{a,b})`, defined for all nonnegative `a, b`.
pub fn f_alpha(a: usize, b: usize, alpha: AlphaValue) -> f64 {
    bipartite_pair(a as f64, b as f64, alpha.get()).0
}

/// The threshold `β₀ = max{β ∈ (0,1) : λₙ(B_β) = 0}`, found by bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaO {
    pub value: f64,
    pub bracket_width: f64,
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    match g.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

pub fn beta_o(g: &Graph) -> Result<BetaO> {
    beta_o_with(g, &Tolerances::default())
}

/// Bisection on `[2/3, 1]` of the predicate `λₙ(B_α) ≥ 0`. The predicate holds
/// on `[0, β₀]` and fails on `(β₀, 1]`, and `β₀ ≥ 2/3` once no vertex is
/// isolated, so the bracket is valid from the start.
pub fn beta_o_with(g: &Graph, tol: &Tolerances) -> Result<BetaO> {
    require_no_isolated(g)?;
    let slack = tol.beta_sign * g.order() as f64 * g.max_degree() as f64;
    let nonnegative = |alpha: f64| -> Result<bool> {
        let s = spectrum_with(g, AlphaValue::new(alpha)?, tol)?;
        Ok(s.smallest() >= -slack)
    };
    let (mut lo, mut hi) = (2.0 / 3.0, 1.0);
    while hi - lo >= tol.beta_bracket {
        let mid = 0.5 * (lo + hi);
        if nonnegative(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(BetaO {
        value: 0.5 * (lo + hi),
        bracket_width: hi - lo,
    })
}

/// `β₀ = (r - ρₙ) / (r - 2ρₙ)` for an r-regular graph with least adjacency
/// eigenvalue `ρₙ`.
pub fn beta_o_regular(g: &Graph) -> Result<f64> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let r = g.regular_degree().ok_or(Error::NotRegular)? as f64;
    let rho_n = spectrum(g, AlphaValue::ONE)?.smallest();
    Ok((r - rho_n) / (r - 2.0 * rho_n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefinitenessClass {
    PositiveDefinite,
    PositiveSemidefiniteSingular,
    Indefinite,
}

impl DefinitenessClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::PositiveDefinite => "positive_definite",
            Self::PositiveSemidefiniteSingular => "positive_semidefinite_singular",
            Self::Indefinite => "indefinite",
        }
    }
}

pub fn classify_definiteness(g: &Graph, alpha: AlphaValue) -> Result<DefinitenessClass> {
    classify_definiteness_with(g, alpha, &Tolerances::default())
}

pub fn classify_definiteness_with(g: &Graph, alpha: AlphaValue, tol: &Tolerances) -> Result<DefinitenessClass> {
    require_no_isolated(g)?;
    let s = spectrum_with(g, alpha, tol)?;
    let smallest = s.smallest();
    Ok(if smallest > tol.psd {
        DefinitenessClass::PositiveDefinite
    } else if smallest < -tol.psd {
        debug_assert!(s.largest() > 0.0, "an indefinite B_α has a positive eigenvalue");
        DefinitenessClass::Indefinite
    } else {
        DefinitenessClass::PositiveSemidefiniteSingular
    })
}

/// `2μ₁ + Δ`: every eigenvalue `λ_k(B_α)` is Lipschitz in α with this constant.
pub fn lipschitz_constant(g: &Graph) -> Result<f64> {
    let mu1 = spectrum(g, AlphaValue::ZERO)?.largest();
    Ok(2.0 * mu1 + g.max_degree() as f64)
}
