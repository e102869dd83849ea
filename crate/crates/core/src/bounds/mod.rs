//! Eigenvalue bounds for `B_α(G)` and the combinatorial quantities they use.

mod coloring;

pub use coloring::{
    chromatic_number, independence_number, ColoringCertificate, IndependenceCertificate, MAX_CHROMATIC_ORDER,
    MAX_INDEPENDENCE_ORDER,
};
pub use crate::balpha::f_alpha;

use num::rational::Ratio;
use num::Zero;

use crate::balpha::{beta_o, spectrum, AlphaValue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Tolerances;

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.size() == 0 {
        Err(Error::NoEdges)
    } else {
        Ok(())
    }
}

/// `λ₁(B_α) ≥ αδ`.
pub fn lower_lambda1_alpha_delta(g: &Graph, alpha: AlphaValue) -> Result<f64> {
    require_connected(g)?;
    Ok(alpha.get() * g.min_degree() as f64)
}

/// Edge classes around a vertex `v` of maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    pub center: usize,
    /// Edges inside `N(v)`.
    pub m1: usize,
    /// Edges inside `V ∖ N[v]`.
    pub m2: usize,
    /// Edges between `N(v)` and `V ∖ N[v]`.
    pub m3: usize,
}

pub fn neighborhood_split(g: &Graph, center: usize) -> Result<NeighborhoodSplit> {
    if center >= g.order() {
        return Err(Error::VertexOutOfRange {
            index: center,
            n: g.order(),
        });
    }
    if g.degree(center) != g.max_degree() {
        return Err(Error::NotMaxDegree {
            vertex: center,
            degree: g.degree(center),
            max_degree: g.max_degree(),
        });
    }
    let in_nbhd: Vec<bool> = (0..g.order()).map(|v| g.has_edge(center, v)).collect();
    let (mut m1, mut m2, mut m3) = (0, 0, 0);
    for &(u, v) in g.edges() {
        if u == center || v == center {
            continue;
        }
        match (in_nbhd[u], in_nbhd[v]) {
            (true, true) => m1 += 1,
            (false, false) => m2 += 1,
            _ => m3 += 1,
        }
    }
    Ok(NeighborhoodSplit { center, m1, m2, m3 })
}

/// Which of the two test vectors produced the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YzCase {
    /// `(α−1)(3α−2)Δ + 2 ≠ 0`.
    General,
    /// `(α−1)(3α−2)Δ + 2 = 0`: the indicator vector of `N(v)`.
    Degenerate,
}

/// Numerator and denominator of the Rayleigh-quotient bound `λ₁ ≥ Y/Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YzParts {
    pub p: f64,
    pub q: f64,
    pub y: f64,
    pub z: f64,
    pub case: YzCase,
}

impl YzParts {
    pub fn value(&self) -> f64 {
        self.y / self.z
    }
}

/// Exact test of `(α−1)(3α−2)Δ + 2 = 0` when α is known exactly.
fn degenerate_case(alpha: AlphaValue, delta: usize) -> bool {
    match alpha.exact() {
        Some(r) => {
            let a = Ratio::new(*r.numer() as i128, *r.denom() as i128);
            let one = Ratio::from_integer(1);
            let d = Ratio::from_integer(delta as i128);
            ((a - one) * (Ratio::from_integer(3) * a - Ratio::from_integer(2)) * d + Ratio::from_integer(2)).is_zero()
        }
        None => {
            let a = alpha.get();
            (a - 1.0) * (3.0 * a - 2.0) * delta as f64 + 2.0 == 0.0
        }
    }
}

/// `P`, `Q`, `Y`, `Z` at a given maximum-degree vertex.
pub fn yz_parts(g: &Graph, alpha: AlphaValue, split: &NeighborhoodSplit) -> Result<YzParts> {
    require_edges(g)?;
    if alpha.is_half() {
        return Err(Error::AlphaHalf);
    }
    let a = alpha.get();
    let n = g.order() as f64;
    let delta = g.max_degree();
    let d = delta as f64;
    let (m1, m2, m3) = (split.m1 as f64, split.m2 as f64, split.m3 as f64);

    let w = 2.0 * a - 1.0;
    let p = w * ((a - 1.0) * (3.0 * a - 2.0) * d + 2.0);
    let q = 16.0 * a * a - 6.0 * a * a * a - 10.0 * a + 2.0;
    let s = 2.0 * d + 5.0 * a - 3.0 * a * a;
    let t = a * (3.0 * a - 1.0);
    let d1 = d + 1.0;

    if degenerate_case(alpha, delta) {
        let y = 4.0 * w * w * d1 * d1 * (2.0 * a * m1 + (1.0 - a) * (d + m3)) * q * q;
        let z = 4.0 * d * d1 * d1 * w * w * q * q;
        return Ok(YzParts {
            p: 0.0,
            q,
            y,
            z,
            case: YzCase::Degenerate,
        });
    }

    let y = (t * t * d1 * d1 * (2.0 * a * m2 + (1.0 - a) * m3) + (1.0 - a) * w * w * s * s * d) * p * p
        + 4.0 * w * w * d1 * (w * d * s + t * d1 * m3) * p * q
        + 4.0 * w * w * d1 * d1 * (2.0 * a * m1 + (1.0 - a) * (d + m3)) * q * q;
    let z = (w * w * s * s + t * t * d1 * d1 * (n - d - 1.0)) * p * p + 4.0 * d * d1 * d1 * w * w * q * q;
    Ok(YzParts {
        p,
        q,
        y,
        z,
        case: YzCase::General,
    })
}

/// `λ₁(B_α) ≥ Y/Z`, maximised over all vertices of maximum degree. Undefined at α = 1/2.
pub fn lower_lambda1_yz(g: &Graph, alpha: AlphaValue) -> Result<f64> {
    require_edges(g)?;
    let delta = g.max_degree();
    let mut best = f64::NEG_INFINITY;
    for v in (0..g.order()).filter(|&v| g.degree(v) == delta) {
        let parts = yz_parts(g, alpha, &neighborhood_split(g, v)?)?;
        best = best.max(parts.value());
    }
    Ok(best)
}

/// Classical lower bounds on the largest adjacency, Laplacian and signless
/// Laplacian eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecializedLowerBounds {
    /// `ρ₁ ≥ 2m/n`.
    pub adjacency: f64,
    /// `μ₁ ≥ Δ + 1 + m₃/(Δ(Δ+1))`, best over maximum-degree vertices.
    pub laplacian: f64,
    /// `q₁ ≥ 4m/n`.
    pub signless: f64,
}

pub fn specialized_lower_bounds(g: &Graph) -> Result<SpecializedLowerBounds> {
    require_edges(g)?;
    let n = g.order() as f64;
    let m = g.size() as f64;
    let delta = g.max_degree();
    let d = delta as f64;
    let mut m3 = 0;
    for v in (0..g.order()).filter(|&v| g.degree(v) == delta) {
        m3 = m3.max(neighborhood_split(g, v)?.m3);
    }
    Ok(SpecializedLowerBounds {
        adjacency: 2.0 * m / n,
        laplacian: d + 1.0 + m3 as f64 / (d * (d + 1.0)),
        signless: 4.0 * m / n,
    })
}

/// `λ₁(B_α) ≤ (2 − 3α)Δ` for `α ≤ 1/2` and `αΔ` above.
pub fn upper_lambda1_piecewise(g: &Graph, alpha: AlphaValue) -> Result<f64> {
    require_connected(g)?;
    let a = alpha.get();
    let d = g.max_degree() as f64;
    Ok(if a <= 0.5 { (2.0 - 3.0 * a) * d } else { a * d })
}

/// `f_α(a, b)` for the parts of a connected bipartite graph: `λ₁(B_α) ≤ f_α(a, b)`.
pub fn upper_lambda1_bipartite(g: &Graph, alpha: AlphaValue) -> Result<f64> {
    require_connected(g)?;
    let (a, b) = bipartite_parts(g)?;
    Ok(f_alpha(a, b, alpha))
}

/// Part sizes of a connected bipartite graph, smaller first.
pub fn bipartite_parts(g: &Graph) -> Result<(usize, usize)> {
    let side = g.bipartition().ok_or(Error::NotBipartite)?;
    let a = side.iter().filter(|&&s| s).count();
    let b = g.order() - a;
    Ok((a.min(b), a.max(b)))
}

/// `λₙ(B_α) ≤ (2m/n)(χ(1−α) − α)/(χ − 1)` for any proper colouring with `chi` colours.
pub fn upper_lambda_n_chromatic(g: &Graph, alpha: AlphaValue, chi: usize) -> Result<f64> {
    require_edges(g)?;
    if chi < 2 {
        return Err(Error::ChiTooSmall(chi));
    }
    let a = alpha.get();
    let c = chi as f64;
    let avg = 2.0 * g.size() as f64 / g.order() as f64;
    Ok(avg * (c * (1.0 - a) - a) / (c - 1.0))
}

/// How `λₙ(B_α)` of a bipartite graph compares with `(2m/n)(2 − 3α)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteEquality {
    Strict,
    EqualAlphaTwoThirds,
    EqualRegularBipartite,
}

impl BipartiteEquality {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Strict => "strict",
            Self::EqualAlphaTwoThirds => "equal_alpha_two_thirds",
            Self::EqualRegularBipartite => "equal_regular_bipartite",
        }
    }
}

/// Predicts the equality branch from `α` and regularity, then checks the
/// prediction against the computed spectrum.
pub fn bipartite_lambda_n_equality_case(g: &Graph, alpha: AlphaValue) -> Result<BipartiteEquality> {
    bipartite_lambda_n_equality_case_with(g, alpha, &Tolerances::default())
}

pub fn bipartite_lambda_n_equality_case_with(g: &Graph, alpha: AlphaValue, tol: &Tolerances) -> Result<BipartiteEquality> {
    require_edges(g)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let predicted = if alpha.is_two_thirds() {
        BipartiteEquality::EqualAlphaTwoThirds
    } else if g.regular_degree().is_some() && alpha.get() >= 0.5 {
        BipartiteEquality::EqualRegularBipartite
    } else {
        BipartiteEquality::Strict
    };
    let bound = upper_lambda_n_chromatic(g, alpha, 2)?;
    let lambda_n = spectrum(g, alpha)?.smallest();
    let slack = tol.bound * (g.max_degree() as f64).max(1.0);
    let equal = (lambda_n - bound).abs() <= slack;
    if equal != (predicted != BipartiteEquality::Strict) {
        return Err(Error::Inconsistent(format!(
            "λn = {lambda_n}, bound = {bound}, predicted {}",
            predicted.as_str()
        )));
    }
    Ok(predicted)
}

/// Membership in the class of regular χ-partite graphs (χ ≥ 3) admitting an
/// optimal colouring with equal classes of size n/χ in which every vertex has
/// exactly `d/(χ−1)` neighbours in each other class.
pub fn is_in_lambda_class(g: &Graph) -> Result<bool> {
    let chi = chromatic_number(g)?.chi;
    let n = g.order();
    let Some(d) = g.regular_degree() else {
        return Ok(false);
    };
    if chi < 3 || n % chi != 0 || d % (chi - 1) != 0 {
        return Ok(false);
    }
    let part = n / chi;
    let cross = d / (chi - 1);
    Ok(coloring::any_colouring(g, chi, |colour| {
        (0..chi).all(|c| colour.iter().filter(|&&x| x == c).count() == part)
            && (0..n).all(|v| {
                let mut per_class = vec![0; chi];
                for &u in g.neighbors(v) {
                    per_class[colour[u]] += 1;
                }
                (0..chi).all(|c| if c == colour[v] { per_class[c] == 0 } else { per_class[c] == cross })
            })
    }))
}

/// Combinatorial consequences of the semidefiniteness threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaDerivedBounds {
    pub beta_o: f64,
    /// `χ ≥ β₀/(1−β₀)`.
    pub chi_lower: f64,
    /// `α(G) ≤ n(1−β₀)/β₀`; established for regular graphs only.
    pub independence_upper: f64,
    /// Whether `g` is regular, so that `independence_upper` is a proven bound.
    pub independence_hypothesis: bool,
}

pub fn beta_derived_bounds(g: &Graph) -> Result<BetaDerivedBounds> {
    let b = beta_o(g)?.value;
    Ok(BetaDerivedBounds {
        beta_o: b,
        chi_lower: b / (1.0 - b),
        independence_upper: g.order() as f64 * (1.0 - b) / b,
        independence_hypothesis: g.regular_degree().is_some(),
    })
}
