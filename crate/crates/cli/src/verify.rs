//! Property-based self-check over an exhaustive plus random graph corpus.

use rayon::prelude::*;

use balpha_core::balpha::{
    adjacency_matrix, b_alpha, b_alpha_convex_form, b_alpha_laplacian_form, beta_o_regular, beta_o_with,
    classify_definiteness_with, laplacian_matrix, lipschitz_constant, signless_laplacian_matrix, spectrum_complete,
    spectrum_complete_bipartite, AlphaValue, DefinitenessClass,
};
use balpha_core::bounds::{
    beta_derived_bounds, bipartite_lambda_n_equality_case_with, bipartite_parts, chromatic_number, f_alpha,
    independence_number, is_in_lambda_class, lower_lambda1_alpha_delta, lower_lambda1_yz, specialized_lower_bounds,
    upper_lambda1_bipartite, upper_lambda1_piecewise, upper_lambda_n_chromatic, MAX_CHROMATIC_ORDER,
};
use balpha_core::graph::{connected_graphs, encode_graph6, format_edge_list, parse_edge_list, parse_graph6, random_connected_graph};
use balpha_core::linalg::{char_poly, determinant_with, sym_eigenvalues_with};
use balpha_core::sachs::{det_adjacency_harary, SachsTable, MAX_SACHS_ORDER};
use balpha_core::{Graph, Spectrum, Tolerances};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub random: usize,
    pub random_max_n: usize,
    pub seed: u64,
    pub grid: Vec<AlphaValue>,
    /// Deliberately inflates the Y/Z bound so the harness must report failures.
    pub inject_fault: bool,
    pub tol: Tolerances,
}

const PROPERTIES: [&str; 13] = [
    "graph_structure",
    "incidence_identities",
    "specializations",
    "perron",
    "lipschitz",
    "psd_threshold",
    "lambda1_bounds",
    "lambda_n_bounds",
    "classical_bounds",
    "derived_bounds",
    "sachs",
    "closed_forms",
    "lambda_class",
];

const STRUCTURE: usize = 0;
const INCIDENCE: usize = 1;
const SPECIAL: usize = 2;
const PERRON: usize = 3;
const LIPSCHITZ: usize = 4;
const PSD: usize = 5;
const LAMBDA1: usize = 6;
const LAMBDA_N: usize = 7;
const CLASSICAL: usize = 8;
const DERIVED: usize = 9;
const SACHS: usize = 10;
const CLOSED: usize = 11;
const LAMBDA_CLASS: usize = 12;

const MAX_REPORTED_FAILURES: usize = 50;

#[derive(Debug, Clone)]
struct Failure {
    property: usize,
    graph6: String,
    alpha: Option<String>,
    detail: String,
}

struct Checker<'a> {
    g: &'a Graph,
    graph6: String,
    counts: [(usize, usize); PROPERTIES.len()],
    failures: Vec<Failure>,
}

impl Checker<'_> {
    fn check(&mut self, property: usize, alpha: Option<AlphaValue>, ok: bool, detail: impl FnOnce() -> String) {
        self.counts[property].0 += 1;
        if !ok {
            self.counts[property].1 += 1;
            self.failures.push(Failure {
                property,
                graph6: self.graph6.clone(),
                alpha: alpha.map(|a| a.to_string()),
                detail: detail(),
            });
        }
    }

    /// Records a library error as a failed check.
    fn ok<T>(&mut self, property: usize, alpha: Option<AlphaValue>, r: balpha_core::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(property, alpha, false, || format!("unexpected error: {e}"));
                None
            }
        }
    }
}

pub fn corpus(cfg: &VerifyConfig) -> (Vec<Graph>, usize) {
    let mut graphs: Vec<Graph> = (1..=cfg.max_n).flat_map(connected_graphs).collect();
    let exhaustive = graphs.len();
    if cfg.random_max_n > 0 {
        const DENSITIES: [f64; 3] = [0.3, 0.5, 0.7];
        for i in 0..cfg.random {
            let n = 1 + i % cfg.random_max_n;
            let p = DENSITIES[i % DENSITIES.len()];
            graphs.push(random_connected_graph(n, p, cfg.seed.wrapping_add(i as u64)));
        }
    }
    (graphs, exhaustive)
}

/// Runs every property and returns the report and whether all checks passed.
pub fn run(cfg: &VerifyConfig) -> (String, bool) {
    let (graphs, exhaustive) = corpus(cfg);
    let results: Vec<Checker> = graphs.par_iter().map(|g| check_graph(g, cfg)).collect();

    let mut totals = [(0usize, 0usize); PROPERTIES.len()];
    let mut failures = Vec::new();
    for r in results {
        for (t, c) in totals.iter_mut().zip(r.counts) {
            t.0 += c.0;
            t.1 += c.1;
        }
        failures.extend(r.failures);
    }

    let mut out = format!(
        "verify: seed {}, {} graphs ({} exhaustive up to n = {}, {} random up to n = {}), {} alpha values\n",
        cfg.seed,
        graphs.len(),
        exhaustive,
        cfg.max_n,
        graphs.len() - exhaustive,
        cfg.random_max_n,
        cfg.grid.len()
    );
    for (name, (checks, failed)) in PROPERTIES.iter().zip(totals) {
        out += &format!("{name:<22} checks={checks:<8} failures={failed}\n");
    }
    let checks: usize = totals.iter().map(|t| t.0).sum();
    let failed: usize = totals.iter().map(|t| t.1).sum();
    for f in failures.iter().take(MAX_REPORTED_FAILURES) {
        out += &format!(
            "FAIL {} graph6={} alpha={} {}\n",
            PROPERTIES[f.property],
            f.graph6,
            f.alpha.as_deref().unwrap_or("-"),
            f.detail
        );
    }
    if failures.len() > MAX_REPORTED_FAILURES {
        out += &format!("... {} more failures not shown\n", failures.len() - MAX_REPORTED_FAILURES);
    }
    out += &format!("total: checks={checks} failures={failed}\n");
    (out, failed == 0)
}

fn check_graph<'a>(g: &'a Graph, cfg: &VerifyConfig) -> Checker<'a> {
    let mut c = Checker {
        g,
        graph6: encode_graph6(g),
        counts: [(0, 0); PROPERTIES.len()],
        failures: Vec::new(),
    };
    let tol = &cfg.tol;
    structure(&mut c);
    incidence(&mut c);

    let spectra: Vec<Option<Spectrum>> = cfg
        .grid
        .iter()
        .map(|&a| {
            let s = balpha_core::balpha::spectrum_with(g, a, tol);
            c.ok(SPECIAL, Some(a), s)
        })
        .collect();
    specializations(&mut c, cfg);
    for (&a, s) in cfg.grid.iter().zip(&spectra) {
        let Some(s) = s else { continue };
        perron(&mut c, a, s, tol);
        lambda1_bounds(&mut c, a, s, cfg);
        lambda_n_bounds(&mut c, a, s, tol);
        closed_forms(&mut c, a, s);
    }
    lipschitz(&mut c, &cfg.grid, &spectra);
    psd_threshold(&mut c, cfg);
    classical(&mut c, tol);
    derived(&mut c, tol);
    sachs(&mut c, tol);
    lambda_class(&mut c, &cfg.grid, &spectra);
    c
}

fn structure(c: &mut Checker) {
    let g = c.g;
    let n = g.order();
    let symmetric = (0..n).all(|i| !g.has_edge(i, i) && (0..n).all(|j| g.has_edge(i, j) == g.has_edge(j, i)));
    c.check(STRUCTURE, None, symmetric, || "adjacency not symmetric with zero diagonal".into());
    let degree_sum: usize = g.degrees().iter().sum();
    c.check(STRUCTURE, None, degree_sum == 2 * g.size(), || format!("degree sum {degree_sum} != 2m"));
    let round = parse_graph6(&c.graph6).map(|h| h == *g).unwrap_or(false);
    c.check(STRUCTURE, None, round, || "graph6 round trip changed the graph".into());
    let round = parse_edge_list(&format_edge_list(g)).map(|h| h == *g).unwrap_or(false);
    c.check(STRUCTURE, None, round, || "edge-list round trip changed the graph".into());
}

fn incidence(c: &mut Checker) {
    let g = c.g;
    let n = g.order();
    let m_inc = g.incidence_matrix();
    let mmt = m_inc.mul(&m_inc.transpose());
    let signless_ok =
        (0..n).all(|i| (0..n).all(|j| mmt.get(i, j) == if i == j { g.degree(i) as i64 } else { g.has_edge(i, j) as i64 }));
    c.check(INCIDENCE, None, signless_ok, || "M Mᵀ != A + D".into());
    if g.size() == 0 {
        return;
    }
    let Some(line) = c.ok(INCIDENCE, None, g.line_graph()) else { return };
    let mtm = m_inc.transpose().mul(&m_inc);
    let expected = line.adjacency_int().add_diagonal(2);
    let m = g.size();
    let line_ok = (0..m).all(|i| (0..m).all(|j| mtm.get(i, j) == expected.get(i, j)));
    c.check(INCIDENCE, None, line_ok, || "Mᵀ M != A(L(G)) + 2I".into());
}

fn specializations(c: &mut Checker, cfg: &VerifyConfig) {
    let g = c.g;
    let exact = [
        (AlphaValue::ZERO, laplacian_matrix(g), "B_0 != L"),
        (AlphaValue::ONE, adjacency_matrix(g), "B_1 != A"),
        (AlphaValue::two_thirds(), signless_laplacian_matrix(g).scale(1.0 / 3.0), "B_2/3 != Q/3"),
    ];
    for (a, expected, what) in exact {
        let diff = b_alpha(g, a).max_abs_diff(&expected);
        c.check(SPECIAL, Some(a), diff <= 4.0 * f64::EPSILON, || format!("{what}: {diff:.3e}"));
    }
    let half = b_alpha(g, AlphaValue::HALF);
    let diagonal = (0..g.order()).all(|i| (0..g.order()).all(|j| half.get(i, j) == if i == j { g.degree(i) as f64 / 2.0 } else { 0.0 }));
    c.check(SPECIAL, Some(AlphaValue::HALF), diagonal, || "B_1/2 != D/2".into());
    let scale = 12.0 * f64::EPSILON * (g.max_degree() as f64).max(1.0);
    for &a in &cfg.grid {
        let b = b_alpha(g, a);
        let d1 = b.max_abs_diff(&b_alpha_convex_form(g, a));
        let d2 = b.max_abs_diff(&b_alpha_laplacian_form(g, a));
        c.check(SPECIAL, Some(a), d1 <= scale && d2 <= scale, || format!("forms differ by {d1:.3e}, {d2:.3e}"));
    }
}

fn perron(c: &mut Checker, a: AlphaValue, s: &Spectrum, tol: &Tolerances) {
    if !c.g.is_connected() || c.g.order() < 2 {
        return;
    }
    let slack = tol.bound * (c.g.max_degree() as f64).max(1.0);
    let (l1, ln) = (s.largest(), s.smallest());
    c.check(PERRON, Some(a), ln.abs() <= l1 + slack, || format!("|λn| = {} > λ1 = {l1}", ln.abs()));
    // nonnegative and irreducible only above 1/2
    if a.get() <= 0.5 {
        return;
    }
    let simple = s.multiplicity(l1, 1e-7) == 1;
    c.check(PERRON, Some(a), simple, || format!("λ1 = {l1} is not simple"));
}

fn lipschitz(c: &mut Checker, grid: &[AlphaValue], spectra: &[Option<Spectrum>]) {
    let Some(lip) = c.ok(LIPSCHITZ, None, lipschitz_constant(c.g)) else { return };
    for i in 0..grid.len() {
        for j in i + 1..grid.len() {
            let (Some(si), Some(sj)) = (&spectra[i], &spectra[j]) else { continue };
            let dist = (grid[i].get() - grid[j].get()).abs();
            let moved = si.max_abs_diff(sj);
            let allowed = lip * dist + 1e-9 * (1.0 + lip);
            c.check(LIPSCHITZ, Some(grid[i]), moved <= allowed, || {
                format!("max |Δλ| = {moved} over |Δα| = {dist} exceeds {lip}·|Δα|")
            });
        }
    }
}

fn psd_threshold(c: &mut Checker, cfg: &VerifyConfig) {
    let g = c.g;
    if g.size() == 0 || g.isolated_vertex().is_some() {
        return;
    }
    let tol = &cfg.tol;
    let Some(b) = c.ok(PSD, None, beta_o_with(g, tol)) else { return };
    let beta = b.value;
    c.check(PSD, None, beta >= 2.0 / 3.0 - 1e-9 && beta <= 1.0, || format!("β₀ = {beta} outside [2/3, 1]"));
    if let Ok(r) = beta_o_regular(g) {
        c.check(PSD, None, (r - beta).abs() <= 1e-8, || format!("β₀ = {beta} but regular formula gives {r}"));
    }
    for &a in &cfg.grid {
        let Some(class) = c.ok(PSD, Some(a), classify_definiteness_with(g, a, tol)) else { continue };
        if a.get() <= beta - 1e-6 {
            c.check(PSD, Some(a), class != DefinitenessClass::Indefinite, || format!("indefinite below β₀ = {beta}"));
        } else if a.get() > beta + 0.01 {
            c.check(PSD, Some(a), class == DefinitenessClass::Indefinite, || {
                format!("{} above β₀ + 0.01 = {}", class.as_str(), beta + 0.01)
            });
        }
    }
}

fn lambda1_bounds(c: &mut Checker, a: AlphaValue, s: &Spectrum, cfg: &VerifyConfig) {
    let g = c.g;
    let l1 = s.largest();
    let eps = cfg.tol.bound;
    if g.size() > 0 && !a.is_half() {
        if let Some(yz) = c.ok(LAMBDA1, Some(a), lower_lambda1_yz(g, a)) {
            let yz = if cfg.inject_fault { 1.5 * yz + 1.0 } else { yz };
            c.check(LAMBDA1, Some(a), l1 >= yz - eps, || format!("λ1 = {l1} < Y/Z bound {yz}"));
        }
    }
    if !g.is_connected() {
        return;
    }
    if let Some(lo) = c.ok(LAMBDA1, Some(a), lower_lambda1_alpha_delta(g, a)) {
        c.check(LAMBDA1, Some(a), l1 >= lo - eps, || format!("λ1 = {l1} < αδ = {lo}"));
    }
    if let Some(hi) = c.ok(LAMBDA1, Some(a), upper_lambda1_piecewise(g, a)) {
        c.check(LAMBDA1, Some(a), l1 <= hi + eps, || format!("λ1 = {l1} > piecewise bound {hi}"));
    }
    if g.is_bipartite() && g.size() > 0 {
        let Some(f) = c.ok(LAMBDA1, Some(a), upper_lambda1_bipartite(g, a)) else { return };
        c.check(LAMBDA1, Some(a), l1 <= f + eps, || format!("λ1 = {l1} > f_α = {f}"));
        if !a.is_half() {
            let Some((p, q)) = c.ok(LAMBDA1, Some(a), bipartite_parts(g)) else { return };
            let complete = g.size() == p * q;
            let tight = (l1 - f).abs() <= 1e-7 * (1.0 + f);
            c.check(LAMBDA1, Some(a), tight == complete, || {
                format!("f_α({p},{q}) = {f}, λ1 = {l1}: equality {tight} but complete bipartite {complete}")
            });
            debug_assert_eq!(f, f_alpha(p, q, a));
        }
    }
}

fn lambda_n_bounds(c: &mut Checker, a: AlphaValue, s: &Spectrum, tol: &Tolerances) {
    let g = c.g;
    if g.size() == 0 {
        return;
    }
    let ln = s.smallest();
    let eps = tol.bound;
    if g.order() <= MAX_CHROMATIC_ORDER {
        let Some(chi) = c.ok(LAMBDA_N, Some(a), chromatic_number(g)) else { return };
        if let Some(u) = c.ok(LAMBDA_N, Some(a), upper_lambda_n_chromatic(g, a, chi.chi)) {
            c.check(LAMBDA_N, Some(a), ln <= u + eps, || format!("λn = {ln} > chromatic bound {u} (χ = {})", chi.chi));
        }
    }
    if g.is_bipartite() {
        c.ok(LAMBDA_N, Some(a), bipartite_lambda_n_equality_case_with(g, a, tol));
        c.check(LAMBDA_N, Some(a), true, String::new);
    }
}

fn classical(c: &mut Checker, tol: &Tolerances) {
    let g = c.g;
    if g.size() == 0 {
        return;
    }
    let Some(b) = c.ok(CLASSICAL, None, specialized_lower_bounds(g)) else { return };
    let eig = |m| sym_eigenvalues_with(&m, tol).map(|s| s.largest());
    let (Some(rho), Some(mu), Some(q)) = (
        c.ok(CLASSICAL, None, eig(adjacency_matrix(g))),
        c.ok(CLASSICAL, None, eig(laplacian_matrix(g))),
        c.ok(CLASSICAL, None, eig(signless_laplacian_matrix(g))),
    ) else {
        return;
    };
    let eps = tol.bound;
    c.check(CLASSICAL, None, rho >= b.adjacency - eps, || format!("ρ1 = {rho} < 2m/n = {}", b.adjacency));
    c.check(CLASSICAL, None, mu >= b.laplacian - eps, || format!("μ1 = {mu} < {}", b.laplacian));
    c.check(CLASSICAL, None, q >= b.signless - eps, || format!("q1 = {q} < 4m/n = {}", b.signless));
    if g.is_connected() {
        let regular = g.regular_degree().is_some();
        let tight = (rho - b.adjacency).abs() <= 1e-7 * (1.0 + rho);
        c.check(CLASSICAL, None, tight == regular, || format!("ρ1 = 2m/n is {tight} but regular is {regular}"));
        let tight = (q - b.signless).abs() <= 1e-7 * (1.0 + q);
        c.check(CLASSICAL, None, tight == regular, || format!("q1 = 4m/n is {tight} but regular is {regular}"));
    }
}

fn derived(c: &mut Checker, tol: &Tolerances) {
    let g = c.g;
    if g.size() == 0 || g.isolated_vertex().is_some() || g.order() > MAX_CHROMATIC_ORDER {
        return;
    }
    let Some(d) = c.ok(DERIVED, None, beta_derived_bounds(g)) else { return };
    let Some(chi) = c.ok(DERIVED, None, chromatic_number(g)) else { return };
    let eps = tol.bound;
    c.check(DERIVED, None, chi.chi as f64 >= d.chi_lower - eps, || {
        format!("χ = {} < β₀/(1−β₀) = {}", chi.chi, d.chi_lower)
    });
    if d.independence_hypothesis {
        let Some(ind) = c.ok(DERIVED, None, independence_number(g)) else { return };
        c.check(DERIVED, None, ind.alpha_g as f64 <= d.independence_upper + eps, || {
            format!("α(G) = {} > n(1−β₀)/β₀ = {}", ind.alpha_g, d.independence_upper)
        });
    }
}

fn sachs(c: &mut Checker, tol: &Tolerances) {
    let g = c.g;
    if g.order() > MAX_SACHS_ORDER {
        return;
    }
    let Some(table) = c.ok(SACHS, None, SachsTable::new(g)) else { return };
    let n = g.order();
    for a in ["0.1", "0.3", "2/3", "0.9", "1"].map(|s| s.parse::<AlphaValue>().expect("literal")) {
        let b = b_alpha(g, a);
        let det = determinant_with(&b, tol);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let via_sachs = sign * table.coefficient(n, a);
        c.check(SACHS, Some(a), (via_sachs - det).abs() <= 1e-8 * (1.0 + det.abs()), || {
            format!("Sachs det {via_sachs} vs LU det {det}")
        });
        let Some(poly) = c.ok(SACHS, Some(a), char_poly(&b)) else { continue };
        for k in 0..=n {
            let (x, y) = (table.coefficient(k, a), poly.coeff(k));
            c.check(SACHS, Some(a), (x - y).abs() <= 1e-7 * (1.0 + y.abs()), || format!("a_{k}: Sachs {x} vs {y}"));
        }
    }
    if let Some(h) = c.ok(SACHS, None, det_adjacency_harary(g)) {
        let det = determinant_with(&adjacency_matrix(g), tol);
        c.check(SACHS, Some(AlphaValue::ONE), (h as f64 - det).abs() <= 1e-8 * (1.0 + det.abs()), || {
            format!("Harary det {h} vs LU det {det}")
        });
    }
}

/// Complete and complete bipartite graphs against their closed-form spectra.
fn closed_forms(c: &mut Checker, a: AlphaValue, s: &Spectrum) {
    let g = c.g;
    let n = g.order();
    let expected = if n >= 2 && g.size() == n * (n - 1) / 2 {
        spectrum_complete(n, a)
    } else if let (true, Ok((p, q))) = (g.size() > 0 && g.is_connected(), bipartite_parts(g)) {
        if g.size() != p * q {
            return;
        }
        spectrum_complete_bipartite(p, q, a)
    } else {
        return;
    };
    let Some(expected) = c.ok(CLOSED, Some(a), expected) else { return };
    let diff = s.max_abs_diff(&expected);
    c.check(CLOSED, Some(a), diff <= 1e-9 * (1.0 + n as f64), || format!("closed form differs by {diff:.3e}"));
}

/// For members of the Λ class the chromatic bound value is an eigenvalue of
/// multiplicity at least `χ − 1` at every `α ≠ 1/2`.
fn lambda_class(c: &mut Checker, grid: &[AlphaValue], spectra: &[Option<Spectrum>]) {
    let g = c.g;
    if g.order() > MAX_CHROMATIC_ORDER || g.size() == 0 {
        return;
    }
    let Some(member) = c.ok(LAMBDA_CLASS, None, is_in_lambda_class(g)) else { return };
    if !member {
        return;
    }
    let Some(chi) = c.ok(LAMBDA_CLASS, None, chromatic_number(g)) else { return };
    for (&a, s) in grid.iter().zip(spectra) {
        let Some(s) = s else { continue };
        if a.is_half() {
            continue;
        }
        let Some(value) = c.ok(LAMBDA_CLASS, Some(a), upper_lambda_n_chromatic(g, a, chi.chi)) else { continue };
        let mult = s.multiplicity(value, 1e-7);
        c.check(LAMBDA_CLASS, Some(a), mult >= chi.chi - 1, || {
            format!("eigenvalue {value} has multiplicity {mult} < χ − 1 = {}", chi.chi - 1)
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(max_n: usize, random: usize, inject_fault: bool) -> VerifyConfig {
        VerifyConfig {
            max_n,
            random,
            random_max_n: 8,
            seed: 7,
            grid: (0..=20).map(|i| AlphaValue::ratio(i, 20).unwrap()).collect(),
            inject_fault,
            tol: Tolerances::default(),
        }
    }

    #[test]
    fn small_corpus_passes() {
        let (out, passed) = run(&cfg(5, 20, false));
        assert!(passed && out.ends_with("failures=0\n"), "{out}");
        assert!(!out.contains("checks=0 "), "{out}");
    }

    #[test]
    fn injected_fault_is_caught() {
        let (out, passed) = run(&cfg(4, 0, true));
        assert!(!passed);
        assert!(out.contains("FAIL lambda1_bounds graph6="), "{out}");
    }

    #[test]
    fn empty_corpus_passes_trivially() {
        let (out, passed) = run(&cfg(0, 0, false));
        assert!(passed);
        assert!(out.ends_with("total: checks=0 failures=0\n"));
    }

    #[test]
    fn corpus_is_deterministic() {
        let c = cfg(4, 30, false);
        let (a, _) = corpus(&c);
        let (b, _) = corpus(&c);
        assert_eq!(a, b);
        assert_eq!(a.len(), 1 + 1 + 2 + 6 + 30);
    }
}
