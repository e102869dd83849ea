//! The query commands. Each returns the exact text to print.

use rayon::prelude::*;
use serde::Serialize;

use balpha_core::balpha::{beta_o_regular, beta_o_with, spectrum_with, AlphaValue};
use balpha_core::bounds::{
    beta_derived_bounds, bipartite_lambda_n_equality_case_with, chromatic_number, independence_number,
    lower_lambda1_alpha_delta, lower_lambda1_yz, specialized_lower_bounds, upper_lambda1_bipartite,
    upper_lambda1_piecewise, upper_lambda_n_chromatic,
};
use balpha_core::linalg::{char_poly, determinant_with};
use balpha_core::sachs::{char_poly_sachs, det_adjacency_harary, det_b_alpha_sachs, MAX_SACHS_ORDER};
use balpha_core::{Error as CoreError, Graph, Tolerances};

use crate::error::{CliError, CliResult};
use crate::number::{fixed3, sig12};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

pub fn parse_alpha(text: &str) -> CliResult<AlphaValue> {
    text.parse()
        .map_err(|_| CliError::Alpha(format!("{text:?} is not a number or fraction in [0, 1]")))
}

/// Comma list (`0,0.1,2/3`) or inclusive range `start:step:end`, sorted and deduplicated.
pub fn parse_grid(text: &str) -> CliResult<Vec<AlphaValue>> {
    let mut values = if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        let [start, step, end] = parts.as_slice() else {
            return Err(CliError::Alpha(format!("range {text:?} must be start:step:end")));
        };
        let (start, step, end) = (parse_alpha(start)?, parse_alpha(step)?, parse_alpha(end)?);
        if step.get() <= 0.0 {
            return Err(CliError::Alpha(format!("range step must be positive in {text:?}")));
        }
        range(start, step, end)?
    } else {
        text.split(',').map(parse_alpha).collect::<CliResult<Vec<_>>>()?
    };
    values.sort_by(|a, b| a.get().total_cmp(&b.get()));
    values.dedup_by(|a, b| a.get() == b.get());
    Ok(values)
}

fn range(start: AlphaValue, step: AlphaValue, end: AlphaValue) -> CliResult<Vec<AlphaValue>> {
    let mut out = Vec::new();
    if let (Some(s), Some(d), Some(e)) = (start.exact(), step.exact(), end.exact()) {
        let mut x = s;
        while x <= e {
            out.push(AlphaValue::ratio(*x.numer(), *x.denom()).map_err(|e| CliError::Alpha(e.to_string()))?);
            x += d;
        }
    } else {
        let count = ((end.get() - start.get()) / step.get() + 1e-9).floor() as usize;
        for i in 0..=count {
            let x = (start.get() + i as f64 * step.get()).min(1.0);
            out.push(AlphaValue::new(x).map_err(|e| CliError::Alpha(e.to_string()))?);
        }
    }
    Ok(out)
}

/// Default sweep grid: the reference α values for the `K_{1,24}` comparison of λ₁ and Y/Z.
pub fn table_grid() -> Vec<AlphaValue> {
    ["0", "0.1", "0.2", "0.3", "0.4", "0.6", "0.7", "0.8", "0.9", "1"]
        .iter()
        .map(|s| s.parse().expect("valid grid literal"))
        .collect()
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    schema: u32,
    graph_id: &'a str,
    alpha: f64,
    alpha_input: String,
    spectrum: &'a [f64],
}

pub fn spectrum(graph_id: &str, g: &Graph, alpha: AlphaValue, format: Format, tol: &Tolerances) -> CliResult<String> {
    let s = spectrum_with(g, alpha, tol)?;
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("k,lambda\n");
            for (k, x) in s.values().iter().enumerate() {
                out += &format!("{},{}\n", k + 1, sig12(*x));
            }
            out
        }
        Format::Json => {
            let json = SpectrumJson {
                schema: SCHEMA,
                graph_id,
                alpha: alpha.get(),
                alpha_input: alpha.to_string(),
                spectrum: s.values(),
            };
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
        Format::Table => {
            let mut out = format!("spectrum of B_alpha({graph_id}), alpha = {alpha}\n");
            for (k, x) in s.values().iter().enumerate() {
                out += &format!("{:>4}  {:>12}\n", k + 1, fixed3(*x));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct BetaJson<'a> {
    schema: u32,
    graph_id: &'a str,
    beta0: f64,
    bracket_width: f64,
    regular_formula: Option<f64>,
    psd_interval: [f64; 2],
    indefinite_interval: [f64; 2],
}

/// Bisection settings for the printed threshold: a bracket narrow enough for
/// ten decimals and a sign slack at the level of eigensolver round-off.
pub fn display_tolerances(tol: &Tolerances, overridden: &[&str]) -> Tolerances {
    let mut t = *tol;
    if !overridden.contains(&"beta_bracket") {
        t.beta_bracket = 1e-13;
    }
    if !overridden.contains(&"beta_sign") {
        t.beta_sign = 1e-15;
    }
    t
}

pub fn beta0(graph_id: &str, g: &Graph, format: TextFormat, tol: &Tolerances) -> CliResult<String> {
    let b = beta_o_with(g, tol)?;
    let regular = match beta_o_regular(g) {
        Ok(v) => Some(v),
        Err(CoreError::NotRegular) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(match format {
        TextFormat::Text => {
            let mut out = format!("graph: {graph_id}\nn: {}\nm: {}\n", g.order(), g.size());
            out += &format!("beta0: {:.10}\n", b.value);
            out += &format!("bracket_width: {:.1e}\n", b.bracket_width);
            match regular {
                Some(v) => out += &format!("regular_formula: {v:.10}\n"),
                None => out += "regular_formula: not regular\n",
            }
            out += &format!("positive_semidefinite: [0, {:.10}]\n", b.value);
            out += &format!("indefinite: ({:.10}, 1]\n", b.value);
            out
        }
        TextFormat::Json => {
            let json = BetaJson {
                schema: SCHEMA,
                graph_id,
                beta0: b.value,
                bracket_width: b.bracket_width,
                regular_formula: regular,
                psd_interval: [0.0, b.value],
                indefinite_interval: [b.value, 1.0],
            };
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub alpha_input: String,
    pub lambda1: f64,
    /// `None` at α = 1/2, where the bound is undefined.
    pub yz_bound: Option<f64>,
}

pub fn sweep_rows(g: &Graph, grid: &[AlphaValue], tol: &Tolerances) -> CliResult<Vec<SweepRow>> {
    if g.size() == 0 {
        return Err(CoreError::NoEdges.into());
    }
    grid.par_iter()
        .map(|&a| {
            let lambda1 = spectrum_with(g, a, tol)?.largest();
            let yz_bound = if a.is_half() { None } else { Some(lower_lambda1_yz(g, a)?) };
            Ok(SweepRow {
                alpha: a.get(),
                alpha_input: a.to_string(),
                lambda1,
                yz_bound,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct SweepJson<'a> {
    schema: u32,
    graph_id: &'a str,
    rows: &'a [SweepRow],
}

pub fn sweep(graph_id: &str, g: &Graph, grid: &[AlphaValue], format: Format, tol: &Tolerances) -> CliResult<String> {
    let rows = sweep_rows(g, grid, tol)?;
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("alpha,lambda1,yz_bound\n");
            for r in &rows {
                let yz = r.yz_bound.map_or_else(|| "undefined".to_string(), sig12);
                out += &format!("{},{},{}\n", r.alpha_input, sig12(r.lambda1), yz);
            }
            out
        }
        Format::Json => {
            let json = SweepJson {
                schema: SCHEMA,
                graph_id,
                rows: &rows,
            };
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
        Format::Table => {
            let mut out = format!("{:>8} | {:>10} | {:>10}\n", "alpha", "lambda1", "Y/Z");
            out += &format!("{}\n", "-".repeat(34));
            for r in &rows {
                let yz = r.yz_bound.map_or_else(|| "undefined".to_string(), fixed3);
                out += &format!("{:>8} | {:>10} | {:>10}\n", r.alpha_input, fixed3(r.lambda1), yz);
            }
            out
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    /// `lower` or `upper`.
    pub direction: &'static str,
    /// The quantity the bound constrains.
    pub target: &'static str,
    pub value: f64,
    pub observed: f64,
    pub holds: bool,
    pub gap: f64,
    /// False when the graph falls outside the hypotheses under which the bound is proved.
    pub hypothesis_met: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NotApplicable {
    pub name: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiInfo {
    pub value: usize,
    /// `exact` or `supplied`.
    pub source: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub alpha: f64,
    pub alpha_input: String,
    pub lambda1: f64,
    pub lambda_n: f64,
    pub chi: Option<ChiInfo>,
    pub beta0: Option<f64>,
    pub bipartite_equality: Option<&'static str>,
    pub bounds: Vec<BoundEntry>,
    pub not_applicable: Vec<NotApplicable>,
}

impl BoundReport {
    fn push(&mut self, name: &'static str, direction: &'static str, target: &'static str, value: f64, observed: f64, tol: f64) {
        self.push_with(name, direction, target, value, observed, tol, true);
    }

    #[allow(clippy::too_many_arguments)]
    fn push_with(
        &mut self,
        name: &'static str,
        direction: &'static str,
        target: &'static str,
        value: f64,
        observed: f64,
        tol: f64,
        hypothesis_met: bool,
    ) {
        let holds = match direction {
            "lower" => observed >= value - tol,
            _ => observed <= value + tol,
        };
        self.bounds.push(BoundEntry {
            name,
            direction,
            target,
            value,
            observed,
            holds,
            gap: (value - observed).abs(),
            hypothesis_met,
        });
    }

    fn skip(&mut self, name: &'static str, reason: impl Into<String>) {
        self.not_applicable.push(NotApplicable {
            name,
            reason: reason.into(),
        });
    }
}

pub fn bound_report(graph_id: &str, g: &Graph, alpha: AlphaValue, chi: Option<usize>, tol: &Tolerances) -> CliResult<BoundReport> {
    let s = spectrum_with(g, alpha, tol)?;
    let eps = tol.bound;
    let chi = match chi {
        Some(c) => Some(ChiInfo {
            value: c,
            source: "supplied",
        }),
        None => match chromatic_number(g) {
            Ok(c) => Some(ChiInfo {
                value: c.chi,
                source: "exact",
            }),
            Err(e @ CoreError::BudgetExceeded { .. }) => return Err(CliError::SolverBudget(e)),
            Err(e) => return Err(e.into()),
        },
    };
    let mut r = BoundReport {
        schema: SCHEMA,
        graph_id: graph_id.to_string(),
        n: g.order(),
        m: g.size(),
        alpha: alpha.get(),
        alpha_input: alpha.to_string(),
        lambda1: s.largest(),
        lambda_n: s.smallest(),
        chi,
        beta0: None,
        bipartite_equality: None,
        bounds: Vec::new(),
        not_applicable: Vec::new(),
    };
    let (l1, ln) = (r.lambda1, r.lambda_n);
    let connected = g.is_connected();
    let has_edges = g.size() > 0;

    if connected {
        r.push("lambda1_lower_alpha_min_degree", "lower", "lambda1", lower_lambda1_alpha_delta(g, alpha)?, l1, eps);
        r.push("lambda1_upper_piecewise", "upper", "lambda1", upper_lambda1_piecewise(g, alpha)?, l1, eps);
    } else {
        r.skip("lambda1_lower_alpha_min_degree", "not connected");
        r.skip("lambda1_upper_piecewise", "not connected");
    }
    if !has_edges {
        r.skip("lambda1_lower_yz", "no edges");
    } else if alpha.is_half() {
        r.skip("lambda1_lower_yz", "undefined at alpha = 1/2");
    } else {
        r.push("lambda1_lower_yz", "lower", "lambda1", lower_lambda1_yz(g, alpha)?, l1, eps);
    }
    match (connected, g.is_bipartite()) {
        (true, true) => r.push("lambda1_upper_bipartite", "upper", "lambda1", upper_lambda1_bipartite(g, alpha)?, l1, eps),
        (false, _) => r.skip("lambda1_upper_bipartite", "not connected"),
        (true, false) => r.skip("lambda1_upper_bipartite", "not bipartite"),
    }

    match (&r.chi, has_edges) {
        (_, false) => r.skip("lambda_n_upper_chromatic", "no edges"),
        (Some(c), true) if c.value >= 2 => {
            let v = upper_lambda_n_chromatic(g, alpha, c.value)?;
            r.push("lambda_n_upper_chromatic", "upper", "lambda_n", v, ln, eps);
        }
        _ => r.skip("lambda_n_upper_chromatic", "fewer than two colours"),
    }
    if has_edges && g.is_bipartite() {
        let v = upper_lambda_n_chromatic(g, alpha, 2)?;
        r.push("lambda_n_upper_bipartite", "upper", "lambda_n", v, ln, eps);
        r.bipartite_equality = Some(bipartite_lambda_n_equality_case_with(g, alpha, tol)?.as_str());
    } else if has_edges {
        r.skip("lambda_n_upper_bipartite", "not bipartite");
    } else {
        r.skip("lambda_n_upper_bipartite", "no edges");
    }

    if has_edges {
        let c = specialized_lower_bounds(g)?;
        let rho1 = spectrum_with(g, AlphaValue::ONE, tol)?.largest();
        let mu1 = spectrum_with(g, AlphaValue::ZERO, tol)?.largest();
        let q1 = 3.0 * spectrum_with(g, AlphaValue::two_thirds(), tol)?.largest();
        r.push("adjacency_lambda1_lower", "lower", "adjacency_lambda1", c.adjacency, rho1, eps);
        r.push("laplacian_lambda1_lower", "lower", "laplacian_lambda1", c.laplacian, mu1, eps);
        r.push("signless_laplacian_lambda1_lower", "lower", "signless_laplacian_lambda1", c.signless, q1, eps);
    } else {
        for name in ["adjacency_lambda1_lower", "laplacian_lambda1_lower", "signless_laplacian_lambda1_lower"] {
            r.skip(name, "no edges");
        }
    }

    match beta_derived_bounds(g) {
        Ok(d) => {
            r.beta0 = Some(d.beta_o);
            match &r.chi {
                Some(c) => r.push("chi_lower_beta0", "lower", "chromatic_number", d.chi_lower, c.value as f64, eps),
                None => r.skip("chi_lower_beta0", "chromatic number unavailable"),
            }
            match independence_number(g) {
                Ok(ind) => r.push_with(
                    "independence_upper_beta0",
                    "upper",
                    "independence_number",
                    d.independence_upper,
                    ind.alpha_g as f64,
                    eps,
                    d.independence_hypothesis,
                ),
                Err(e) => r.skip("independence_upper_beta0", e.to_string()),
            }
        }
        Err(e @ (CoreError::IsolatedVertex(_) | CoreError::NoEdges)) => {
            r.skip("chi_lower_beta0", e.to_string());
            r.skip("independence_upper_beta0", e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

pub fn bounds(graph_id: &str, g: &Graph, alpha: AlphaValue, chi: Option<usize>, tol: &Tolerances) -> CliResult<String> {
    let report = bound_report(graph_id, g, alpha, chi, tol)?;
    Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n")
}

#[derive(Serialize)]
struct DetPolyJson<'a> {
    schema: u32,
    graph_id: &'a str,
    alpha: f64,
    alpha_input: String,
    det_sachs: f64,
    det_linalg: f64,
    det_difference: f64,
    harary: Option<i128>,
    coefficients_sachs: Vec<f64>,
    coefficients_linalg: Vec<f64>,
}

pub fn detpoly(graph_id: &str, g: &Graph, alpha: AlphaValue, format: TextFormat, tol: &Tolerances) -> CliResult<String> {
    let budget = |e: CoreError| match e {
        CoreError::BudgetExceeded { .. } => CliError::SachsBudget(e),
        other => other.into(),
    };
    if g.order() > MAX_SACHS_ORDER {
        return Err(budget(CoreError::BudgetExceeded {
            what: "modified elementary subgraph enumeration",
            limit: MAX_SACHS_ORDER,
            n: g.order(),
        }));
    }
    let b = balpha_core::balpha::b_alpha(g, alpha);
    let det_sachs = det_b_alpha_sachs(g, alpha).map_err(budget)?;
    let det_linalg = determinant_with(&b, tol);
    let sachs = char_poly_sachs(g, alpha).map_err(budget)?;
    let linalg = char_poly(&b)?;
    let harary = if alpha.get() == 1.0 { Some(det_adjacency_harary(g).map_err(budget)?) } else { None };
    Ok(match format {
        TextFormat::Text => {
            let mut out = format!("graph: {graph_id}\nalpha: {alpha}\n");
            out += &format!("det_sachs: {}\n", sig12(det_sachs));
            out += &format!("det_linalg: {}\n", sig12(det_linalg));
            out += &format!("det_difference: {:.3e}\n", det_sachs - det_linalg);
            if let Some(h) = harary {
                out += &format!("harary: {h}\n");
            }
            out += "k,a_k_sachs,a_k_linalg,difference\n";
            for k in 0..=g.order() {
                let (x, y) = (sachs.coeff(k), linalg.coeff(k));
                out += &format!("{k},{},{},{:.3e}\n", sig12(x), sig12(y), x - y);
            }
            out
        }
        TextFormat::Json => {
            let json = DetPolyJson {
                schema: SCHEMA,
                graph_id,
                alpha: alpha.get(),
                alpha_input: alpha.to_string(),
                det_sachs,
                det_linalg,
                det_difference: det_sachs - det_linalg,
                harary,
                coefficients_sachs: sachs.coeffs().to_vec(),
                coefficients_linalg: linalg.coeffs().to_vec(),
            };
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
    })
}
