use proptest::prelude::*;

use balpha_core::balpha::{
    b_alpha, beta_o, classify_definiteness, lipschitz_constant, spectrum, AlphaValue, DefinitenessClass,
};
use balpha_core::bounds::{
    chromatic_number, lower_lambda1_alpha_delta, lower_lambda1_yz, upper_lambda1_piecewise, upper_lambda_n_chromatic,
};
use balpha_core::graph::{encode_graph6, parse_graph6, random_connected_graph, random_graph};
use balpha_core::linalg::{char_poly, determinant};
use balpha_core::sachs::SachsTable;
use balpha_core::Graph;

fn connected() -> impl Strategy<Value = Graph> {
    (2usize..=9, 0.2f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| random_connected_graph(n, p, seed))
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}

fn alpha() -> impl Strategy<Value = AlphaValue> {
    (0i64..=60).prop_map(|i| AlphaValue::ratio(i, 60).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in any_graph()) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn trace_and_frobenius(g in any_graph(), a in alpha()) {
        let s = spectrum(&g, a).unwrap();
        let b = b_alpha(&g, a);
        let scale = 1e-9 * (1.0 + g.size() as f64);
        prop_assert!((s.sum() - b.trace()).abs() <= scale);
        prop_assert!((s.sum() - 2.0 * g.size() as f64 * (1.0 - a.get())).abs() <= scale);
        let sq: f64 = s.values().iter().map(|x| x * x).sum();
        let fro = b.frobenius_norm();
        prop_assert!((sq - fro * fro).abs() <= scale * (1.0 + fro * fro));
    }

    #[test]
    fn eigenvalues_are_lipschitz(g in any_graph(), a in alpha(), b in alpha()) {
        let l = lipschitz_constant(&g).unwrap();
        let moved = spectrum(&g, a).unwrap().max_abs_diff(&spectrum(&g, b).unwrap());
        prop_assert!(moved <= l * (a.get() - b.get()).abs() + 1e-9 * (1.0 + l));
    }

    #[test]
    fn semidefinite_exactly_up_to_threshold(g in connected(), a in alpha()) {
        let beta = beta_o(&g).unwrap().value;
        prop_assert!(beta >= 2.0 / 3.0 - 1e-9);
        let class = classify_definiteness(&g, a).unwrap();
        if a.get() < beta - 1e-6 {
            prop_assert_ne!(class, DefinitenessClass::Indefinite);
        }
        if a.get() > beta + 1e-6 {
            prop_assert_eq!(class, DefinitenessClass::Indefinite);
        }
    }

    #[test]
    fn lambda1_bounds_hold(g in connected(), a in alpha()) {
        let l1 = spectrum(&g, a).unwrap().largest();
        prop_assert!(l1 >= lower_lambda1_alpha_delta(&g, a).unwrap() - 1e-7);
        prop_assert!(l1 <= upper_lambda1_piecewise(&g, a).unwrap() + 1e-7);
        if !a.is_half() {
            prop_assert!(l1 >= lower_lambda1_yz(&g, a).unwrap() - 1e-7);
        }
    }

    #[test]
    fn chromatic_bound_holds(g in connected(), a in alpha()) {
        let chi = chromatic_number(&g).unwrap().chi;
        let ln = spectrum(&g, a).unwrap().smallest();
        prop_assert!(ln <= upper_lambda_n_chromatic(&g, a, chi).unwrap() + 1e-7);
    }

    #[test]
    fn subgraph_expansion_matches_linear_algebra(g in any_graph(), a in alpha()) {
        let table = SachsTable::new(&g).unwrap();
        let b = b_alpha(&g, a);
        let poly = char_poly(&b).unwrap();
        for k in 0..=g.order() {
            let (x, y) = (table.coefficient(k, a), poly.coeff(k));
            prop_assert!((x - y).abs() <= 1e-7 * (1.0 + y.abs()), "a_{} = {} vs {}", k, x, y);
        }
        let sign = if g.order() % 2 == 0 { 1.0 } else { -1.0 };
        let det = determinant(&b);
        prop_assert!((sign * table.coefficient(g.order(), a) - det).abs() <= 1e-8 * (1.0 + det.abs()));
    }
}
