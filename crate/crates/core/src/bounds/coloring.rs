//! Exact chromatic and independence numbers for small graphs, with certificates.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CHROMATIC_ORDER: usize = 16;
pub const MAX_INDEPENDENCE_ORDER: usize = 20;

/// A proper colouring with the minimum number of colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub chi: usize,
    /// Colour classes, each an independent set, together covering every vertex.
    pub classes: Vec<Vec<usize>>,
}

/// A maximum independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceCertificate {
    pub alpha_g: usize,
    pub witness: Vec<usize>,
}

fn masks(g: &Graph) -> Vec<u32> {
    g.neighbor_masks().into_iter().map(|m| m as u32).collect()
}

fn budget(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::BudgetExceeded { what, limit, n: g.order() });
    }
    Ok(())
}

/// Largest clique size, by branching over candidate sets.
fn clique_number(adj: &[u32], n: usize) -> usize {
    fn grow(adj: &[u32], size: usize, candidates: u32, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        grow(adj, size + 1, candidates & adj[v], best);
        grow(adj, size, candidates & !(1 << v), best);
    }
    let mut best = 0;
    grow(adj, 0, ((1u64 << n) - 1) as u32, &mut best);
    best
}

/// Tries to colour the graph with `k` colours, filling `colour` on success.
/// Vertices are picked by saturation degree (DSATUR order) and a new colour is
/// only opened once, which removes colour-permutation symmetry.
fn colourable(adj: &[u32], k: usize, colour: &mut [Option<usize>], used: usize) -> bool {
    let n = adj.len();
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if colour[v].is_some() {
            continue;
        }
        let mut seen = 0u32;
        let mut rest = adj[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if let Some(c) = colour[u] {
                seen |= 1 << c;
            }
        }
        let key = (seen.count_ones() as usize, adj[v].count_ones() as usize);
        if pick.is_none() || key > best {
            pick = Some((v, seen));
            best = key;
        }
    }
    let Some((v, seen)) = pick else {
        return true;
    };
    for c in 0..k.min(used + 1) {
        if seen & (1 << c) != 0 {
            continue;
        }
        colour[v] = Some(c);
        if colourable(adj, k, colour, used.max(c + 1)) {
            return true;
        }
    }
    colour[v] = None;
    false
}

/// Minimum proper colouring. The search starts at the clique number and an
/// unsuccessful search at `χ − 1` colours is the optimality certificate.
pub fn chromatic_number(g: &Graph) -> Result<ColoringCertificate> {
    budget(g, "chromatic number", MAX_CHROMATIC_ORDER)?;
    let n = g.order();
    let adj = masks(g);
    let start = clique_number(&adj, n).max(1);
    for k in start..=n {
        let mut colour = vec![None; n];
        if colourable(&adj, k, &mut colour, 0) {
            let mut classes = vec![Vec::new(); k];
            for (v, c) in colour.iter().enumerate() {
                classes[c.expect("every vertex coloured")].push(v);
            }
            return Ok(ColoringCertificate { chi: k, classes });
        }
    }
    unreachable!("n colours always suffice")
}

/// Maximum independent set by branch and bound on the lowest candidate vertex.
pub fn independence_number(g: &Graph) -> Result<IndependenceCertificate> {
    budget(g, "independence number", MAX_INDEPENDENCE_ORDER)?;
    let n = g.order();
    let adj = masks(g);

    fn search(adj: &[u32], chosen: u32, candidates: u32, best: &mut u32) {
        if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        if candidates == 0 {
            *best = chosen;
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u32 << v;
        search(adj, chosen | bit, candidates & !bit & !adj[v], best);
        // a vertex with no candidate neighbours is always worth taking
        if candidates & adj[v] != 0 {
            search(adj, chosen, candidates & !bit, best);
        }
    }

    let mut best = 0u32;
    search(&adj, 0, ((1u64 << n) - 1) as u32, &mut best);
    let witness: Vec<usize> = (0..n).filter(|&v| best & (1 << v) != 0).collect();
    Ok(IndependenceCertificate {
        alpha_g: witness.len(),
        witness,
    })
}

/// Calls `visit` with every proper colouring using exactly `k` colours, up to
/// renaming colours, until `visit` returns `true`. Returns whether it did.
pub(crate) fn any_colouring(g: &Graph, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn go(adj: &[u32], k: usize, v: usize, colour: &mut Vec<usize>, used: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = adj.len();
        if v == n {
            return used == k && visit(colour);
        }
        // the remaining vertices must be able to open the missing colours
        if k - used > n - v {
            return false;
        }
        for c in 0..k.min(used + 1) {
            let clash = (0..v).any(|u| adj[v] & (1 << u) != 0 && colour[u] == c);
            if clash {
                continue;
            }
            colour.push(c);
            if go(adj, k, v + 1, colour, used.max(c + 1), visit) {
                return true;
            }
            colour.pop();
        }
        false
    }
    let adj = masks(g);
    go(&adj, k, 0, &mut Vec::with_capacity(g.order()), 0, &mut visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_graphs, Family};

    fn family(f: Family) -> Graph {
        Graph::generate(&f).unwrap()
    }

    fn check_colouring(g: &Graph, cert: &ColoringCertificate) {
        assert_eq!(cert.classes.len(), cert.chi);
        let mut covered: Vec<usize> = cert.classes.iter().flatten().copied().collect();
        covered.sort();
        assert_eq!(covered, (0..g.order()).collect::<Vec<_>>());
        for class in &cert.classes {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    assert!(!g.has_edge(u, v));
                }
            }
        }
    }

    /// Smallest k admitting a proper colouring, by trying all k^n assignments.
    fn brute_chromatic(g: &Graph) -> usize {
        let n = g.order();
        (1..=n)
            .find(|&k| {
                let total = k.pow(n as u32);
                (0..total).any(|mut code| {
                    let mut c = vec![0; n];
                    for x in c.iter_mut() {
                        *x = code % k;
                        code /= k;
                    }
                    g.edges().iter().all(|&(u, v)| c[u] != c[v])
                })
            })
            .unwrap()
    }

    fn brute_independence(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&s| g.edges().iter().all(|&(u, v)| s & (1 << u) == 0 || s & (1 << v) == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&family(Family::Complete(4))).unwrap().chi, 4);
        assert_eq!(chromatic_number(&family(Family::Cycle(5))).unwrap().chi, 3);
        let petersen = family(Family::Petersen);
        let cert = chromatic_number(&petersen).unwrap();
        assert_eq!(cert.chi, 3);
        check_colouring(&petersen, &cert);
        assert!(!petersen.is_bipartite());
        assert_eq!(chromatic_number(&Graph::from_edge_list(3, &[]).unwrap()).unwrap().chi, 1);
    }

    #[test]
    fn independence_examples() {
        for n in 2..=6 {
            assert_eq!(independence_number(&family(Family::Complete(n))).unwrap().alpha_g, 1);
        }
        assert_eq!(independence_number(&family(Family::Cycle(6))).unwrap().alpha_g, 3);
        let petersen = family(Family::Petersen);
        let cert = independence_number(&petersen).unwrap();
        assert_eq!(cert.alpha_g, 4);
        for (i, &u) in cert.witness.iter().enumerate() {
            for &v in &cert.witness[i + 1..] {
                assert!(!petersen.has_edge(u, v));
            }
        }
    }

    #[test]
    fn solvers_match_brute_force() {
        for n in 1..=6 {
            for g in connected_graphs(n) {
                let cert = chromatic_number(&g).unwrap();
                check_colouring(&g, &cert);
                assert_eq!(cert.chi, brute_chromatic(&g));
                assert_eq!(independence_number(&g).unwrap().alpha_g, brute_independence(&g));
            }
        }
    }

    #[test]
    fn budgets() {
        let big = family(Family::Cycle(17));
        assert!(matches!(chromatic_number(&big), Err(Error::BudgetExceeded { .. })));
        assert!(independence_number(&big).is_ok());
        assert!(independence_number(&family(Family::Cycle(21))).is_err());
    }

    #[test]
    fn colouring_enumeration() {
        // C4 has exactly one 2-colouring up to swapping colours
        let mut count = 0;
        any_colouring(&family(Family::Cycle(4)), 2, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
        assert!(!any_colouring(&family(Family::Cycle(5)), 2, |_| true));
    }
}
