//! Test corpora: every connected graph of a given order up to isomorphism,
//! and seeded random graphs.
//!
//! Exhaustive generation grows connected graphs one vertex at a time. Every
//! connected graph has a vertex whose removal leaves it connected, so
//! attaching a new vertex to each nonempty subset of every connected graph on
//! `n - 1` vertices reaches all connected graphs on `n` vertices. Duplicates
//! are removed with a canonical code.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Largest order for which the exhaustive generator is offered.
pub const MAX_EXHAUSTIVE_ORDER: usize = 10;

/// All connected graphs on `n` vertices, one per isomorphism class, ordered by
/// canonical code. `n = 0` yields nothing.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_EXHAUSTIVE_ORDER,
        "exhaustive generation limited to n <= {MAX_EXHAUSTIVE_ORDER}"
    );
    if n == 0 {
        return Vec::new();
    }
    let mut layer: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &layer {
            let rows = decode(code, order - 1);
            for subset in 1u64..(1 << (order - 1)) {
                let mut grown = rows.clone();
                grown.push(subset);
                for (v, row) in grown.iter_mut().enumerate().take(order - 1) {
                    if subset & (1 << v) != 0 {
                        *row |= 1 << (order - 1);
                    }
                }
                next.insert(canonical_code(&grown));
            }
        }
        layer = next;
    }
    layer.into_iter().map(|code| to_graph(&decode(code, n))).collect()
}

fn to_graph(rows: &[u64]) -> Graph {
    let n = rows.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rows[i] & (1 << j) != 0 {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("rows describe a simple graph")
}

/// Upper-triangle bits, column-major like graph6.
fn encode(rows: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | ((rows[order[i]] >> order[j]) & 1);
        }
    }
    code
}

fn decode(code: u64, n: usize) -> Vec<u64> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (bits - 1 - k)) & 1 != 0 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

/// Minimum code over all labellings that list vertices by a sorted
/// isomorphism-invariant key (degree, then sorted neighbour degrees). Only
/// permutations inside equal-key cells are tried.
fn canonical_code(rows: &[u64]) -> u64 {
    let n = rows.len();
    let degree: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let key = |v: usize| {
        let mut nbr: Vec<u32> = (0..n).filter(|&u| rows[v] >> u & 1 == 1).map(|u| degree[u]).collect();
        nbr.sort_unstable();
        (degree[v], nbr)
    };
    let mut vertices: Vec<usize> = (0..n).collect();
    let keys: Vec<_> = (0..n).map(key).collect();
    vertices.sort_by(|&a, &b| keys[a].cmp(&keys[b]));

    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &vertices {
        match cells.last_mut() {
            Some(cell) if keys[cell[0]] == keys[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    search_cells(rows, &mut cells, 0, &mut order, &mut best);
    best
}

fn search_cells(rows: &[u64], cells: &mut [Vec<usize>], cell: usize, order: &mut Vec<usize>, best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).min(encode(rows, order));
        return;
    }
    let len = cells[cell].len();
    permute(rows, cells, cell, len, order, best);
}

// Heap's algorithm over one cell, recursing into the next cell per arrangement.
fn permute(rows: &[u64], cells: &mut [Vec<usize>], cell: usize, k: usize, order: &mut Vec<usize>, best: &mut u64) {
    if k <= 1 {
        let base = order.len();
        order.extend_from_slice(&cells[cell]);
        search_cells(rows, cells, cell + 1, order, best);
        order.truncate(base);
        return;
    }
    for i in 0..k {
        permute(rows, cells, cell, k - 1, order, best);
        let swap = if k % 2 == 0 { i } else { 0 };
        cells[cell].swap(swap, k - 1);
    }
}

/// Erdős–Rényi `G(n, p)` from a ChaCha stream seeded with `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("generated pairs are valid")
}

/// A random spanning tree (each vertex attaches to a uniformly chosen earlier
/// vertex) plus every other pair independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                pairs.push((i, j));
            }
        }
    }
    let g = Graph::from_edge_list(n, &pairs).expect("generated pairs are valid");
    // shuffle labels so the tree structure is not tied to vertex order
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (n, &count) in (1..=7).zip(expected.iter()) {
            let graphs = connected_graphs(n);
            assert_eq!(graphs.len(), count, "n = {n}");
            assert!(graphs.iter().all(|g| g.is_connected() && g.order() == n));
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = random_graph(8, 0.4, 7);
        let rows = g.neighbor_masks();
        let perm = [3, 7, 1, 0, 6, 2, 5, 4];
        let h = g.relabel(&perm);
        assert_eq!(canonical_code(&rows), canonical_code(&h.neighbor_masks()));
    }

    #[test]
    fn random_graphs_are_deterministic() {
        assert_eq!(random_graph(9, 0.5, 42), random_graph(9, 0.5, 42));
        let g = random_connected_graph(12, 0.1, 3);
        assert!(g.is_connected());
        assert_eq!(g, random_connected_graph(12, 0.1, 3));
    }
}
