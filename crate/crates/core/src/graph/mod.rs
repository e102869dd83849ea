//! Simple undirected graphs and the structural queries the spectral code needs.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, the edge list is
//! kept sorted lexicographically as `(i, j)` with `i < j`, and that order fixes
//! both the vertex order of [`Graph::line_graph`] and the column order of
//! [`Graph::incidence_matrix`].

mod corpus;
mod edgelist;
mod generators;
mod graph6;

pub use corpus::{connected_graphs, random_connected_graph, random_graph};
pub use edgelist::{format_edge_list, parse_edge_list};
pub use generators::Family;
pub use graph6::{encode_graph6, parse_graph6};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Degree sequence together with its extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse to one edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamily("a graph needs at least one vertex".into()));
        }
        let mut adj = vec![false; n * n];
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::VertexOutOfRange { index, n });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// Builds a graph from a symmetric boolean matrix stored row-major. The
    /// caller guarantees symmetry and an empty diagonal.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        let mut neighbors = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for i in 0..n {
            debug_assert!(!adj[i * n + i]);
            for j in 0..n {
                if adj[i * n + j] {
                    debug_assert!(adj[j * n + i]);
                    neighbors[i].push(j);
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Self {
            n,
            adj,
            neighbors,
            edges,
        }
    }

    pub fn generate(family: &Family) -> Result<Self> {
        generators::generate(family)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Edges as `(i, j)` pairs with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            min_degree,
            max_degree,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.neighbors.iter().all(|nb| nb.len() == d).then_some(d)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.neighbors[v].is_empty())
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.component_of(0).iter().all(|&seen| seen)
    }

    fn component_of(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.neighbors[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Proper 2-colouring as a side flag per vertex (`false` for the side
    /// containing the lowest vertex of each component), or `None` when the
    /// graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &u in &self.neighbors[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Neighbourhood of every vertex as a bit mask. Only valid for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bit-mask view needs n <= 64");
        self.neighbors
            .iter()
            .map(|nb| nb.iter().fold(0u64, |mask, &u| mask | (1 << u)))
            .collect()
    }

    /// The line graph: vertex `k` is edge `k` of [`Graph::edges`]; two are
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let m = self.size();
        if m == 0 {
            return Err(Error::NoEdges);
        }
        let mut adj = vec![false; m * m];
        for (a, &(i, j)) in self.edges.iter().enumerate() {
            for (b, &(k, l)) in self.edges.iter().enumerate().skip(a + 1) {
                if i == k || i == l || j == k || j == l {
                    adj[a * m + b] = true;
                    adj[b * m + a] = true;
                }
            }
        }
        Ok(Graph::from_adjacency(m, adj))
    }

    /// Vertex-edge incidence matrix (`n × m`), columns in edge-list order.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.size());
        for (col, &(i, j)) in self.edges.iter().enumerate() {
            m.set(i, col, 1);
            m.set(j, col, 1);
        }
        m
    }

    /// Adjacency matrix with 0/1 integer entries.
    pub fn adjacency_int(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for &(i, j) in &self.edges {
            a.set(i, j, 1);
            a.set(j, i, 1);
        }
        a
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let pairs: Vec<_> = self.edges.iter().map(|&(i, j)| (perm[i], perm[j])).collect();
        Graph::from_edge_list(self.n, &pairs).expect("relabelling preserves validity")
    }
}
