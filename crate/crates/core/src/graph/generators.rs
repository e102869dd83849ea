use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with canonical vertex labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    /// `K_{a,b}`: vertices `0..a` form the first part.
    CompleteBipartite(usize, usize),
    /// Parts are contiguous blocks in the given order.
    CompleteMultipartite(Vec<usize>),
    /// Cycle `0-1-...-(n-1)-0`.
    Cycle(usize),
    /// `K_{1,k}` with the hub at vertex 0.
    Star(usize),
    Path(usize),
    Petersen,
}

pub(super) fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Complete(n) => {
            positive(&[*n], "complete")?;
            multipartite(&vec![1; *n])
        }
        Family::CompleteBipartite(a, b) => {
            positive(&[*a, *b], "complete bipartite")?;
            multipartite(&[*a, *b])
        }
        Family::CompleteMultipartite(parts) => {
            if parts.is_empty() {
                return Err(Error::InvalidFamily("multipartite graph needs at least one part".into()));
            }
            positive(parts, "complete multipartite")?;
            multipartite(parts)
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
            }
            let pairs: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(*n, &pairs)
        }
        Family::Star(k) => {
            positive(&[*k], "star")?;
            multipartite(&[1, *k])
        }
        Family::Path(n) => {
            positive(&[*n], "path")?;
            let pairs: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(*n, &pairs)
        }
        Family::Petersen => {
            let mut pairs = Vec::with_capacity(15);
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((i, i + 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edge_list(10, &pairs)
        }
    }
}

fn positive(sizes: &[usize], what: &str) -> Result<()> {
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::InvalidFamily(format!("{what} sizes must be >= 1, got {sizes:?}")));
    }
    Ok(())
}

fn multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        label.extend(std::iter::repeat(p).take(size));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if label[i] != label[j] {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &pairs)
}
