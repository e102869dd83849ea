//! Graph sources: generator names, files, or inline graph6.
//!
//! Generator names: `K4` (complete), `K2,3` (complete bipartite), `C6`
//! (cycle), `P5` (path), `S24` (star `K_{1,24}`), `T3,3,3` (complete
//! multipartite) and `petersen`. Anything else is read as a file path when
//! such a file exists and as a graph6 string otherwise. Files hold either an
//! edge list (`n m` header) or a graph6 record on the first line.

use std::path::Path;

use balpha_core::graph::{parse_edge_list, parse_graph6, Family};
use balpha_core::Graph;

use crate::error::{CliError, CliResult};

pub fn load_graph(source: &str) -> CliResult<Graph> {
    let source = source.trim();
    if let Some(family) = parse_family(source)? {
        return Ok(Graph::generate(&family)?);
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Source(format!("{source}: {e}")))?;
        return parse_file_contents(&text);
    }
    Ok(parse_graph6(source)?)
}

fn parse_file_contents(text: &str) -> CliResult<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| CliError::Source("empty graph file".into()))?;
    if first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

fn numbers(spec: &str, source: &str) -> CliResult<Vec<usize>> {
    spec.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Source(format!("bad size {t:?} in generator {source:?}")))
        })
        .collect()
}

/// `Ok(None)` when `source` is not a generator name.
pub fn parse_family(source: &str) -> CliResult<Option<Family>> {
    if source.eq_ignore_ascii_case("petersen") {
        return Ok(Some(Family::Petersen));
    }
    let mut chars = source.chars();
    let Some(head) = chars.next() else {
        return Err(CliError::Source("empty graph source".into()));
    };
    let rest = chars.as_str();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit() || c == ',') || !rest.starts_with(|c: char| c.is_ascii_digit()) {
        return Ok(None);
    }
    let sizes = numbers(rest, source)?;
    let single = |what: &str| -> CliResult<usize> {
        match sizes.as_slice() {
            [n] => Ok(*n),
            _ => Err(CliError::Source(format!("{what} generator takes one size, got {source:?}"))),
        }
    };
    let family = match head {
        'K' => match sizes.as_slice() {
            [n] => Family::Complete(*n),
            [a, b] => Family::CompleteBipartite(*a, *b),
            _ => return Err(CliError::Source(format!("use T for more than two parts: {source:?}"))),
        },
        'C' => Family::Cycle(single("cycle")?),
        'P' => Family::Path(single("path")?),
        'S' => Family::Star(single("star")?),
        'T' => Family::CompleteMultipartite(sizes),
        _ => return Ok(None),
    };
    Ok(Some(family))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(parse_family("K4").unwrap(), Some(Family::Complete(4)));
        assert_eq!(parse_family("K1,24").unwrap(), Some(Family::CompleteBipartite(1, 24)));
        assert_eq!(parse_family("C6").unwrap(), Some(Family::Cycle(6)));
        assert_eq!(parse_family("P3").unwrap(), Some(Family::Path(3)));
        assert_eq!(parse_family("S5").unwrap(), Some(Family::Star(5)));
        assert_eq!(parse_family("T3,3,3").unwrap(), Some(Family::CompleteMultipartite(vec![3, 3, 3])));
        assert_eq!(parse_family("Petersen").unwrap(), Some(Family::Petersen));
        assert_eq!(parse_family("Bw").unwrap(), None);
        assert!(parse_family("C6,2").is_err());
        assert!(parse_family("K1,2,3").is_err());
    }

    #[test]
    fn loads_every_kind() {
        assert_eq!(load_graph("K3").unwrap(), load_graph("Bw").unwrap());
        assert_eq!(load_graph("petersen").unwrap().size(), 15);
        assert!(matches!(load_graph("C2"), Err(CliError::Source(_))));
        assert!(matches!(load_graph("not a graph"), Err(CliError::Source(_))));

        let dir = std::env::temp_dir().join(format!("balpha-source-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let edges = dir.join("p3.txt");
        std::fs::write(&edges, "# path\n3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(load_graph(edges.to_str().unwrap()).unwrap(), load_graph("P3").unwrap());
        let g6 = dir.join("k3.g6");
        std::fs::write(&g6, "Bw\n").unwrap();
        assert_eq!(load_graph(g6.to_str().unwrap()).unwrap(), load_graph("K3").unwrap());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
