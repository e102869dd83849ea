//! Plain-text edge lists: a header line `n m`, then one `i j` pair per line.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing `n m` header".into()))?;
    let [n, m] = numbers(header, 1)?;

    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [i, j] = numbers(line, lineno + 1)?;
        pairs.push((i, j));
    }
    if pairs.len() != m {
        return Err(Error::EdgeList(format!(
            "header announces {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::from_edge_list(n, &pairs)
}

fn numbers(line: &str, lineno: usize) -> Result<[usize; 2]> {
    let fields: Vec<_> = line.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("line {lineno}: `{s}` is not a nonnegative integer")))
    };
    match fields.as_slice() {
        [a, b] => Ok([parse(a)?, parse(b)?]),
        _ => Err(Error::EdgeList(format!("line {lineno}: expected two integers, got `{line}`"))),
    }
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn parses_with_comments() {
        let text = "# path on three vertices\n3 2\n0 1\n\n# middle\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn round_trip() {
        let g = Graph::generate(&Family::Petersen).unwrap();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList(_))));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList(_))));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList(_))));
        assert_eq!(parse_edge_list("3 1\n2 2\n"), Err(Error::Loop(2)));
        assert_eq!(
            parse_edge_list("3 1\n0 5\n"),
            Err(Error::VertexOutOfRange { index: 5, n: 3 })
        );
    }
}
