//! Text serializations: plain edge lists, Matrix Market coordinate pattern
//! files, and Graphviz DOT.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One `u v` line per edge with `u < v`, 0-based, preceded by a `#` comment
/// carrying the node count.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "# nodes {} edges {}", g.node_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Parses the edge-list format. The node count is taken from a
/// `# nodes <n>` comment when present, otherwise from the largest label.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("nodes") {
                declared = words.next().and_then(|w| w.parse().ok());
            }
            continue;
        }
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("expected two node labels, got {line:?}"),
                })
        };
        let mut toks = line.split_whitespace();
        let u = parse(toks.next())?;
        let v = parse(toks.next())?;
        if toks.next().is_some() || u >= v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected `u v` with u < v, got {line:?}"),
            });
        }
        edges.push((u, v));
    }
    let inferred = edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(inferred).max(inferred);
    Graph::from_edges(n, edges)
}

/// Matrix Market `coordinate pattern symmetric`: 1-based, lower triangle
/// (row > column).
pub fn write_matrix_market<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "%%MatrixMarket matrix coordinate pattern symmetric")?;
    let n = g.node_count();
    writeln!(out, "{n} {n} {}", g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", v + 1, u + 1)?;
    }
    Ok(())
}

pub fn write_dot<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "graph {{")?;
    // isolated nodes would otherwise be dropped
    for u in (0..g.node_count()).filter(|&u| g.degree(u) == 0) {
        writeln!(out, "  {u};")?;
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};")?;
    }
    writeln!(out, "}}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{core_satellite, CoreSatelliteParams};

    fn butterfly() -> Graph {
        core_satellite(&CoreSatelliteParams::new(1, 2, 2).unwrap())
    }

    fn render(f: impl Fn(&mut Vec<u8>) -> io::Result<()>) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn edge_list_text() {
        let text = render(|b| write_edge_list(&butterfly(), b));
        assert_eq!(text, "# nodes 5 edges 6\n0 1\n0 2\n0 3\n0 4\n1 2\n3 4\n");
        assert_eq!(read_edge_list(text.as_bytes()).unwrap(), butterfly());
    }

    #[test]
    fn edge_list_keeps_isolated_nodes() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let text = render(|b| write_edge_list(&g, b));
        assert_eq!(read_edge_list(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(read_edge_list("0 x\n".as_bytes()).is_err());
        assert!(read_edge_list("2 1\n".as_bytes()).is_err());
        assert!(read_edge_list("0 1 2\n".as_bytes()).is_err());
        assert!(read_edge_list("0 1\n0 1\n".as_bytes()).is_err());
    }

    #[test]
    fn matrix_market_text() {
        let text = render(|b| write_matrix_market(&butterfly(), b));
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(
            lines[0],
            "%%MatrixMarket matrix coordinate pattern symmetric"
        );
        assert_eq!(lines[1], "5 5 6");
        assert_eq!(lines[2], "2 1");
        assert_eq!(lines[7], "5 4");
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn dot_text() {
        let text = render(|b| write_dot(&butterfly(), b));
        assert!(text.starts_with("graph {\n"));
        assert!(text.contains("  3 -- 4;\n"));
        assert!(text.ends_with("}\n"));
        assert_eq!(text.matches("--").count(), 6);
    }
}
