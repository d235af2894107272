//! Edge-list text format.
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines, 0-based vertices)
//! ```
//!
//! Blank lines and everything after `#` are ignored. Repeated edges merge.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

/// Non-empty lines with comments stripped, paired with their 1-based line
/// numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                Error::parse(line_no, format!("expected a natural number, got `{tok}`"))
            })
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let nums = parse_numbers(hline, header)?;
    let [n, m] = nums[..] else {
        return Err(Error::parse(hline, "header must be `n m`"));
    };
    let mut g = Graph::new(n)?;
    let mut seen = 0;
    for (line_no, line) in lines {
        let nums = parse_numbers(line_no, line)?;
        let [u, v] = nums[..] else {
            return Err(Error::parse(line_no, "edge line must be `u v`"));
        };
        g.add_edge(u, v)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            hline,
            format!("header announces {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    #[test]
    fn round_trip() {
        for g in [
            complete_graph(0),
            complete_graph(4),
            cycle_graph(6).unwrap(),
        ] {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn comments_blank_lines_and_duplicates() {
        let text = "# a triangle\n\n3 4\n0 1 # first\n1 2\n\n2 0\n1 0\n";
        assert_eq!(parse_edge_list(text).unwrap(), complete_graph(3));
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "3\n",
            "2 1\n0 0\n",
            "2 1\n0 5\n",
            "2 2\n0 1\n",
            "2 1\n0 x\n",
            "2 1\n0 1 1\n",
        ] {
            assert!(
                matches!(parse_edge_list(bad), Err(Error::Parse { .. })),
                "accepted {bad:?}"
            );
        }
    }
}
