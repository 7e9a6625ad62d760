//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//!
//! Vertex ids are 0-based and edge `i` is the `i`-th listed pair. Blank lines
//! and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, VertexId};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into `(column, token)` pairs, columns 1-based.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let toks = tokens(line);
    if toks.len() != 2 {
        let column = toks.get(2).map_or(line.len() + 1, |t| t.0);
        return Err(parse_error(
            line_no,
            column,
            format!("expected two integers, found {}", toks.len()),
        ));
    }
    let num = |(col, tok): (usize, &str)| {
        tok.parse::<usize>().map_err(|_| {
            parse_error(
                line_no,
                col,
                format!("{tok:?} is not a nonnegative integer"),
            )
        })
    };
    Ok((num(toks[0])?, num(toks[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let Some((header_no, header)) = lines.next() else {
        return Err(parse_error(1, 1, "missing `n m` header"));
    };
    let (n, m) = two_numbers(header_no, header)?;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        if pairs.len() == m {
            return Err(parse_error(line_no, 1, format!("more than {m} edge lines")));
        }
        let (u, v) = two_numbers(line_no, line)?;
        for (col, vertex) in [(tokens(line)[0].0, u), (tokens(line)[1].0, v)] {
            if vertex >= n {
                return Err(parse_error(
                    line_no,
                    col,
                    format!("vertex {vertex} out of range for {n} vertices"),
                ));
            }
        }
        pairs.push((u, v));
        last_line = line_no;
    }
    if pairs.len() < m {
        return Err(parse_error(
            last_line + 1,
            1,
            format!("expected {m} edge lines, found {}", pairs.len()),
        ));
    }
    build_graph(n, &pairs)
}

/// Renders a graph back to edge-list text.
///
/// Vertices are relabelled `0..n` in increasing order and edges are listed
/// in id order, so ids are preserved whenever they are already `0..m`.
pub fn to_edge_list(g: &Graph) -> String {
    let index: std::collections::BTreeMap<VertexId, usize> =
        g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (_, (u, v)) in g.edges() {
        let _ = writeln!(out, "{} {}", index[&u], index[&v]);
    }
    out
}
