//! Plain-text input formats.
//!
//! Hypergraph files start with a `k n m` header followed by `m` lines of `k`
//! vertex labels. Vector files hold one entry per line, either an integer, a
//! rational `p/q`, or a decimal. Both accept `#` comment lines, blank lines
//! and CRLF line endings.

use std::fs;
use std::path::Path;

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::scalar::Scalar;

use super::CliError;

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, CliError> {
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_error(text.lines().count().max(1), "missing header `k n m`"));
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_error(
            header_line,
            format!("header needs 3 integers `k n m`, found {} tokens", fields.len()),
        ));
    }
    let mut nums = [0usize; 3];
    for (slot, tok) in nums.iter_mut().zip(&fields) {
        *slot = tok
            .parse()
            .map_err(|_| parse_error(header_line, format!("header token {tok:?} is not a nonnegative integer")))?;
    }
    let [k, n, m] = nums;
    if k < 2 || n == 0 {
        return Err(parse_error(header_line, format!("need k >= 2 and n >= 1 (got k = {k}, n = {n})")));
    }

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(parse_error(line, format!("more than the {m} edge lines declared in the header")));
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != k {
            return Err(parse_error(
                line,
                format!("expected {k} vertex labels, found {}", toks.len()),
            ));
        }
        let edge = toks
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_error(line, format!("vertex label {t:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        edges.push(edge);
        edge_lines.push(line);
    }
    if edges.len() < m {
        return Err(parse_error(
            text.lines().count().max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }

    Hypergraph::new(n, k, &edges).map_err(|e| {
        let edge = match &e {
            HypergraphError::MalformedEdge { edge, .. }
            | HypergraphError::WrongUniformity { edge, .. }
            | HypergraphError::LabelOutOfRange { edge, .. }
            | HypergraphError::DuplicateEdge { edge, .. } => Some(*edge),
            _ => None,
        };
        CliError::Hypergraph {
            line: edge.map_or(header_line, |i| edge_lines[i]),
            source: e,
        }
    })
}

pub fn parse_hypergraph_file(path: &Path) -> Result<Hypergraph, CliError> {
    parse_hypergraph(&read_text(path)?)
}

pub fn parse_vector(text: &str) -> Result<Vec<Scalar>, CliError> {
    content_lines(text)
        .map(|(line, tok)| tok.parse::<Scalar>().map_err(|e| parse_error(line, e.to_string())))
        .collect()
}

pub fn parse_vector_file(path: &Path) -> Result<Vec<Scalar>, CliError> {
    parse_vector(&read_text(path)?)
}
