//! Plain-text input formats.
//!
//! * distance matrix: first line `n`, then `n` rows of `n` numbers;
//! * points: one point per line, coordinates separated by whitespace;
//! * edge list: first line `n`, then one `i j` pair per line.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::DistanceMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum InputFormat {
    DistanceMatrix,
    Points,
    EdgeList,
}

/// Distance assigned to non-adjacent pairs of an edge list.
pub const NON_EDGE_DISTANCE: f64 = 2.0;

struct Lines<'a> {
    path: &'a str,
    inner: Vec<(usize, &'a str)>,
}

impl<'a> Lines<'a> {
    fn new(path: &'a str, text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Self { path, inner }
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.to_string(),
            line,
            msg: msg.into(),
        }
    }

    fn fields<T: FromStr>(&self, line: usize, text: &str) -> Result<Vec<T>> {
        text.split_whitespace()
            .map(|tok| {
                tok.parse::<T>()
                    .map_err(|_| self.err(line, format!("not a number: {tok:?}")))
            })
            .collect()
    }

    fn header(&self) -> Result<usize> {
        let &(line, text) = self
            .inner
            .first()
            .ok_or_else(|| self.err(1, "file is empty"))?;
        let v: Vec<usize> = self.fields(line, text)?;
        match v[..] {
            [n] if n >= 1 => Ok(n),
            _ => Err(self.err(line, "expected a single vertex count n >= 1")),
        }
    }
}

pub fn parse_distance_matrix(path: &str, text: &str) -> Result<DistanceMatrix<f64>> {
    let lines = Lines::new(path, text);
    let n = lines.header()?;
    let body = &lines.inner[1..];
    if body.len() != n {
        let line = body.last().map_or(lines.inner[0].0, |l| l.0);
        return Err(lines.err(line, format!("expected {n} rows, found {}", body.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for &(line, text) in body {
        let row: Vec<f64> = lines.fields(line, text)?;
        if row.len() != n {
            return Err(lines.err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    DistanceMatrix::from_rows(&rows).map_err(|e| lines.err(body[0].0, e.to_string()))
}

pub fn parse_points(path: &str, text: &str) -> Result<Vec<Vec<f64>>> {
    let lines = Lines::new(path, text);
    let mut points: Vec<Vec<f64>> = Vec::new();
    for &(line, text) in &lines.inner {
        let p: Vec<f64> = lines.fields(line, text)?;
        if let Some(first) = points.first() {
            if first.len() != p.len() {
                return Err(lines.err(
                    line,
                    format!("expected {} coordinates, found {}", first.len(), p.len()),
                ));
            }
        }
        points.push(p);
    }
    if points.is_empty() {
        return Err(lines.err(1, "no points"));
    }
    Ok(points)
}

/// Edge lists become distance 1 for edges, 2 for non-edges, 0 on the
/// diagonal, so that ε = 1 reproduces the graph.
pub fn parse_edge_list(path: &str, text: &str) -> Result<DistanceMatrix<f64>> {
    let lines = Lines::new(path, text);
    let n = lines.header()?;
    let mut d = vec![NON_EDGE_DISTANCE; n * n];
    for i in 0..n {
        d[i * n + i] = 0.0;
    }
    for &(line, text) in &lines.inner[1..] {
        let e: Vec<usize> = lines.fields(line, text)?;
        match e[..] {
            [a, b] if a < n && b < n && a != b => {
                d[a * n + b] = 1.0;
                d[b * n + a] = 1.0;
            }
            _ => return Err(lines.err(line, format!("bad edge for n = {n}: {text:?}"))),
        }
    }
    DistanceMatrix::new(n, d)
}

pub fn parse_inputs(path: &Path, format: InputFormat) -> Result<DistanceMatrix<f64>> {
    let text = fs::read_to_string(path)?;
    let name = path.display().to_string();
    match format {
        InputFormat::DistanceMatrix => parse_distance_matrix(&name, &text),
        InputFormat::EdgeList => parse_edge_list(&name, &text),
        InputFormat::Points => {
            let pts = parse_points(&name, &text)?;
            DistanceMatrix::from_points(&pts)
        }
    }
}
