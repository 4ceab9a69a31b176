//! The plain-text polytope format: a header line `d n` followed by `n` lines
//! of `d` space-separated integers, LF line endings.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::polytope::LatticePolytope;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c == ' ' || c == '\t', start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_count(line: usize, (column, tok): (usize, &str), what: &str) -> Result<usize> {
    match tok.parse::<usize>() {
        Ok(0) | Err(_) => Err(parse_error(line, column, format!("{what} must be a positive integer, got {tok:?}"))),
        Ok(n) => Ok(n),
    }
}

/// The points listed in a polytope file, without any geometric checks.
pub fn parse_points(text: &str) -> Result<(usize, Vec<IntVector>)> {
    let lines: Vec<&str> = text.split('\n').collect();
    let header = tokens(lines[0].strip_suffix('\r').unwrap_or(lines[0]));
    if header.len() != 2 {
        let column = header.get(2).map_or(1, |t| t.0);
        return Err(parse_error(1, column, "header must be \"d n\""));
    }
    let d = parse_count(1, header[0], "dimension")?;
    let n = parse_count(1, header[1], "vertex count")?;
    let mut points = Vec::with_capacity(n);
    for k in 0..n {
        let lineno = k + 2;
        let raw = lines
            .get(k + 1)
            .ok_or_else(|| parse_error(lineno, 1, format!("expected {n} vertex lines, found {k}")))?;
        let toks = tokens(raw.strip_suffix('\r').unwrap_or(raw));
        if toks.len() != d {
            let column = toks.get(d).map_or(raw.len() + 1, |t| t.0);
            return Err(parse_error(lineno, column, format!("expected {d} coordinates, found {}", toks.len())));
        }
        let mut coords = Vec::with_capacity(d);
        for (column, tok) in toks {
            let c = tok
                .parse::<BigInt>()
                .map_err(|_| parse_error(lineno, column, format!("not an integer: {tok:?}")))?;
            coords.push(c);
        }
        points.push(IntVector::new(coords));
    }
    for (k, rest) in lines.iter().enumerate().skip(n + 1) {
        if !rest.trim().is_empty() {
            return Err(parse_error(k + 1, 1, format!("unexpected content after {n} vertex lines")));
        }
    }
    Ok((d, points))
}

/// Parses a polytope file; every listed point must be a vertex.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let (_, points) = parse_points(text)?;
    LatticePolytope::new(points)
}

/// The canonical text of a polytope, vertices in stored order.
pub fn write_polytope(p: &LatticePolytope) -> String {
    write_points(p.dim(), p.vertices())
}

pub fn write_points(d: usize, points: &[IntVector]) -> String {
    let mut out = format!("{d} {}\n", points.len());
    for v in points {
        let line: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}
