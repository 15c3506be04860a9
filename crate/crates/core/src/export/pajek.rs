//! Pajek `.net` writer and a minimal reader for round trips.
//!
//! Only the `*Vertices` / `*Edges` subset is produced: 1-based vertex ids with
//! quoted labels, then one `i j w` line per positive upper-triangle cell.

use std::io::{self, Write};

use crate::counting::CoauthorshipNetwork;
use crate::error::ParseError;
use crate::matrix::SquareMatrix;

/// Formats `value` like C's `%.6g`: six significant digits, trailing zeros
/// dropped, exponent form outside `[1e-4, 1e6)`.
pub fn format_sig6(value: f64) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{}", if value == 0.0 { 0.0 } else { value });
    }
    let sci = format!("{value:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (5 - exp).max(0) as usize;
    trim_zeros(&format!("{value:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn label(s: &str) -> String {
    s.replace('"', "'")
}

pub fn write_pajek<W: Write>(net: &CoauthorshipNetwork, mut out: W) -> io::Result<()> {
    let n = net.order();
    writeln!(out, "*Vertices {n}")?;
    for (i, name) in net.entities.iter().enumerate() {
        writeln!(out, "{} \"{}\"", i + 1, label(name))?;
    }
    writeln!(out, "*Edges")?;
    for i in 0..n {
        for j in i + 1..n {
            let w = net.matrix.get(i, j);
            if w > 0.0 {
                writeln!(out, "{} {} {}", i + 1, j + 1, format_sig6(w))?;
            }
        }
    }
    Ok(())
}

pub fn export_pajek(net: &CoauthorshipNetwork) -> String {
    let mut buf = Vec::new();
    write_pajek(net, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("utf-8 labels")
}

/// Reads the subset written by [`write_pajek`]; edge weights default to 1.
pub fn read_pajek(text: &str) -> Result<(Vec<String>, SquareMatrix), ParseError> {
    let err = |line: usize, message: &str| ParseError::Framing {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (lineno, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| err(1, "empty Pajek file"))?;
    let n: usize = header
        .strip_prefix("*Vertices")
        .or_else(|| header.strip_prefix("*vertices"))
        .and_then(|rest| rest.split_whitespace().next())
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| err(lineno, "expected `*Vertices n`"))?;

    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut matrix = SquareMatrix::zeros(n);
    let mut in_edges = false;
    for (lineno, line) in lines {
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if line.starts_with('*') {
            if line.eq_ignore_ascii_case("*edges") {
                in_edges = true;
                continue;
            }
            return Err(err(lineno, "unsupported section"));
        }
        if !in_edges {
            let (id, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let id: usize = id.parse().map_err(|_| err(lineno, "bad vertex id"))?;
            if id == 0 || id > n {
                return Err(err(lineno, "vertex id out of range"));
            }
            let rest = rest.trim();
            labels[id - 1] = match rest.strip_prefix('"') {
                Some(q) => q.split('"').next().unwrap_or_default().to_string(),
                None => rest.split_whitespace().next().unwrap_or_default().to_string(),
            };
        } else {
            let mut parts = line.split_whitespace();
            let mut vertex = || -> Result<usize, ParseError> {
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(lineno, "bad edge endpoint"))?;
                if v == 0 || v > n {
                    return Err(err(lineno, "edge endpoint out of range"));
                }
                Ok(v - 1)
            };
            let (i, j) = (vertex()?, vertex()?);
            let w: f64 = match parts.next() {
                Some(s) => s.parse().map_err(|_| err(lineno, "bad edge weight"))?,
                None => 1.0,
            };
            if i != j {
                matrix.add_symmetric(i, j, w);
            }
        }
    }
    Ok((labels, matrix))
}
