//! Bit-exact text formats: element tokens, ring headers and descriptors,
//! matrix files, Gray image exports and graph adjacency lists.
//!
//! Matrix file layout:
//! ```text
//! ring zpm p=2 m=3
//! 2 12
//! 1 1 1 1 1 1 1 1 0 2 4 6
//! 0 1 2 3 4 5 6 7 1 1 1 1
//! ```
//! Zpm elements serialize as decimal integers. Fqum elements serialize as m
//! base-q digit characters, most significant (theta^{m-1}) digit first, each
//! digit the canonical residue-field index (charset 0-9 then a-z, so q <= 36).

use std::sync::Arc;

use crate::codes::CodeMatrix;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::ring::{Elem, Family, Ring, RingRef};

const DIGIT_CHARS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

fn digit_char(d: u64) -> Result<char> {
    DIGIT_CHARS
        .get(d as usize)
        .map(|&b| b as char)
        .ok_or_else(|| Error::InvalidParameters(format!("digit {d} exceeds the base-36 charset")))
}

fn char_digit(c: char) -> Option<u64> {
    DIGIT_CHARS
        .iter()
        .position(|&b| b as char == c)
        .map(|p| p as u64)
}

/// Serialize one element in the ring's token format.
pub fn element_token(ring: &Ring, x: Elem) -> Result<String> {
    match ring.family() {
        Family::Zpm => Ok(x.index().to_string()),
        Family::Fqum => {
            let digits = ring.digits(x);
            let mut out = String::with_capacity(digits.len());
            for &d in digits.iter().rev() {
                out.push(digit_char(d)?);
            }
            Ok(out)
        }
    }
}

pub fn parse_element_token(ring: &Ring, token: &str) -> Result<Elem> {
    let fail = |msg: String| Error::InvalidParameters(msg);
    match ring.family() {
        Family::Zpm => {
            let idx: u64 = token
                .parse()
                .map_err(|_| fail(format!("bad element token '{token}'")))?;
            ring.elem(idx)
        }
        Family::Fqum => {
            if token.len() != ring.m() as usize {
                return Err(fail(format!(
                    "element token '{token}' must have {} digits",
                    ring.m()
                )));
            }
            let mut digits = Vec::with_capacity(token.len());
            for c in token.chars().rev() {
                let d = char_digit(c)
                    .filter(|&d| d < ring.q())
                    .ok_or_else(|| fail(format!("bad digit '{c}' in token '{token}'")))?;
                digits.push(d);
            }
            ring.from_digits(&digits)
        }
    }
}

/// Serialize a residue-field element as a single digit character.
pub fn field_digit_char(ring: &Ring, d: u64) -> Result<char> {
    if d >= ring.q() {
        return Err(Error::IndexOutOfRange { index: d, limit: ring.q() });
    }
    digit_char(d)
}

fn parse_kv(part: &str) -> Result<(&str, &str)> {
    part.split_once('=')
        .ok_or_else(|| Error::InvalidParameters(format!("expected key=value, got '{part}'")))
}

fn parse_num(key: &str, value: &str) -> Result<u64> {
    value
        .parse()
        .map_err(|_| Error::InvalidParameters(format!("bad numeric value for {key}: '{value}'")))
}

fn parse_poly(value: &str) -> Result<Vec<u64>> {
    value
        .split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("bad poly coefficient '{c}'")))
        })
        .collect()
}

fn build_ring(family: &str, fields: &[(String, String)]) -> Result<Ring> {
    let mut p = None;
    let mut e = None;
    let mut m = None;
    let mut poly: Option<Vec<u64>> = None;
    for (key, value) in fields {
        match key.as_str() {
            "p" => p = Some(parse_num("p", value)?),
            "e" => e = Some(parse_num("e", value)? as u32),
            "m" => m = Some(parse_num("m", value)? as u32),
            "poly" => poly = Some(parse_poly(value)?),
            other => {
                return Err(Error::InvalidParameters(format!("unknown ring field '{other}'")))
            }
        }
    }
    let p = p.ok_or_else(|| Error::InvalidParameters("missing ring field p".into()))?;
    let m = m.ok_or_else(|| Error::InvalidParameters("missing ring field m".into()))?;
    match family {
        "zpm" => Ring::zpm(p, m),
        "fqum" => Ring::fqum(p, e.unwrap_or(1), m, poly.as_deref()),
        other => Err(Error::InvalidParameters(format!("unknown ring family '{other}'"))),
    }
}

/// Parse a matrix-file ring header line:
/// `ring zpm p=<p> m=<m>` or `ring fqum p=<p> e=<e> m=<m> [poly=<c_e,...,c_0>]`.
pub fn parse_ring_header(line: &str) -> Result<Ring> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some("ring") {
        return Err(Error::InvalidParameters(format!(
            "ring header must start with 'ring': '{line}'"
        )));
    }
    let family = parts
        .next()
        .ok_or_else(|| Error::InvalidParameters("missing ring family".into()))?;
    let fields: Vec<(String, String)> = parts
        .map(|part| parse_kv(part).map(|(k, v)| (k.to_string(), v.to_string())))
        .collect::<Result<_>>()?;
    build_ring(family, &fields)
}

/// Parse the CLI ring descriptor micro-syntax:
/// `zpm:p=<p>,m=<m>` or `fqum:p=<p>,e=<e>,m=<m>,poly=<c_e,...,c_0>`.
/// The poly field, when present, consumes the rest of the descriptor.
pub fn parse_ring_descriptor(desc: &str) -> Result<Ring> {
    let (family, rest) = desc
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameters(format!("ring descriptor '{desc}' needs 'family:fields'")))?;
    let mut fields: Vec<(String, String)> = Vec::new();
    let mut remaining = rest;
    while !remaining.is_empty() {
        if let Some(poly) = remaining.strip_prefix("poly=") {
            fields.push(("poly".into(), poly.to_string()));
            break;
        }
        let (part, tail) = match remaining.split_once(',') {
            Some((part, tail)) => (part, tail),
            None => (remaining, ""),
        };
        let (k, v) = parse_kv(part)?;
        fields.push((k.to_string(), v.to_string()));
        remaining = tail;
    }
    build_ring(family, &fields)
}

/// Emit a matrix file: ring header, dimensions, then one line of element
/// tokens per row.
pub fn write_matrix(mat: &CodeMatrix) -> Result<String> {
    let ring = mat.ring();
    let mut out = String::new();
    out.push_str(&ring.header());
    out.push('\n');
    out.push_str(&format!("{} {}\n", mat.rows(), mat.cols()));
    for r in 0..mat.rows() {
        let tokens: Vec<String> = mat
            .row(r)
            .iter()
            .map(|&e| element_token(ring, e))
            .collect::<Result<_>>()?;
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    Ok(out)
}

pub fn read_matrix(text: &str) -> Result<CodeMatrix> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    let ring: RingRef = Arc::new(parse_ring_header(header).map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })?);
    let (_, dims) = lines
        .next()
        .ok_or(Error::Parse { line: 2, msg: "missing dimension line".into() })?;
    let mut dim_parts = dims.split_whitespace();
    let parse_dim = |s: Option<&str>| -> Result<usize> {
        s.and_then(|v| v.parse().ok()).ok_or(Error::Parse {
            line: 2,
            msg: format!("bad dimension line '{dims}'"),
        })
    };
    let rows = parse_dim(dim_parts.next())?;
    let cols = parse_dim(dim_parts.next())?;
    let mut entries = Vec::with_capacity(rows * cols);
    let mut filled = 0usize;
    for (lineno, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if filled >= rows {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: "more rows than declared".into(),
            });
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected {cols} entries, found {}", tokens.len()),
            });
        }
        for token in tokens {
            entries.push(parse_element_token(&ring, token).map_err(|e| Error::Parse {
                line: lineno + 1,
                msg: e.to_string(),
            })?);
        }
        filled += 1;
    }
    if filled != rows {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {rows} rows, found {filled}"),
        });
    }
    CodeMatrix::new(ring, rows, cols, entries)
}

/// Gray image export: one codeword per line, field digit characters
/// concatenated.
pub fn write_field_vectors(ring: &Ring, vectors: &[Vec<u64>]) -> Result<String> {
    let mut out = String::new();
    for v in vectors {
        for &d in v {
            out.push(field_digit_char(ring, d)?);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Adjacency list export: vertex count, then one sorted neighbor list per
/// line.
pub fn write_graph_adjacency(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for i in 0..g.n() {
        let neighbors: Vec<String> = g.neighbors(i).iter().map(|j| j.to_string()).collect();
        out.push_str(&neighbors.join(" "));
        out.push('\n');
    }
    out
}
