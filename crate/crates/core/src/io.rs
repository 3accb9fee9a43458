//! Text formats: sparse JSON coloring documents, graph6 lines, triple
//! families, DOT output and the report envelope.
//!
//! All JSON goes through `serde_json::Value`, whose object maps keep keys
//! sorted, and is written compactly, so equal values give equal bytes.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::coloring::{Coloring, TripleFamily, VertexSet};
use crate::error::{Error, Result};

/// Input/output representation of a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Graph6,
}

/// Which pairs `emit_dot` draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotMode {
    Ones,
    Zeros,
    Both,
}

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}

fn field<'a>(doc: &'a Value, key: &str) -> Result<&'a Value> {
    match doc.as_object().and_then(|o| o.get(key)) {
        Some(v) => Ok(v),
        None => invalid(format!("document needs a `{key}` field")),
    }
}

fn index(v: &Value, what: &str) -> Result<usize> {
    match v.as_u64() {
        Some(x) => Ok(x as usize),
        None => invalid(format!("{what} must be a non-negative integer, got {v}")),
    }
}

fn tuple(v: &Value, len: usize, what: &str) -> Result<Vec<usize>> {
    match v.as_array() {
        Some(items) if items.len() == len => items.iter().map(|x| index(x, what)).collect(),
        _ => invalid(format!(
            "{what} must be an array of {len} integers, got {v}"
        )),
    }
}

/// Reads a coloring in the given format. JSON pairs may come in any order
/// and orientation; graph6 reads the first non-empty line.
pub fn parse_coloring(text: &str, format: Format) -> Result<Coloring> {
    match format {
        Format::Json => {
            let doc = parse_json(text)?;
            let n = index(field(&doc, "n")?, "n")?;
            let Some(ones) = field(&doc, "ones")?.as_array() else {
                return invalid("`ones` must be an array");
            };
            let mut pairs = Vec::with_capacity(ones.len());
            for p in ones {
                let ij = tuple(p, 2, "pair")?;
                if ij[0] == ij[1] {
                    return invalid(format!("pair [{0},{0}] is not a pair", ij[0]));
                }
                pairs.push((ij[0].min(ij[1]), ij[0].max(ij[1])));
            }
            Coloring::from_ones(n, pairs).map_err(|e| Error::Validation(e.to_string()))
        }
        Format::Graph6 => parse_graph6(text),
    }
}

/// Writes a coloring in the given format (graph6 without a trailing newline).
pub fn emit_coloring(phi: &Coloring, format: Format) -> String {
    match format {
        Format::Json => coloring_json(phi).to_string(),
        Format::Graph6 => to_graph6(phi),
    }
}

/// `{"n": .., "ones": [[i, j], ...]}` with pairs in increasing order.
pub fn coloring_json(phi: &Coloring) -> Value {
    let mut ones = phi.ones_pairs();
    ones.sort_unstable();
    json!({ "n": phi.n(), "ones": ones.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>() })
}

/// The coloring in the requested output format: a document or a graph6 string.
pub fn coloring_value(phi: &Coloring, format: Format) -> Value {
    match format {
        Format::Json => coloring_json(phi),
        Format::Graph6 => Value::String(to_graph6(phi)),
    }
}

pub fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(i, j)| json!([i, j])).collect())
}

pub fn vertex_set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

/// Reads `{"n": .., "triples": [[i, j, k], ...]}`.
pub fn parse_triples(text: &str) -> Result<TripleFamily> {
    let doc = parse_json(text)?;
    let n = index(field(&doc, "n")?, "n")?;
    let Some(items) = field(&doc, "triples")?.as_array() else {
        return invalid("`triples` must be an array");
    };
    let mut triples = Vec::with_capacity(items.len());
    for t in items {
        let mut v = tuple(t, 3, "triple")?;
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return invalid(format!("triple {t} repeats a vertex"));
        }
        triples.push((v[0], v[1], v[2]));
    }
    TripleFamily::from_triples(n, triples).map_err(|e| Error::Validation(e.to_string()))
}

pub fn triples_json(t: &TripleFamily) -> Value {
    let items: Vec<Value> = t
        .triples()
        .iter()
        .map(|&(a, b, c)| json!([a, b, c]))
        .collect();
    json!({ "n": t.n(), "triples": items })
}

/// graph6 encoding: size prefix, then the upper-triangle bits in pair-index
/// order packed six per byte, most significant first, each plus 63.
pub fn to_graph6(phi: &Coloring) -> String {
    let n = phi.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 258_048 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let m = phi.num_pairs();
    for chunk in (0..m).step_by(6) {
        let mut b = 0u8;
        for k in 0..6 {
            b <<= 1;
            if chunk + k < m && phi.bit(chunk + k) {
                b |= 1;
            }
        }
        out.push((b + 63) as char);
    }
    out
}

/// Decodes the first non-empty line of `text` as graph6.
pub fn parse_graph6(text: &str) -> Result<Coloring> {
    let Some((line_no, line)) = text.lines().enumerate().find(|(_, l)| !l.trim().is_empty()) else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty graph6 input".into(),
        });
    };
    let line_no = line_no + 1;
    let lead = line.len() - line.trim_start().len();
    let body = line.trim();
    let (skip, body) = match body.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    let err = |pos: usize, message: String| Error::Parse {
        line: line_no,
        column: lead + skip + pos + 1,
        message,
    };
    for (pos, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(pos, format!("byte {c:#04x} outside the graph6 range")));
        }
    }
    let val = |pos: usize| -> Result<usize> {
        bytes
            .get(pos)
            .map(|&c| (c - 63) as usize)
            .ok_or_else(|| err(pos, "truncated size prefix".into()))
    };
    let (n, start) = match bytes.first() {
        None => return Err(err(0, "missing size byte".into())),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for k in 2..8 {
                n = (n << 6) | val(k)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0;
            for k in 1..4 {
                n = (n << 6) | val(k)?;
            }
            (n, 4)
        }
        Some(&c) => ((c - 63) as usize, 1),
    };
    let m = n * n.saturating_sub(1) / 2;
    let need = m.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != need {
        return Err(err(
            start + data.len().min(need),
            format!("expected {need} data bytes for n = {n}, got {}", data.len()),
        ));
    }
    let bits = (0..m).map(|p| (((data[p / 6] - 63) >> (5 - p % 6)) & 1) == 1);
    Coloring::from_bits(n, bits)
}

/// DOT rendering: one node per vertex; 1-pairs solid, 0-pairs dashed.
pub fn emit_dot(phi: &Coloring, mode: DotMode) -> String {
    let n = phi.n();
    let mut out = String::from("graph coloring {\n");
    for v in 0..n {
        let _ = writeln!(out, "  {v};");
    }
    for j in 1..n {
        for i in 0..j {
            match (phi.get(i, j), mode) {
                (1, DotMode::Ones | DotMode::Both) => {
                    let _ = writeln!(out, "  {i} -- {j};");
                }
                (0, DotMode::Zeros | DotMode::Both) => {
                    let _ = writeln!(out, "  {i} -- {j} [style=dashed];");
                }
                _ => {}
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Lowercase hex SHA-256 of `bytes`.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

/// The report envelope written on stdout.
pub fn report(command: &str, input: &[u8], result: Value, seed: Option<u64>) -> Value {
    let mut doc = Map::new();
    doc.insert("command".into(), json!(command));
    doc.insert("input_digest".into(), json!(digest(input)));
    doc.insert("result".into(), result);
    doc.insert("tool_version".into(), json!(TOOL_VERSION));
    if let Some(s) = seed {
        doc.insert("seed".into(), json!(s));
    }
    Value::Object(doc)
}
