//! Plain-text graph files and degree-bound specifications.
//!
//! Graph format: a header line `p m` (vertex count, edge count) followed by
//! exactly `m` lines `u v`, one edge per line with 0-based endpoints.
//! Everything after a `#` is a comment; blank lines are skipped. Emitted
//! files list edges in canonical order, so parse/emit round-trips exactly.
//!
//! Bound specifications (for the `g` and `f` vectors) come in three forms:
//! a single integer `k` (constant), a comma-separated list `k0,k1,...`
//! (one value per vertex), or `@path` (a file with one integer per line,
//! with the same comment and blank-line rules).

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Strips the comment part and surrounding whitespace; `None` if nothing
/// remains.
fn content(line: &str) -> Option<&str> {
    let code = line.split('#').next().unwrap_or("").trim();
    if code.is_empty() {
        None
    } else {
        Some(code)
    }
}

/// Parses the `p m` + edge-list format. Line numbers in errors are 1-based
/// physical lines of the input text.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| content(raw).map(|code| (i + 1, code)));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line `p m`"))?;
    let mut fields = header.split_whitespace();
    let p: usize = fields
        .next()
        .ok_or_else(|| Error::parse(header_line, "missing vertex count"))?
        .parse()
        .map_err(|e| Error::parse(header_line, format!("bad vertex count: {e}")))?;
    let m: usize = fields
        .next()
        .ok_or_else(|| Error::parse(header_line, "missing edge count"))?
        .parse()
        .map_err(|e| Error::parse(header_line, format!("bad edge count: {e}")))?;
    if fields.next().is_some() {
        return Err(Error::parse(header_line, "header must be exactly `p m`"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, code) in lines {
        if edges.len() == m {
            return Err(Error::parse(
                line,
                format!("expected {m} edges but found more"),
            ));
        }
        let mut fields = code.split_whitespace();
        let mut endpoint = |name: &str| -> Result<usize> {
            fields
                .next()
                .ok_or_else(|| Error::parse(line, format!("missing endpoint {name}")))?
                .parse()
                .map_err(|e| Error::parse(line, format!("bad endpoint {name}: {e}")))
        };
        let u = endpoint("u")?;
        let v = endpoint("v")?;
        if fields.next().is_some() {
            return Err(Error::parse(line, "edge line must be exactly `u v`"));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if u >= p || v >= p {
            return Err(Error::parse(
                line,
                format!("edge ({u}, {v}) out of range for {p} vertices"),
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count() + 1,
            format!("expected {m} edges but found {}", edges.len()),
        ));
    }
    Graph::new(p, &edges)
}

/// Renders a graph in the same format, edges in canonical order.
pub fn emit_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn write_graph_file(path: impl AsRef<Path>, graph: &Graph) -> Result<()> {
    Ok(fs::write(path, emit_graph(graph))?)
}

/// Parses a degree-bound specification into one value per vertex.
///
/// `spec` is a constant `k`, a comma list `k0,k1,...`, or `@path`.
pub fn parse_bound_values(spec: &str, p: usize) -> Result<Vec<i64>> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path)?;
        let mut values = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let Some(code) = content(raw) else { continue };
            let value = code
                .parse()
                .map_err(|e| Error::parse(i + 1, format!("bad bound value: {e}")))?;
            values.push(value);
        }
        check_bound_len(values, p)
    } else if spec.contains(',') {
        let values = spec
            .split(',')
            .map(|field| {
                field
                    .trim()
                    .parse()
                    .map_err(|e| Error::input(format!("bad bound value {field:?}: {e}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        check_bound_len(values, p)
    } else {
        let value = spec
            .parse()
            .map_err(|e| Error::input(format!("bad bound value {spec:?}: {e}")))?;
        Ok(vec![value; p])
    }
}

fn check_bound_len(values: Vec<i64>, p: usize) -> Result<Vec<i64>> {
    if values.len() != p {
        return Err(Error::input(format!(
            "bound list has {} entries but the graph has {p} vertices",
            values.len()
        )));
    }
    Ok(values)
}
