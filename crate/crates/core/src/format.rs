//! The two text formats.
//!
//! `ograph v1` describes a whole graph, optionally with an order:
//!
//! ```text
//! ograph v1
//! n 3
//! e 0 1
//! e 1 2
//! e 2 0
//! o 2 0
//! ```
//!
//! One `e u v` line per arrow `u → v` and one `o u v` line per order pair
//! `u ≺ v`; endpoints must be in range, and duplicate or symmetric pairs
//! are parse errors. Writers emit lines in ascending pair order, so equal
//! values serialize to equal bytes.
//!
//! `odelta v1` describes a vertex stream, one line per vertex in id order
//! starting at 0: `v <x>` followed by one token per arc at `x`, `>u` for
//! `u → x` and `<u` for `x → u`, ascending by `u`:
//!
//! ```text
//! odelta v1
//! v 0
//! v 1 >0
//! v 2 <0 >1
//! ```
//!
//! The header line is written by all emitters and optional on input, so
//! bare streams pipe straight into the engine.

use crate::error::Error;
use crate::graph::{DeltaRel, ExtensionDelta, OGraph, Vertex};
use crate::order::Order;

pub const OGRAPH_HEADER: &str = "ograph v1";
pub const ODELTA_HEADER: &str = "odelta v1";

/// Largest vertex count a parsed file may declare. The dense pair tables
/// behind [`OGraph`] and [`Order`] grow quadratically, so an absurd header
/// is rejected before any allocation happens.
pub const MAX_PARSED_VERTICES: usize = 50_000;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex, Error> {
    tok.parse::<Vertex>().map_err(|_| parse_err(line, format!("expected a vertex id, got {tok:?}")))
}

/// Parses an `ograph v1` document into a graph and its (possibly empty)
/// order relation. Blank lines are ignored.
pub fn parse_ograph(src: &str) -> Result<(OGraph, Order), Error> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if header != OGRAPH_HEADER {
        return Err(parse_err(line, format!("expected {OGRAPH_HEADER:?} header, got {header:?}")));
    }
    let (line, count) = lines.next().ok_or_else(|| parse_err(line, "missing `n <count>` line"))?;
    let n = match count.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", c] => parse_vertex(c, line)?,
        _ => return Err(parse_err(line, format!("expected `n <count>`, got {count:?}"))),
    };
    if n > MAX_PARSED_VERTICES {
        return Err(parse_err(line, format!("{n} vertices exceed the parser cap of {MAX_PARSED_VERTICES}")));
    }

    let mut graph = OGraph::empty(n);
    let mut order = Order::empty(n);
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[..] {
            ["e", u, v] => {
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                graph.add_arrow(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            ["o", u, v] => {
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                order.add_pair(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            _ => return Err(parse_err(line, format!("expected `e u v` or `o u v`, got {text:?}"))),
        }
    }
    Ok((graph, order))
}

/// Parses an order over `n` vertices from either a full `ograph v1`
/// document (its `o` lines are taken, and its `n` must match) or a bare
/// sequence of `o u v` lines, as emitted by the reorientation stream.
pub fn parse_order(src: &str, n: usize) -> Result<Order, Error> {
    let first = src.lines().map(str::trim).find(|l| !l.is_empty());
    if first == Some(OGRAPH_HEADER) {
        let (g, order) = parse_ograph(src)?;
        if g.n() != n {
            return Err(parse_err(1, format!("order file is over {} vertices, expected {n}", g.n())));
        }
        return Ok(order);
    }
    let mut order = Order::empty(n);
    for (line, text) in src.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if text.is_empty() {
            continue;
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[..] {
            ["o", u, v] => {
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                order.add_pair(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            _ => return Err(parse_err(line, format!("expected `o u v`, got {text:?}"))),
        }
    }
    Ok(order)
}

/// Serializes a graph, and an order if one is given, as `ograph v1`.
pub fn write_ograph(g: &OGraph, order: Option<&Order>) -> String {
    let mut out = format!("{OGRAPH_HEADER}\nn {}\n", g.n());
    for (u, v) in g.arrows() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    if let Some(order) = order {
        for (u, v) in order.pairs() {
            out.push_str(&format!("o {u} {v}\n"));
        }
    }
    out
}

/// One `v <x> ...` line for a delta.
pub fn write_delta_line(d: &ExtensionDelta) -> String {
    let mut out = format!("v {}", d.x());
    for v in 0..d.x() {
        match d.rel(v) {
            DeltaRel::ToNew => out.push_str(&format!(" >{v}")),
            DeltaRel::FromNew => out.push_str(&format!(" <{v}")),
            DeltaRel::Incomparable => {}
        }
    }
    out
}

/// The whole graph as an `odelta v1` stream in vertex id order.
pub fn write_odelta(g: &OGraph) -> String {
    let mut out = format!("{ODELTA_HEADER}\n");
    for x in 0..g.n() {
        out.push_str(&write_delta_line(&g.delta_at(x)));
        out.push('\n');
    }
    out
}

/// Parses one `v <x> ...` line. The vertex id must be the expected one
/// (streams run in id order) and every mentioned endpoint must be below it.
pub fn parse_delta_line(text: &str, expected_x: usize, line: usize) -> Result<ExtensionDelta, Error> {
    let mut toks = text.split_whitespace();
    if toks.next() != Some("v") {
        return Err(parse_err(line, format!("expected `v <x> ...`, got {text:?}")));
    }
    let x = parse_vertex(toks.next().ok_or_else(|| parse_err(line, "missing vertex id"))?, line)?;
    if x != expected_x {
        return Err(parse_err(line, format!("expected vertex {expected_x}, got {x}")));
    }
    let mut delta = ExtensionDelta::isolated(x);
    for tok in toks {
        let (rel, rest) = match tok.split_at(1) {
            (">", rest) => (DeltaRel::ToNew, rest),
            ("<", rest) => (DeltaRel::FromNew, rest),
            _ => return Err(parse_err(line, format!("expected `>u` or `<u`, got {tok:?}"))),
        };
        let u = parse_vertex(rest, line)?;
        if u >= x {
            return Err(parse_err(line, format!("endpoint {u} is not below vertex {x}")));
        }
        if delta.rel(u) != DeltaRel::Incomparable {
            return Err(parse_err(line, format!("duplicate endpoint {u}")));
        }
        delta.set(u, rel);
    }
    Ok(delta)
}

/// Parses a whole `odelta v1` document (header optional) into the delta
/// sequence.
pub fn parse_odelta(src: &str) -> Result<Vec<ExtensionDelta>, Error> {
    let mut deltas = Vec::new();
    let mut expected = 0;
    for (line, text) in src.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if text.is_empty() || (line == 1 && text == ODELTA_HEADER) {
            continue;
        }
        deltas.push(parse_delta_line(text, expected, line)?);
        expected += 1;
    }
    Ok(deltas)
}
