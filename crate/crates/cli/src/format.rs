//! Text graph files.
//!
//! ```text
//! # comment
//! p dg <n> <m> [w]
//! e <u> <v> [<weight>]
//! c <v> R|B
//! ```
//!
//! Vertices are 1-indexed in files and 0-indexed in memory. Weights appear
//! exactly when the header carries `w`. Color lines are optional, but when
//! present every vertex needs exactly one.

use std::collections::HashSet;
use std::fmt::Write as _;

use dagdiam::{Color, ColorAssignment, DiGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but the file has {found}")]
    InconsistentHeader { declared: usize, found: usize },
    #[error("line {line}: unknown color `{token}` (expected R or B)")]
    UnknownColor { line: usize, token: String },
    #[error("vertex {0} has no color line although other vertices do")]
    IncompleteColoring(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: DiGraph,
    pub colors: Option<ColorAssignment>,
}

struct Header {
    n: usize,
    m: usize,
    weighted: bool,
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<u64, FormatError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("{what} `{token}` is not a non-negative integer")))
}

fn vertex(line: usize, token: Option<&str>, n: usize) -> Result<usize, FormatError> {
    let v = number(line, token, "vertex")?;
    if v == 0 || v > n as u64 {
        return Err(syntax(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v as usize - 1)
}

pub fn parse(text: &str) -> Result<GraphFile, FormatError> {
    let mut header: Option<Header> = None;
    let mut edges = Vec::new();
    let mut seen_edges = HashSet::new();
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut any_color = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        if kind.starts_with('#') {
            continue;
        }
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second header line"));
                }
                if tokens.next() != Some("dg") {
                    return Err(syntax(line, "header must start with `p dg`"));
                }
                let n = number(line, tokens.next(), "vertex count")? as usize;
                let m = number(line, tokens.next(), "edge count")? as usize;
                let weighted = match tokens.next() {
                    None => false,
                    Some("w") => true,
                    Some(other) => return Err(syntax(line, format!("unexpected `{other}` in header"))),
                };
                colors = vec![None; n];
                header = Some(Header { n, m, weighted });
            }
            "e" => {
                let h = header.as_ref().ok_or_else(|| syntax(line, "edge before header"))?;
                let u = vertex(line, tokens.next(), h.n)?;
                let v = vertex(line, tokens.next(), h.n)?;
                let w = if h.weighted {
                    let w = number(line, tokens.next(), "weight")?;
                    if w == 0 {
                        return Err(syntax(line, "weights must be positive"));
                    }
                    w
                } else {
                    1
                };
                if u == v {
                    return Err(syntax(line, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen_edges.insert((u, v)) {
                    return Err(syntax(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v, w));
            }
            "c" => {
                let h = header.as_ref().ok_or_else(|| syntax(line, "color before header"))?;
                let v = vertex(line, tokens.next(), h.n)?;
                let color = match tokens.next() {
                    Some("R") => Color::Red,
                    Some("B") => Color::Blue,
                    Some(other) => {
                        return Err(FormatError::UnknownColor {
                            line,
                            token: other.to_string(),
                        })
                    }
                    None => return Err(syntax(line, "missing color")),
                };
                if colors[v].replace(color).is_some() {
                    return Err(syntax(line, format!("vertex {} colored twice", v + 1)));
                }
                any_color = true;
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
        if let Some(extra) = tokens.next() {
            return Err(syntax(line, format!("trailing token `{extra}`")));
        }
    }

    let h = header.ok_or_else(|| syntax(text.lines().count().max(1), "missing `p dg` header"))?;
    if edges.len() != h.m {
        return Err(FormatError::InconsistentHeader {
            declared: h.m,
            found: edges.len(),
        });
    }
    let colors = if any_color {
        let mut out = Vec::with_capacity(h.n);
        for (v, c) in colors.into_iter().enumerate() {
            out.push(c.ok_or(FormatError::IncompleteColoring(v + 1))?);
        }
        Some(ColorAssignment::new(out))
    } else {
        None
    };
    // Range, loop and duplicate checks above leave nothing for the constructor to reject.
    let graph = DiGraph::new(h.n, edges).expect("validated edge list");
    Ok(GraphFile { graph, colors })
}

/// Inverse of [`parse`]. The `w` flag is written only for weighted graphs.
pub fn serialize(g: &DiGraph, colors: Option<&ColorAssignment>) -> String {
    let mut out = String::with_capacity(16 * (g.m() + g.n()));
    let weighted = g.is_weighted();
    let _ = writeln!(out, "p dg {} {}{}", g.n(), g.m(), if weighted { " w" } else { "" });
    for (u, v, w) in g.edges() {
        if weighted {
            let _ = writeln!(out, "e {} {} {w}", u + 1, v + 1);
        } else {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
    }
    if let Some(colors) = colors {
        for (v, c) in colors.as_slice().iter().enumerate() {
            let _ = writeln!(out, "c {} {c}", v + 1);
        }
    }
    out
}
