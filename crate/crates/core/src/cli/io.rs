//! Graph file formats.
//!
//! `edgelist`: optional header `p <n> <m>`, then one `u v` pair per line with
//! zero-based vertices; `#` starts a comment. `dimacs`: `c` comment lines,
//! `p edge <n> <m>`, and `e <u> <v>` lines with one-based vertices. Without a
//! header, `n` is one more than the largest vertex mentioned.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{EccError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    Edgelist,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = EccError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edges" => Ok(GraphFormat::Edgelist),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(EccError::Input(format!("unknown graph format '{other}'"))),
        }
    }
}

pub fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| EccError::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text, format)
}

pub fn save_graph(path: &Path, g: &Graph, format: GraphFormat) -> Result<()> {
    std::fs::write(path, format_graph(g, format))?;
    Ok(())
}

fn parse_vertex(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| EccError::Parse {
        line,
        message: format!("expected a vertex index, found '{tok}'"),
    })
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match format {
            GraphFormat::Edgelist => raw.split('#').next().unwrap_or(""),
            GraphFormat::Dimacs => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (format, toks[0]) {
            (GraphFormat::Dimacs, "c") => {}
            (_, "p") => {
                if declared.is_some() {
                    return Err(EccError::Parse { line: line_no, message: "duplicate header".into() });
                }
                let rest = match format {
                    GraphFormat::Edgelist => &toks[1..],
                    GraphFormat::Dimacs => {
                        if toks.len() < 2 || !matches!(toks[1], "edge" | "col") {
                            return Err(EccError::Parse {
                                line: line_no,
                                message: "expected 'p edge <n> <m>'".into(),
                            });
                        }
                        &toks[2..]
                    }
                };
                if rest.len() != 2 {
                    return Err(EccError::Parse { line: line_no, message: "malformed header".into() });
                }
                declared = Some(parse_vertex(rest[0], line_no)?);
                parse_vertex(rest[1], line_no)?;
            }
            (GraphFormat::Dimacs, "e") => {
                if toks.len() != 3 {
                    return Err(EccError::Parse { line: line_no, message: "expected 'e <u> <v>'".into() });
                }
                let u = parse_vertex(toks[1], line_no)?;
                let v = parse_vertex(toks[2], line_no)?;
                if u == 0 || v == 0 {
                    return Err(EccError::Parse {
                        line: line_no,
                        message: "dimacs vertices are one-based".into(),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            (GraphFormat::Edgelist, _) => {
                if toks.len() != 2 {
                    return Err(EccError::Parse { line: line_no, message: "expected 'u v'".into() });
                }
                edges.push((parse_vertex(toks[0], line_no)?, parse_vertex(toks[1], line_no)?));
            }
            (GraphFormat::Dimacs, other) => {
                return Err(EccError::Parse {
                    line: line_no,
                    message: format!("unexpected line type '{other}'"),
                })
            }
        }
    }
    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::new(n, &edges)
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    let edges = g.edges();
    let mut out = String::new();
    match format {
        GraphFormat::Edgelist => {
            writeln!(out, "p {} {}", g.n(), edges.len()).unwrap();
            for (u, v) in edges {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), edges.len()).unwrap();
            for (u, v) in edges {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}
