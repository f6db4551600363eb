//! Text formats: the edge-list graph file and the properties CSV.
//!
//! Graph file: line 1 is the vertex count `n`; each following non-empty line
//! is an edge `u v` with `1 <= u < v <= n`; `#` starts a comment; line order
//! does not matter. Properties CSV: header `name,family,split,mp`, decimal
//! points, double-quoted fields where needed.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::dataset::{Family, Split};
use crate::graph::{GraphError, MolecularGraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: expected vertex count, found {found:?}")]
    InvalidVertexCount { line: usize, found: String },
    #[error("missing vertex-count header line")]
    MissingVertexCount,
    #[error("line {line}: expected edge \"u v\", found {found:?}")]
    InvalidEdgeLine { line: usize, found: String },
    #[error("line {line}: edge endpoints must satisfy u < v, found {u} {v}")]
    EdgeNotAscending { line: usize, u: usize, v: usize },
    #[error("line {line}: {source}")]
    InvalidGraph { line: usize, source: GraphError },
    #[error("{source}")]
    Graph {
        #[from]
        source: GraphError,
    },
    #[error("line {line}: {message}")]
    InvalidCsv { line: usize, message: String },
}

/// Parses the edge-list graph format from a string.
pub fn parse_graph_str(text: &str, name: Option<String>) -> Result<MolecularGraph, FormatError> {
    let mut vertex_count: Option<usize> = None;
    let mut header_line = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match vertex_count {
            None => {
                let n: usize = content
                    .parse()
                    .map_err(|_| FormatError::InvalidVertexCount {
                        line,
                        found: content.to_string(),
                    })?;
                vertex_count = Some(n);
                header_line = line;
            }
            Some(n) => {
                let mut parts = content.split_whitespace();
                let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(FormatError::InvalidEdgeLine {
                        line,
                        found: content.to_string(),
                    });
                };
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| FormatError::InvalidEdgeLine {
                            line,
                            found: content.to_string(),
                        })
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u >= v {
                    return Err(FormatError::EdgeNotAscending { line, u, v });
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(FormatError::InvalidGraph {
                            line,
                            source: GraphError::EndpointOutOfRange {
                                vertex: w,
                                vertex_count: n,
                            },
                        });
                    }
                }
                edges.push((u, v));
            }
        }
    }
    let Some(n) = vertex_count else {
        return Err(FormatError::MissingVertexCount);
    };
    MolecularGraph::new(n, &edges, name).map_err(|source| FormatError::InvalidGraph {
        line: header_line,
        source,
    })
}

/// Loads a graph file; the file stem becomes the graph name.
pub fn load_graph_file(path: &Path) -> Result<MolecularGraph, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    parse_graph_str(&text, name)
}

/// Writes a graph in the edge-list format; the name, when present, goes into
/// a leading comment.
pub fn write_graph_string(g: &MolecularGraph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("{}\n", g.vertex_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One row of the properties CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyRow {
    pub name: String,
    pub family: Family,
    pub split: Split,
    pub melting_point: f64,
}

/// Splits one CSV line into fields, honoring double quotes.
fn split_csv_line(line: &str, line_no: usize) -> Result<Vec<String>, FormatError> {
    let mut fields = Vec::new();
    let mut field = String::new();
    let mut chars = line.chars().peekable();
    let mut in_quotes = false;
    while let Some(c) = chars.next() {
        match c {
            '"' if in_quotes => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    field.push('"');
                } else {
                    in_quotes = false;
                }
            }
            '"' if field.is_empty() => in_quotes = true,
            ',' if !in_quotes => {
                fields.push(std::mem::take(&mut field));
            }
            c => field.push(c),
        }
    }
    if in_quotes {
        return Err(FormatError::InvalidCsv {
            line: line_no,
            message: "unterminated quoted field".into(),
        });
    }
    fields.push(field);
    Ok(fields)
}

fn quote_csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const PROPERTIES_HEADER: &str = "name,family,split,mp";

/// Parses the properties CSV; the header row is mandatory.
pub fn parse_properties_csv(text: &str) -> Result<Vec<PropertyRow>, FormatError> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() {
            continue;
        }
        if !saw_header {
            if raw.trim() != PROPERTIES_HEADER {
                return Err(FormatError::InvalidCsv {
                    line: line_no,
                    message: format!("expected header {PROPERTIES_HEADER:?}"),
                });
            }
            saw_header = true;
            continue;
        }
        let fields = split_csv_line(raw, line_no)?;
        if fields.len() != 4 {
            return Err(FormatError::InvalidCsv {
                line: line_no,
                message: format!("expected 4 fields, found {}", fields.len()),
            });
        }
        let bad = |message: String| FormatError::InvalidCsv {
            line: line_no,
            message,
        };
        rows.push(PropertyRow {
            name: fields[0].clone(),
            family: fields[1].parse().map_err(|e: String| bad(e))?,
            split: fields[2].parse().map_err(|e: String| bad(e))?,
            melting_point: fields[3]
                .parse()
                .map_err(|_| bad(format!("invalid melting point {:?}", fields[3])))?,
        });
    }
    if !saw_header {
        return Err(FormatError::InvalidCsv {
            line: 1,
            message: "missing header row".into(),
        });
    }
    Ok(rows)
}

pub fn write_properties_csv(rows: &[PropertyRow]) -> String {
    let mut out = String::from(PROPERTIES_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            quote_csv_field(&row.name),
            row.family.as_str(),
            row.split.as_str(),
            row.melting_point
        ));
    }
    out
}

pub(crate) fn split_csv_fields(line: &str, line_no: usize) -> Result<Vec<String>, FormatError> {
    split_csv_line(line, line_no)
}
