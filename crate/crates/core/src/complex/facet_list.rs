//! Plain-text facet lists: one facet per line, vertex indices separated by
//! whitespace, `#` starts a comment.

use std::fmt::Write;

use super::{ComplexError, SimplicialComplex, VertexSet, MAX_VERTICES};

/// Parses a facet list. The ambient vertex count is `n_vertices` when given,
/// otherwise one more than the largest index that appears.
pub fn parse_facet_list(text: &str, n_vertices: Option<usize>) -> Result<SimplicialComplex, ComplexError> {
    let mut facets = Vec::new();
    let mut top = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut facet = VertexSet::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| ComplexError::Parse {
                line: lineno + 1,
                message: format!("`{tok}` is not a vertex index"),
            })?;
            if v >= MAX_VERTICES {
                return Err(ComplexError::Parse {
                    line: lineno + 1,
                    message: format!("vertex {v} exceeds the limit of {MAX_VERTICES} vertices"),
                });
            }
            if facet.contains(v) {
                return Err(ComplexError::Parse {
                    line: lineno + 1,
                    message: format!("vertex {v} repeated"),
                });
            }
            facet = facet.with(v);
            top = top.max(v + 1);
        }
        facets.push(facet);
    }
    SimplicialComplex::new(n_vertices.unwrap_or(top), facets)
}

pub fn format_facet_list(complex: &SimplicialComplex) -> String {
    let mut out = format!("# {} vertices\n", complex.n_vertices());
    for facet in complex.facets() {
        let verts: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", verts.join(" "));
    }
    out
}
