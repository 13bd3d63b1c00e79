//! Complex documents: a plain facet-per-line text format and a JSON
//! envelope, auto-detected by the first non-blank byte.
//!
//! Text format: one facet per line as whitespace-separated positive
//! integers; everything after `#` on a line is a comment; blank lines are
//! skipped. Parsing takes the subset closure of the facets.
//!
//! JSON format:
//! `{"format": "simplex-forge/1", "facets": [[1,2,3], ...], "meta": {...}}`.
//! A document may carry `"elements"` instead of `"facets"`, in which case
//! the list is taken literally and must already be subset-closed.

use serde::{Deserialize, Serialize};
use simplex_forge::{Simplex, SimplicialComplex};

use crate::{CliError, Result};

pub const FORMAT_TAG: &str = "simplex-forge/1";

/// The JSON envelope. Field order is not significant.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Map<String, serde_json::Value>>,
}

impl ComplexDocument {
    pub fn from_facets(facets: Vec<Vec<u32>>) -> Self {
        Self {
            format: FORMAT_TAG.to_string(),
            facets: Some(facets),
            elements: None,
            meta: None,
        }
    }

    pub fn into_complex(self) -> Result<SimplicialComplex> {
        if self.format != FORMAT_TAG {
            return Err(CliError::Document(format!(
                "unsupported format tag {:?}, expected {FORMAT_TAG:?}",
                self.format
            )));
        }
        match (self.facets, self.elements) {
            (Some(facets), None) => SimplicialComplex::from_facets(facets)
                .map_err(|e| CliError::Document(e.to_string())),
            (None, Some(elements)) => {
                let simplices = elements
                    .into_iter()
                    .map(Simplex::new)
                    .collect::<simplex_forge::Result<Vec<_>>>()
                    .map_err(|e| CliError::Document(e.to_string()))?;
                SimplicialComplex::from_elements(simplices)
                    .map_err(|e| CliError::Document(e.to_string()))
            }
            (Some(_), Some(_)) => Err(CliError::Document(
                "a document carries either \"facets\" or \"elements\", not both".into(),
            )),
            (None, None) => Err(CliError::Document(
                "a document needs a \"facets\" or \"elements\" list".into(),
            )),
        }
    }
}

/// Parses either format, deciding by the first non-whitespace byte.
pub fn parse_complex(input: &str) -> Result<SimplicialComplex> {
    match input.trim_start().as_bytes().first() {
        Some(b'{') => parse_json(input),
        _ => parse_facet_text(input),
    }
}

pub fn parse_json(input: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDocument =
        serde_json::from_str(input).map_err(|e| CliError::Document(e.to_string()))?;
    doc.into_complex()
}

pub fn parse_facet_text(input: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut facet = Vec::new();
        for tok in line.split_whitespace() {
            let label: u32 = tok.parse().map_err(|_| CliError::Parse {
                line: i + 1,
                message: format!("expected a positive integer label, got {tok:?}"),
            })?;
            if label == 0 {
                return Err(CliError::Parse {
                    line: i + 1,
                    message: "vertex labels must be positive".into(),
                });
            }
            facet.push(label);
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(facets).map_err(|e| CliError::Document(e.to_string()))
}

/// Serializes the complex as a JSON document over its maximal faces, in
/// canonical order. Parsing the output reproduces the complex exactly.
pub fn serialize_complex(g: &SimplicialComplex) -> String {
    let facets: Vec<Vec<u32>> = g.facets().iter().map(|s| s.vertices().to_vec()).collect();
    let doc = ComplexDocument::from_facets(facets);
    serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
}

/// Facet-per-line text form of the complex.
pub fn to_facet_text(g: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in g.facets() {
        let labels: Vec<String> = facet.vertices().iter().map(u32::to_string).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_examples() {
        let g = parse_complex("1 2 3\n").unwrap();
        assert_eq!(g.len(), 7);

        let c4 = parse_complex("1 2\n2 3\n3 4\n4 1\n").unwrap();
        assert_eq!(c4.len(), 8);
        assert_eq!(c4.euler_characteristic(), 0);

        let commented = parse_complex("# a triangle\n1 2 3  # the facet\n\n").unwrap();
        assert_eq!(commented.len(), 7);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = parse_complex("1 2\nx 3\n").unwrap_err();
        match err {
            CliError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_complex("1 2\n0 3\n").unwrap_err();
        match err {
            CliError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn json_roundtrip() {
        let g = parse_complex("1 2\n2 3\n3 4\n4 1\n").unwrap();
        let json = serialize_complex(&g);
        let back = parse_complex(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_literal_elements_must_be_closed() {
        let ok = parse_complex(r#"{"format":"simplex-forge/1","elements":[[1],[2],[1,2]]}"#);
        assert_eq!(ok.unwrap().len(), 3);
        let err = parse_complex(r#"{"format":"simplex-forge/1","elements":[[1,2]]}"#);
        assert!(err.is_err());
    }

    #[test]
    fn json_rejects_bad_envelopes() {
        assert!(parse_complex(r#"{"format":"other/9","facets":[[1]]}"#).is_err());
        assert!(parse_complex(r#"{"format":"simplex-forge/1"}"#).is_err());
        assert!(parse_complex(
            r#"{"format":"simplex-forge/1","facets":[[1]],"elements":[[1]]}"#
        )
        .is_err());
    }

    #[test]
    fn facet_text_roundtrip() {
        let g = parse_complex("1 2 3\n3 4\n5\n").unwrap();
        let text = to_facet_text(&g);
        let back = parse_complex(&text).unwrap();
        assert_eq!(back, g);
    }
}
