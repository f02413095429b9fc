//! The complex file format: UTF-8 JSON with schema
//! `{name?, metadata?, maximal_simplices: [[int...]...]}`.
//!
//! Serialization is canonical — vertices ascending within each simplex,
//! simplexes sorted lexicographically, fixed key order, two-space indent,
//! trailing newline — so canonical documents round-trip byte-identically.

use serde::{Deserialize, Serialize};

use scx_core::SimplicialComplex;

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        self == &Metadata::default()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub maximal_simplices: Vec<Vec<u32>>,
}

/// Parses a complex document and builds the complex. Duplicate facets are
/// a validation error; malformed JSON (including negative vertex ids)
/// reports line and column.
pub fn parse_complex(bytes: &[u8]) -> Result<(ComplexFile, SimplicialComplex), CliError> {
    let file: ComplexFile = serde_json::from_slice(bytes).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut seen = std::collections::BTreeSet::new();
    for s in &file.maximal_simplices {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        if !seen.insert(sorted) {
            return Err(CliError::Validation(format!("duplicate facet {s:?}")));
        }
    }
    let complex = SimplicialComplex::build(&file.maximal_simplices)?;
    Ok((file, complex))
}

/// Two-space-indent JSON with leaf (depth >= 2) arrays kept on one line,
/// so a simplex is one row of the document.
struct CanonicalFormatter {
    level: usize,
    array_depth: usize,
    has_value: bool,
}

impl CanonicalFormatter {
    fn new() -> Self {
        CanonicalFormatter {
            level: 0,
            array_depth: 0,
            has_value: false,
        }
    }

    fn newline_indent<W: ?Sized + std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        w.write_all(b"\n")?;
        for _ in 0..self.level {
            w.write_all(b"  ")?;
        }
        Ok(())
    }
}

impl serde_json::ser::Formatter for CanonicalFormatter {
    fn begin_array<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.array_depth += 1;
        self.has_value = false;
        if self.array_depth < 2 {
            self.level += 1;
        }
        w.write_all(b"[")
    }

    fn end_array<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        let inline = self.array_depth >= 2;
        self.array_depth -= 1;
        if !inline {
            self.level -= 1;
            if self.has_value {
                self.newline_indent(w)?;
            }
        }
        w.write_all(b"]")
    }

    fn begin_array_value<W: ?Sized + std::io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        if self.array_depth >= 2 {
            if !first {
                w.write_all(b", ")?;
            }
            Ok(())
        } else {
            if !first {
                w.write_all(b",")?;
            }
            self.newline_indent(w)
        }
    }

    fn end_array_value<W: ?Sized + std::io::Write>(&mut self, _w: &mut W) -> std::io::Result<()> {
        self.has_value = true;
        Ok(())
    }

    fn begin_object<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.level += 1;
        self.has_value = false;
        w.write_all(b"{")
    }

    fn end_object<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.level -= 1;
        if self.has_value {
            self.newline_indent(w)?;
        }
        w.write_all(b"}")
    }

    fn begin_object_key<W: ?Sized + std::io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        if !first {
            w.write_all(b",")?;
        }
        self.newline_indent(w)
    }

    fn begin_object_value<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        w.write_all(b": ")
    }

    fn end_object_value<W: ?Sized + std::io::Write>(&mut self, _w: &mut W) -> std::io::Result<()> {
        self.has_value = true;
        Ok(())
    }
}

/// Canonical serialization of a complex with optional provenance.
pub fn serialize_complex(
    x: &SimplicialComplex,
    name: Option<&str>,
    metadata: Option<Metadata>,
) -> Vec<u8> {
    let mut maximal: Vec<Vec<u32>> = x
        .maximal_simplices()
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    maximal.sort();
    let file = ComplexFile {
        name: name.map(str::to_owned),
        metadata: metadata.filter(|m| !m.is_empty()),
        maximal_simplices: maximal,
    };
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, CanonicalFormatter::new());
    serde::Serialize::serialize(&file, &mut ser).expect("serializable");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_parses() {
        let (_, x) = parse_complex(br#"{"maximal_simplices":[[0,1,2]]}"#).unwrap();
        assert_eq!(x.counts(), vec![3, 3, 1]);
    }

    #[test]
    fn negative_vertex_is_a_parse_error_with_position() {
        let err = parse_complex(br#"{"maximal_simplices":[[0,-1]]}"#).unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => {
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_facets_are_rejected() {
        let err = parse_complex(br#"{"maximal_simplices":[[0,1,2],[2,1,0]]}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        let x = scx_core::generators::rp2();
        let bytes = serialize_complex(&x, Some("rp2"), None);
        let (file, parsed) = parse_complex(&bytes).unwrap();
        assert_eq!(file.name.as_deref(), Some("rp2"));
        assert_eq!(parsed, x);
        assert_eq!(serialize_complex(&parsed, Some("rp2"), None), bytes);
        assert_eq!(file.maximal_simplices.len(), 10);
    }
}
