//! JSON interchange for quadratic Lie algebras.
//!
//! A file lists the basis labels, the brackets as sparse entries
//! `[i, j, k, coefficient]` over ordered index pairs `i < j` (the other
//! half follows by antisymmetry), the full form matrix, the field mode,
//! and optionally a designated generator triple. Scalars are exact
//! literals, `"n"` or `"p/q"`. Loading enforces the schema only; whether
//! the data satisfies the Jacobi identity or the form axioms is the
//! verifier's business, so a well-formed file describing a broken
//! algebra loads fine and fails checks later.

use crate::lie::LieAlgebra;
use crate::quad::{FieldMode, QuadraticLieAlgebra};
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::sl2::{LeviTriple, TripleKind};
use crate::Matrix;
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

/// A schema violation or filesystem failure. Distinct from check
/// failures: these mean the input could not be understood at all.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("basis lists {found} labels but dim is {dim}")]
    BasisLength { dim: usize, found: usize },
    #[error("bracket entry {index}: {reason}")]
    Bracket { index: usize, reason: String },
    #[error("bad scalar {text:?} in {place}: {reason}")]
    Scalar {
        place: String,
        text: String,
        reason: String,
    },
    #[error("form row {row} has {cols} entries, expected a {dim} x {dim} matrix")]
    FormShape { dim: usize, row: usize, cols: usize },
    #[error("designated triple: {0}")]
    Levi(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LeviDoc {
    kind: TripleKind,
    vectors: [Vec<String>; 3],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<(usize, usize, usize, String)>,
    form: Vec<Vec<String>>,
    mode: FieldMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    levi: Option<LeviDoc>,
    /// Accepted for forward compatibility and ignored.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    embeddings: Option<serde_json::Value>,
}

fn scalar_at(place: String, text: &str) -> Result<Scalar, IoError> {
    parse_scalar(text).map_err(|e| IoError::Scalar {
        place,
        text: text.to_string(),
        reason: e.to_string(),
    })
}

fn to_document(q: &QuadraticLieAlgebra) -> AlgebraDoc {
    let dim = q.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (k, c) in q.lie.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    brackets.push((i, j, k, format_scalar(c)));
                }
            }
        }
    }
    let form = (0..dim)
        .map(|i| (0..dim).map(|j| format_scalar(q.form.at(i, j))).collect())
        .collect();
    let levi = q.levi.as_ref().map(|t| LeviDoc {
        kind: t.kind,
        vectors: [
            t.vectors[0].iter().map(format_scalar).collect(),
            t.vectors[1].iter().map(format_scalar).collect(),
            t.vectors[2].iter().map(format_scalar).collect(),
        ],
    });
    AlgebraDoc {
        name: q.lie.name().to_string(),
        dim,
        basis: q.lie.labels().to_vec(),
        brackets,
        form,
        mode: q.mode,
        levi,
        embeddings: None,
    }
}

fn from_document(doc: AlgebraDoc) -> Result<QuadraticLieAlgebra, IoError> {
    let dim = doc.dim;
    if doc.basis.len() != dim {
        return Err(IoError::BasisLength {
            dim,
            found: doc.basis.len(),
        });
    }
    let mut grouped: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (index, (i, j, k, text)) in doc.brackets.iter().enumerate() {
        if i >= j {
            return Err(IoError::Bracket {
                index,
                reason: format!("indices ({i}, {j}) must satisfy i < j"),
            });
        }
        if *j >= dim || *k >= dim {
            return Err(IoError::Bracket {
                index,
                reason: format!("indices ({i}, {j}, {k}) exceed dim {dim}"),
            });
        }
        if let Some(first) = seen.insert((*i, *j, *k), index) {
            return Err(IoError::Bracket {
                index,
                reason: format!("duplicates entry {first} for ({i}, {j}, {k})"),
            });
        }
        let c = scalar_at(format!("bracket entry {index}"), text)?;
        grouped.entry((*i, *j)).or_default().push((*k, c));
    }
    let entries: Vec<(usize, usize, Vec<(usize, Scalar)>)> = grouped
        .into_iter()
        .map(|((i, j), terms)| (i, j, terms))
        .collect();
    let lie = LieAlgebra::from_brackets(doc.name, doc.basis, &entries);
    if doc.form.len() != dim {
        return Err(IoError::FormShape {
            dim,
            row: doc.form.len(),
            cols: 0,
        });
    }
    let mut form = Matrix::zeros(dim, dim);
    for (i, row) in doc.form.iter().enumerate() {
        if row.len() != dim {
            return Err(IoError::FormShape {
                dim,
                row: i,
                cols: row.len(),
            });
        }
        for (j, text) in row.iter().enumerate() {
            *form.at_mut(i, j) = scalar_at(format!("form[{i}][{j}]"), text)?;
        }
    }
    let mut q = QuadraticLieAlgebra::new(lie, form, doc.mode);
    if let Some(levi) = doc.levi {
        let mut vectors: [Vec<Scalar>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (slot, coords) in levi.vectors.iter().enumerate() {
            if coords.len() != dim {
                return Err(IoError::Levi(format!(
                    "vector {slot} has {} coordinates, expected {dim}",
                    coords.len()
                )));
            }
            vectors[slot] = coords
                .iter()
                .map(|t| scalar_at(format!("triple vector {slot}"), t))
                .collect::<Result<_, _>>()?;
        }
        q = q.with_levi(LeviTriple {
            kind: levi.kind,
            vectors,
        });
    }
    Ok(q)
}

/// Serializes to the interchange format, deterministically: fields in a
/// fixed order, bracket entries sorted by `(i, j, k)`.
pub fn to_json(q: &QuadraticLieAlgebra) -> String {
    let mut text = serde_json::to_string_pretty(&to_document(q)).expect("serialization");
    text.push('\n');
    text
}

/// Parses the interchange format. Schema errors only; run the validators
/// on the result to check the algebra itself.
pub fn from_json(text: &str) -> Result<QuadraticLieAlgebra, IoError> {
    from_document(serde_json::from_str(text)?)
}

/// Reads and parses a file.
pub fn read_file(path: impl AsRef<Path>) -> Result<QuadraticLieAlgebra, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

/// Serializes and writes a file.
pub fn write_file(path: impl AsRef<Path>, q: &QuadraticLieAlgebra) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, to_json(q)).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn catalogue_entries_round_trip() {
        for (id, mode) in [
            ("dx-vv", FieldMode::Real),
            ("gcheck-minus", FieldMode::Real),
            ("sl2xXY22", FieldMode::Closed),
            ("sl3", FieldMode::Closed),
        ] {
            let q = catalogue::build(id, mode).unwrap();
            let text = to_json(&q);
            let back = from_json(&text).unwrap();
            assert_eq!(back, q, "{id}");
            assert_eq!(to_json(&back), text, "{id} re-export differs");
        }
    }

    #[test]
    fn zero_denominator_is_a_schema_error() {
        let text = r#"{
            "name": "bad", "dim": 2, "basis": ["a", "b"],
            "brackets": [[0, 1, 0, "1/0"]],
            "form": [["1", "0"], ["0", "1"]],
            "mode": "real"
        }"#;
        match from_json(text) {
            Err(IoError::Scalar { text, .. }) => assert_eq!(text, "1/0"),
            other => panic!("expected scalar error, got {other:?}"),
        }
    }

    #[test]
    fn bad_bracket_indices_are_schema_errors() {
        let base = |brackets: &str| {
            format!(
                r#"{{"name": "bad", "dim": 2, "basis": ["a", "b"],
                     "brackets": {brackets},
                     "form": [["1", "0"], ["0", "1"]],
                     "mode": "closed"}}"#
            )
        };
        for brackets in [
            "[[1, 0, 0, \"1\"]]",
            "[[0, 0, 0, \"1\"]]",
            "[[0, 2, 0, \"1\"]]",
            "[[0, 1, 5, \"1\"]]",
            "[[0, 1, 0, \"1\"], [0, 1, 0, \"2\"]]",
        ] {
            assert!(
                matches!(from_json(&base(brackets)), Err(IoError::Bracket { .. })),
                "{brackets}"
            );
        }
    }

    #[test]
    fn unknown_fields_and_bad_modes_are_schema_errors() {
        let unknown = r#"{
            "name": "x", "dim": 1, "basis": ["a"], "brackets": [],
            "form": [["1"]], "mode": "real", "bracketz": []
        }"#;
        assert!(matches!(from_json(unknown), Err(IoError::Json(_))));
        let bad_mode = r#"{
            "name": "x", "dim": 1, "basis": ["a"], "brackets": [],
            "form": [["1"]], "mode": "quaternionic"
        }"#;
        assert!(matches!(from_json(bad_mode), Err(IoError::Json(_))));
    }

    #[test]
    fn embeddings_are_accepted_and_ignored() {
        let text = r#"{
            "name": "x", "dim": 1, "basis": ["a"], "brackets": [],
            "form": [["1"]], "mode": "real",
            "embeddings": {"anything": [1, 2, 3]}
        }"#;
        let q = from_json(text).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn broken_jacobi_loads_and_fails_validation_later() {
        let text = r#"{
            "name": "broken", "dim": 3, "basis": ["a", "b", "c"],
            "brackets": [[0, 1, 2, "1"], [0, 2, 0, "1"], [1, 2, 1, "1"]],
            "form": [["0","0","1"],["0","1","0"],["1","0","0"]],
            "mode": "closed"
        }"#;
        let q = from_json(text).unwrap();
        assert!(!q.lie.validate().is_empty());
    }

    #[test]
    fn form_shape_is_checked() {
        let text = r#"{
            "name": "x", "dim": 2, "basis": ["a", "b"], "brackets": [],
            "form": [["1", "0"], ["0"]], "mode": "real"
        }"#;
        assert!(matches!(from_json(text), Err(IoError::FormShape { .. })));
    }

    #[test]
    fn triple_vector_lengths_are_checked() {
        let text = r#"{
            "name": "x", "dim": 2, "basis": ["a", "b"], "brackets": [],
            "form": [["1", "0"], ["0", "1"]], "mode": "real",
            "levi": {"kind": "split", "vectors": [["1"], ["0", "1"], ["0", "1"]]}
        }"#;
        assert!(matches!(from_json(text), Err(IoError::Levi(_))));
    }
}
