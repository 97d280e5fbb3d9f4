//! JSON file formats for matroids and adjoint maps.
//!
//! A matroid file holds either a bases list or a matrix whose columns are the
//! elements:
//!
//! ```json
//! {"name": "U_{2,3}", "n": 3, "bases": [[0,1],[0,2],[1,2]]}
//! {"name": "Fano", "n": 7, "field": {"prime": 2}, "matrix": [[1,0,1,0,1,0,1], ...]}
//! {"n": 3, "field": "rational", "matrix": [["1","0","1/2"], ...]}
//! ```
//!
//! An adjoint file embeds its source (inline, or a catalog name) and target,
//! repeats the source hyperplane order, and lists one `{"flat", "image"}` entry
//! per flat of the source.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::adjoint::AdjointMap;
use crate::catalog;
use crate::error::{AdjointError, MatroidError};
use crate::matroid::Matroid;
use crate::repr::{FieldKind, Representation};
use crate::set::ElementSet;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid file: {0}")]
    Schema(String),
    #[error("unknown catalog matroid {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Adjoint(#[from] AdjointError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Prime { prime: u64 },
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Value>>>,
}

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

fn integer_entry(v: &Value) -> Result<i64, FormatError> {
    match v {
        Value::Number(x) => x.as_i64().ok_or_else(|| schema(format!("entry {x} is not an integer"))),
        Value::String(s) => s.trim().parse().map_err(|_| schema(format!("entry {s:?} is not an integer"))),
        other => Err(schema(format!("entry {other} is not an integer"))),
    }
}

fn rational_entry(v: &Value) -> Result<BigRational, FormatError> {
    let text = match v {
        Value::Number(x) if x.is_i64() => x.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(schema(format!("entry {other} is not a rational string"))),
    };
    BigRational::from_str(&text).map_err(|e| schema(format!("entry {text:?}: {e}")))
}

impl MatroidFile {
    pub fn into_matroid(self) -> Result<Matroid, FormatError> {
        let matroid = match (self.bases, self.field, self.matrix) {
            (Some(bases), None, None) => Matroid::from_basis_lists(self.n, &bases)?,
            (None, Some(field), Some(matrix)) => {
                if let Some((i, row)) = matrix.iter().enumerate().find(|(_, r)| r.len() != self.n) {
                    return Err(schema(format!("matrix row {i} has {} entries but n = {}", row.len(), self.n)));
                }
                let rep = match field {
                    FieldSpec::Prime { prime } => {
                        let rows = matrix
                            .iter()
                            .map(|r| r.iter().map(integer_entry).collect::<Result<Vec<_>, _>>())
                            .collect::<Result<Vec<_>, _>>()?;
                        Representation::over_prime(prime, self.n, rows)?
                    }
                    FieldSpec::Named(name) if name == "rational" => {
                        let rows = matrix
                            .iter()
                            .map(|r| r.iter().map(rational_entry).collect::<Result<Vec<_>, _>>())
                            .collect::<Result<Vec<_>, _>>()?;
                        Representation::over_rationals(self.n, rows)?
                    }
                    FieldSpec::Named(other) => return Err(schema(format!("unknown field {other:?}"))),
                };
                Matroid::from_representation(rep)?
            }
            _ => return Err(schema("expected either \"bases\" or both \"field\" and \"matrix\"")),
        };
        Ok(match self.name {
            Some(name) => matroid.with_name(name),
            None => matroid,
        })
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        let name = m.name().map(str::to_string);
        match m.representation() {
            Some(rep) => {
                let (field, matrix) = match rep.field_kind() {
                    FieldKind::Prime(p) => (
                        FieldSpec::Prime { prime: p },
                        rep.entry_strings()
                            .into_iter()
                            .map(|r| r.into_iter().map(|x| Value::from(x.parse::<u64>().unwrap())).collect())
                            .collect(),
                    ),
                    FieldKind::Rational => (
                        FieldSpec::Named("rational".into()),
                        rep.entry_strings().into_iter().map(|r| r.into_iter().map(Value::from).collect()).collect(),
                    ),
                };
                MatroidFile { name, n: m.n(), bases: None, field: Some(field), matrix: Some(matrix) }
            }
            None => MatroidFile {
                name,
                n: m.n(),
                bases: Some(m.bases().iter().map(ElementSet::to_vec).collect()),
                field: None,
                matrix: None,
            },
        }
    }
}

/// Pretty JSON with arrays of scalars kept on one line, newline-terminated.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            let parts: Vec<String> = items.iter().map(|v| serde_json::to_string(v).expect("serializable")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&serde_json::to_string(k).expect("serializable"));
                out.push_str(": ");
                write_value(out, v, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("serializable")),
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid, FormatError> {
    serde_json::from_str::<MatroidFile>(text)?.into_matroid()
}

pub fn matroid_to_json(m: &Matroid) -> String {
    to_json_string(&MatroidFile::from_matroid(m))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SourceRef {
    Name(String),
    Inline(MatroidFile),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub flat: Vec<usize>,
    pub image: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjointFile {
    pub source: SourceRef,
    pub target: MatroidFile,
    pub hyperplane_order: Vec<Vec<usize>>,
    pub map: Vec<MapEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_labels: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_labels: Option<Vec<usize>>,
}

fn is_identity(labels: &[usize]) -> bool {
    labels.iter().enumerate().all(|(i, &l)| i == l)
}

impl AdjointFile {
    pub fn from_map(phi: &AdjointMap) -> Self {
        AdjointFile {
            source: SourceRef::Inline(MatroidFile::from_matroid(phi.source())),
            target: MatroidFile::from_matroid(phi.target()),
            hyperplane_order: phi.hyperplane_order().iter().map(ElementSet::to_vec).collect(),
            map: phi.entries().into_iter().map(|(f, img)| MapEntry { flat: f.to_vec(), image: img.to_vec() }).collect(),
            source_labels: (!is_identity(phi.source_labels())).then(|| phi.source_labels().to_vec()),
            target_labels: (!is_identity(phi.target_labels())).then(|| phi.target_labels().to_vec()),
        }
    }

    pub fn into_map(self) -> Result<AdjointMap, FormatError> {
        let source = match self.source {
            SourceRef::Name(name) => catalog::lookup(&name).ok_or(FormatError::UnknownName(name))?.matroid,
            SourceRef::Inline(file) => file.into_matroid()?,
        };
        let target = self.target.into_matroid()?;
        let mut table = BTreeMap::new();
        for entry in self.map {
            let flat = source.set(entry.flat)?;
            let image = target.set(entry.image)?;
            if table.insert(flat, image).is_some() {
                return Err(schema(format!("flat {flat} listed twice")));
            }
        }
        let source_labels = self.source_labels.unwrap_or_else(|| (0..source.n()).collect());
        let target_labels = self.target_labels.unwrap_or_else(|| (0..target.n()).collect());
        if source_labels.len() != source.n() || target_labels.len() != target.n() {
            return Err(schema("label lists do not match the ground-set sizes"));
        }
        let phi = AdjointMap::with_lineage(source, target, table, source_labels, target_labels)?;
        let declared = self.hyperplane_order.into_iter().map(|h| phi.source().set(h)).collect::<Result<Vec<_>, _>>()?;
        if declared != phi.hyperplane_order() {
            return Err(AdjointError::HyperplaneOrderDrift(format!(
                "file lists {} hyperplanes, recomputed order has {}{}",
                declared.len(),
                phi.hyperplane_order().len(),
                declared
                    .iter()
                    .zip(phi.hyperplane_order())
                    .position(|(a, b)| a != b)
                    .map(|i| format!("; first difference at position {i}"))
                    .unwrap_or_default()
            ))
            .into());
        }
        Ok(phi)
    }
}

pub fn parse_adjoint(text: &str) -> Result<AdjointMap, FormatError> {
    serde_json::from_str::<AdjointFile>(text)?.into_map()
}

pub fn adjoint_to_json(phi: &AdjointMap) -> String {
    to_json_string(&AdjointFile::from_map(phi))
}
