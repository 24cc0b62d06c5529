//! JSON text format for algebras.
//!
//! ```json
//! {"basis":["e1","e2"],"brackets":[{"coeffs":{"2":"1"},"i":1,"j":2}],"dim":2,"name":"aff_r"}
//! ```
//!
//! Indices are 1-based, only pairs `i < j` with a nonzero bracket are written,
//! and coefficients are rational strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::rational::{format_rational, parse_rational, ParseRationalError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("bad basis index {0:?} (indices are 1-based)")]
    BadIndex(String),
    #[error("dim is {dim} but {labels} basis labels were given")]
    LabelCount { dim: usize, labels: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct AlgebraFile {
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
    dim: usize,
    #[serde(default)]
    name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct BracketEntry {
    coeffs: BTreeMap<String, String>,
    i: usize,
    j: usize,
}

fn index(raw: usize, dim: usize) -> Result<usize, FormatError> {
    if raw == 0 || raw > dim {
        Err(FormatError::BadIndex(raw.to_string()))
    } else {
        Ok(raw - 1)
    }
}

pub fn from_json(text: &str) -> Result<LieAlgebra, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let n = file.dim;
    let mut b = LieAlgebra::builder(file.name, n);
    if let Some(labels) = file.basis {
        if labels.len() != n {
            return Err(FormatError::LabelCount {
                dim: n,
                labels: labels.len(),
            });
        }
        b = b.labels(labels);
    }
    for e in file.brackets {
        let (i, j) = (index(e.i, n)?, index(e.j, n)?);
        let mut terms = Vec::with_capacity(e.coeffs.len());
        for (k, v) in &e.coeffs {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| FormatError::BadIndex(k.clone()))?;
            terms.push((index(k, n)?, parse_rational(v)?));
        }
        b = b.bracket(i, j, terms);
    }
    Ok(b.build()?)
}

fn to_file(g: &LieAlgebra) -> AlgebraFile {
    AlgebraFile {
        basis: Some(g.labels().to_vec()),
        brackets: g
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, terms)| BracketEntry {
                coeffs: terms
                    .iter()
                    .map(|(k, x)| ((k + 1).to_string(), format_rational(x)))
                    .collect(),
                i: i + 1,
                j: j + 1,
            })
            .collect(),
        dim: g.dim(),
        name: g.name().to_string(),
    }
}

/// Compact canonical form.
pub fn to_json(g: &LieAlgebra) -> String {
    serde_json::to_string(&to_file(g)).expect("algebra serializes")
}

pub fn to_json_pretty(g: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&to_file(g)).expect("algebra serializes")
}

/// The algebra as a JSON value, for embedding in reports.
pub fn to_value(g: &LieAlgebra) -> serde_json::Value {
    serde_json::to_value(to_file(g)).expect("algebra serializes")
}
