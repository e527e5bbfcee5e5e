//! JSON algebra definition files.
//!
//! ```text
//! {"conjugation": ..., "dim": 8, "labels": [...], "name": "octonion",
//!  "table": [[[[re_num, re_den, im_num, im_den], ...], ...], ...], "unit": 0}
//! ```
//!
//! `table[a][b]` lists the `dim` coordinates of `b_a * b_b`. `unit` is a basis
//! index, or a coordinate vector when the unit is not a basis element.
//! `conjugation` is present only when it differs from the default one.
//! Keys are sorted and the text ends with a newline, so exporting a loaded
//! file reproduces it byte for byte.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{make_algebra, Algebra, AlgebraError, AlgebraSpec, Unit};
use crate::scalar::{GaussianRational, ScalarError};

type Parts = [i64; 4];

#[derive(Debug, Error)]
pub enum FileError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("dim is {dim} but {labels} labels are given")]
    DimMismatch { dim: usize, labels: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum UnitField {
    Index(usize),
    Vector(Vec<Parts>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conjugation: Option<Vec<Vec<Parts>>>,
    dim: usize,
    labels: Vec<String>,
    name: String,
    table: Vec<Vec<Vec<Parts>>>,
    unit: UnitField,
}

fn to_parts(v: &[GaussianRational]) -> Result<Vec<Parts>, ScalarError> {
    v.iter().map(GaussianRational::to_parts).collect()
}

fn from_parts(v: &[Parts]) -> Result<Vec<GaussianRational>, ScalarError> {
    v.iter()
        .map(|&[a, b, c, d]| GaussianRational::from_parts(a, b, c, d))
        .collect()
}

pub fn algebra_to_json(alg: &Algebra) -> Result<String, FileError> {
    let unit = match alg.unit_index() {
        Some(i) => UnitField::Index(i),
        None => UnitField::Vector(to_parts(alg.unit())?),
    };
    let conjugation = if *alg.conjugation() == alg.default_conjugation() {
        None
    } else {
        Some(
            alg.conjugation()
                .iter()
                .map(|r| to_parts(r))
                .collect::<Result<_, _>>()?,
        )
    };
    let table = alg
        .table()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| to_parts(e))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let file = AlgebraFile {
        conjugation,
        dim: alg.dim(),
        labels: alg.labels().to_vec(),
        name: alg.name().to_string(),
        table,
        unit,
    };
    let mut text = serde_json::to_string(&file)?;
    text.push('\n');
    Ok(text)
}

pub fn algebra_from_json(text: &str) -> Result<Arc<Algebra>, FileError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    if file.dim != file.labels.len() {
        return Err(FileError::DimMismatch {
            dim: file.dim,
            labels: file.labels.len(),
        });
    }
    let unit = match file.unit {
        UnitField::Index(i) => Unit::Index(i),
        UnitField::Vector(v) => Unit::Vector(from_parts(&v)?),
    };
    let table = file
        .table
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| from_parts(e))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let conjugation = file
        .conjugation
        .map(|c| {
            c.iter()
                .map(|r| from_parts(r))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(make_algebra(AlgebraSpec {
        name: file.name,
        labels: file.labels,
        unit,
        table,
        conjugation,
    })?)
}

pub fn export_algebra(alg: &Algebra, path: &Path) -> Result<(), FileError> {
    let text = algebra_to_json(alg)?;
    std::fs::write(path, text).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_algebra(path: &Path) -> Result<Arc<Algebra>, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    algebra_from_json(&text)
}
