//! Finite-dimensional algebras given by structure constants.
//!
//! An [`Algebra`] stores, for every ordered pair of basis elements, the
//! coordinate vector of their product. Nothing here assumes associativity,
//! commutativity, or that the unit is itself a basis element: the
//! split-octonion basis `u0, u0c, ...` has unit `u0 + u0c`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{self, Matrix};
use crate::scalar::{GaussianRational, ScalarError};

/// Coordinates of an element with respect to a basis.
pub type Coeffs = Vec<GaussianRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an algebra needs at least one basis element")]
    EmptyBasis,
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("identity law fails: {side} product of the unit with {label} is {found}")]
    IdentityLaw {
        label: String,
        side: &'static str,
        found: String,
    },
    #[error("unit index {0} is out of range")]
    UnitOutOfRange(usize),
    #[error("elements belong to different algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },
    #[error("coefficient vector has length {found}, algebra {algebra} has dimension {expected}")]
    WrongLength {
        algebra: String,
        expected: usize,
        found: usize,
    },
    #[error("basis change matrix is singular or not {0}x{0}")]
    SingularBasisChange(usize),
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("unknown basis label {label:?} in {algebra}")]
    UnknownLabel { algebra: String, label: String },
    #[error("span of the chosen basis elements is not closed: {0}")]
    NotClosed(String),
    #[error("x*conj(x) is not a multiple of the unit: component {label} is {value}")]
    NonScalarForm { label: String, value: String },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// How the unit element is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unit {
    /// The unit is the basis element with this index.
    Index(usize),
    /// The unit is a linear combination of basis elements.
    Vector(Coeffs),
}

/// Input to [`make_algebra`].
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: Unit,
    /// `table[a][b]` holds the coordinates of `b_a * b_b`.
    pub table: Vec<Vec<Coeffs>>,
    /// Matrix of the conjugation map, row `a` holding the image of `b_a`.
    /// `None` selects [`Algebra::default_conjugation`].
    pub conjugation: Option<Matrix>,
}

pub struct Algebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<Coeffs>>,
    sparse: Vec<Vec<Vec<(usize, GaussianRational)>>>,
    unit: Coeffs,
    unit_index: Option<usize>,
    conjugation: Matrix,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.labels == other.labels
            && self.table == other.table
            && self.unit == other.unit
            && self.conjugation == other.conjugation
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

pub(crate) fn basis_vector(dim: usize, i: usize) -> Coeffs {
    let mut v = vec![GaussianRational::zero(); dim];
    v[i] = GaussianRational::one();
    v
}

fn as_basis_index(v: &[GaussianRational]) -> Option<usize> {
    let mut nonzero = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    match (nonzero.next(), nonzero.next()) {
        (Some((i, c)), None) if c.is_one() => Some(i),
        _ => None,
    }
}

/// Validates a table specification and builds an immutable algebra.
pub fn make_algebra(spec: AlgebraSpec) -> Result<Arc<Algebra>, AlgebraError> {
    let dim = spec.labels.len();
    if dim == 0 {
        return Err(AlgebraError::EmptyBasis);
    }
    let mut seen = HashSet::new();
    for l in &spec.labels {
        if !seen.insert(l.as_str()) {
            return Err(AlgebraError::DuplicateLabel(l.clone()));
        }
    }
    if spec.table.len() != dim {
        return Err(AlgebraError::MalformedTable(format!(
            "{} rows for {dim} basis elements",
            spec.table.len()
        )));
    }
    for (a, row) in spec.table.iter().enumerate() {
        if row.len() != dim {
            return Err(AlgebraError::MalformedTable(format!(
                "row {a} has {} entries, expected {dim}",
                row.len()
            )));
        }
        for (b, entry) in row.iter().enumerate() {
            if entry.len() != dim {
                return Err(AlgebraError::MalformedTable(format!(
                    "product ({a},{b}) has {} coordinates, expected {dim}",
                    entry.len()
                )));
            }
        }
    }
    let unit = match spec.unit {
        Unit::Index(i) if i < dim => basis_vector(dim, i),
        Unit::Index(i) => return Err(AlgebraError::UnitOutOfRange(i)),
        Unit::Vector(v) if v.len() == dim => v,
        Unit::Vector(v) => {
            return Err(AlgebraError::MalformedTable(format!(
                "unit vector has {} coordinates, expected {dim}",
                v.len()
            )))
        }
    };
    let unit_index = as_basis_index(&unit);
    let sparse = sparsify(&spec.table);
    let mut alg = Algebra {
        name: spec.name,
        labels: spec.labels,
        table: spec.table,
        sparse,
        unit,
        unit_index,
        conjugation: Vec::new(),
    };
    alg.check_identity_law()?;
    alg.conjugation = match spec.conjugation {
        Some(c) => {
            if c.len() != dim || c.iter().any(|r| r.len() != dim) {
                return Err(AlgebraError::MalformedTable(format!(
                    "conjugation must be {dim}x{dim}"
                )));
            }
            c
        }
        None => alg.default_conjugation(),
    };
    Ok(Arc::new(alg))
}

fn sparsify(table: &[Vec<Coeffs>]) -> Vec<Vec<Vec<(usize, GaussianRational)>>> {
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| {
                    entry
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect()
                })
                .collect()
        })
        .collect()
}

impl Algebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[GaussianRational] {
        &self.unit
    }

    /// Index of the unit when it is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        self.unit_index
    }

    /// Coordinates of `b_a * b_b`.
    pub fn product(&self, a: usize, b: usize) -> &[GaussianRational] {
        &self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<Coeffs>] {
        &self.table
    }

    pub fn conjugation(&self) -> &Matrix {
        &self.conjugation
    }

    pub(crate) fn basis(&self, i: usize) -> Coeffs {
        basis_vector(self.dim(), i)
    }

    /// Bilinear extension of the table.
    pub fn mul_coeffs(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Coeffs {
        let dim = self.dim();
        let mut out = vec![GaussianRational::zero(); dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let entry = &self.sparse[a][b];
                if entry.is_empty() {
                    continue;
                }
                let xy = xa * yb;
                for (k, c) in entry {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn conjugate_coeffs(&self, x: &[GaussianRational]) -> Coeffs {
        linalg::vec_mul(x, &self.conjugation)
    }

    /// Conjugation used when none is given explicitly.
    ///
    /// With a basis unit `b_u`, every other basis element is negated. Otherwise
    /// `conj(x) = t(x) 1 - x` with the normalized trace
    /// `t(x) = 2 tr(L_x) / dim`, where `L_x` is left multiplication by `x`.
    /// Both agree on octonion-like bases, and the trace form is invariant
    /// under a change of basis.
    pub fn default_conjugation(&self) -> Matrix {
        let dim = self.dim();
        if let Some(u) = self.unit_index {
            return (0..dim)
                .map(|a| {
                    let mut row = vec![GaussianRational::zero(); dim];
                    row[a] = if a == u {
                        GaussianRational::one()
                    } else {
                        -GaussianRational::one()
                    };
                    row
                })
                .collect();
        }
        let scale = GaussianRational::ratio(2, dim as i64);
        (0..dim)
            .map(|a| {
                let mut trace = GaussianRational::zero();
                for b in 0..dim {
                    trace += &self.table[a][b][b];
                }
                let t = &trace * &scale;
                let mut row: Coeffs = self.unit.iter().map(|u| &t * u).collect();
                row[a] -= &GaussianRational::one();
                row
            })
            .collect()
    }

    fn check_identity_law(&self) -> Result<(), AlgebraError> {
        for b in 0..self.dim() {
            let e = self.basis(b);
            let left = self.mul_coeffs(&self.unit, &e);
            if left != e {
                return Err(AlgebraError::IdentityLaw {
                    label: self.labels[b].clone(),
                    side: "left",
                    found: self.format_coeffs(&left),
                });
            }
            let right = self.mul_coeffs(&e, &self.unit);
            if right != e {
                return Err(AlgebraError::IdentityLaw {
                    label: self.labels[b].clone(),
                    side: "right",
                    found: self.format_coeffs(&right),
                });
            }
        }
        Ok(())
    }

    /// Human-readable linear combination, e.g. `e1 - 2*e3 + (1/2)*e5`.
    pub fn format_coeffs(&self, x: &[GaussianRational]) -> String {
        crate::text::format_terms(x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
            |(i, c)| {
                let factor = if Some(i) == self.unit_index {
                    None
                } else {
                    Some(self.labels[i].as_str())
                };
                (c, factor)
            },
        ))
    }

    /// A copy of this algebra under a different name.
    pub fn renamed(&self, name: &str) -> Arc<Algebra> {
        Arc::new(Algebra {
            name: name.to_string(),
            labels: self.labels.clone(),
            table: self.table.clone(),
            sparse: self.sparse.clone(),
            unit: self.unit.clone(),
            unit_index: self.unit_index,
            conjugation: self.conjugation.clone(),
        })
    }

    /// Indices of basis elements (other than those listed) whose coefficient in
    /// `v` is nonzero.
    pub(crate) fn escaping(&self, v: &[GaussianRational], allowed: &[usize]) -> Vec<usize> {
        v.iter()
            .enumerate()
            .filter(|(k, c)| !c.is_zero() && !allowed.contains(k))
            .map(|(k, _)| k)
            .collect()
    }
}

/// Re-expresses `alg` in the basis `f_a = sum_b m[a][b] b_b`.
pub fn change_basis(
    alg: &Algebra,
    m: &Matrix,
    new_labels: Vec<String>,
    name: &str,
) -> Result<Arc<Algebra>, AlgebraError> {
    let dim = alg.dim();
    if m.len() != dim || new_labels.len() != dim {
        return Err(AlgebraError::SingularBasisChange(dim));
    }
    let inv = linalg::inverse(m).ok_or(AlgebraError::SingularBasisChange(dim))?;
    let table = (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| linalg::vec_mul(&alg.mul_coeffs(&m[a], &m[b]), &inv))
                .collect()
        })
        .collect();
    let unit = linalg::vec_mul(&alg.unit, &inv);
    let conjugation = linalg::mat_mul(&linalg::mat_mul(m, &alg.conjugation), &inv);
    make_algebra(AlgebraSpec {
        name: name.to_string(),
        labels: new_labels,
        unit: Unit::Vector(unit),
        table,
        conjugation: Some(conjugation),
    })
}

/// The subalgebra spanned by the listed basis elements (in the given order).
pub fn subalgebra(
    alg: &Algebra,
    indices: &[usize],
    name: &str,
) -> Result<Arc<Algebra>, AlgebraError> {
    let dim = alg.dim();
    if let Some(&bad) = indices.iter().find(|&&i| i >= dim) {
        return Err(AlgebraError::MalformedTable(format!(
            "basis index {bad} out of range"
        )));
    }
    let restrict = |v: &[GaussianRational], what: &str| -> Result<Coeffs, AlgebraError> {
        let escaped = alg.escaping(v, indices);
        if let Some(&k) = escaped.first() {
            return Err(AlgebraError::NotClosed(format!(
                "{what} has a {} component",
                alg.labels[k]
            )));
        }
        Ok(indices.iter().map(|&i| v[i].clone()).collect())
    };
    let mut table = Vec::with_capacity(indices.len());
    for &a in indices {
        let mut row = Vec::with_capacity(indices.len());
        for &b in indices {
            let what = format!("{}*{}", alg.labels[a], alg.labels[b]);
            row.push(restrict(&alg.table[a][b], &what)?);
        }
        table.push(row);
    }
    let unit = restrict(&alg.unit, "the unit")?;
    let conjugation = indices
        .iter()
        .map(|&a| restrict(&alg.conjugation[a], &format!("conj({})", alg.labels[a])))
        .collect::<Result<Matrix, _>>()?;
    make_algebra(AlgebraSpec {
        name: name.to_string(),
        labels: indices.iter().map(|&i| alg.labels[i].clone()).collect(),
        unit: Unit::Vector(unit),
        table,
        conjugation: Some(conjugation),
    })
}

/// `C (x) alg` over the scalar ring, with a second, commuting imaginary unit
/// `j` (`j^2 = -1`) distinct from the scalar `I`.
///
/// Basis order is `1 (x) b_0.., j (x) b_0..`; labels of the second half are
/// `j` for the unit and `j<label>` otherwise. Conjugation is `j`-linear.
pub fn complexify(alg: &Algebra, name: &str) -> Result<Arc<Algebra>, AlgebraError> {
    let n = alg.dim();
    let dim = 2 * n;
    let mut labels = alg.labels.clone();
    for (i, l) in alg.labels.iter().enumerate() {
        labels.push(if Some(i) == alg.unit_index {
            "j".to_string()
        } else {
            format!("j{l}")
        });
    }
    let mut table = vec![vec![vec![GaussianRational::zero(); dim]; dim]; dim];
    for ca in 0..2 {
        for cb in 0..2 {
            // j*j = -1
            let (sign, part) = match ca + cb {
                2 => (-GaussianRational::one(), 0),
                s => (GaussianRational::one(), s),
            };
            for a in 0..n {
                for b in 0..n {
                    let entry = &mut table[ca * n + a][cb * n + b];
                    for (k, c) in &alg.sparse[a][b] {
                        entry[part * n + k] = &sign * c;
                    }
                }
            }
        }
    }
    let mut unit = alg.unit.clone();
    unit.extend(std::iter::repeat_n(GaussianRational::zero(), n));
    let mut conjugation = vec![vec![GaussianRational::zero(); dim]; dim];
    for c in 0..2 {
        for a in 0..n {
            for b in 0..n {
                conjugation[c * n + a][c * n + b] = alg.conjugation[a][b].clone();
            }
        }
    }
    make_algebra(AlgebraSpec {
        name: name.to_string(),
        labels,
        unit: Unit::Vector(unit),
        table,
        conjugation: Some(conjugation),
    })
}
