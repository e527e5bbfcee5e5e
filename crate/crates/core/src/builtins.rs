//! The five built-in algebras.
//!
//! * `octonion`: generated from seven oriented unit triples, total
//!   antisymmetry, and `e_A^2 = -1`.
//! * `split_octonion`: the table on `u0, u0c, u1..u3, u1c..u3c`, written out
//!   rule by rule (`c` marks the starred element).
//! * `sedenion`: parsed from `data/sedenion_table.txt` (16 basis elements
//!   `1, i1..i7, i0, eps1..eps7`), with a conjugation that fixes `1` and `i0`.
//! * `quaternion` and `biquaternion`: subalgebras of the sedenions spanned by
//!   `{1, i1, i2, i3}` and `{1, i1, i2, i3, i0, eps1, eps2, eps3}`.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::{
    basis_vector, make_algebra, subalgebra, Algebra, AlgebraError, AlgebraSpec, Unit,
};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

/// Oriented triples `(A, B, C)` with `e_A e_B = e_C`.
pub const OCTONION_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [5, 1, 6],
    [6, 2, 4],
    [4, 3, 5],
    [4, 7, 1],
    [6, 7, 3],
    [5, 7, 2],
];

pub const SPLIT_OCTONION_LABELS: [&str; 8] = ["u0", "u0c", "u1", "u2", "u3", "u1c", "u2c", "u3c"];

pub const SEDENION_LABELS: [&str; 16] = [
    "1", "i1", "i2", "i3", "i4", "i5", "i6", "i7", "i0", "eps1", "eps2", "eps3", "eps4", "eps5",
    "eps6", "eps7",
];

const SEDENION_TABLE: &str = include_str!("../data/sedenion_table.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinAlgebra {
    Quaternion,
    Octonion,
    SplitOctonion,
    Biquaternion,
    Sedenion,
}

impl BuiltinAlgebra {
    pub const ALL: [BuiltinAlgebra; 5] = [
        BuiltinAlgebra::Quaternion,
        BuiltinAlgebra::Octonion,
        BuiltinAlgebra::SplitOctonion,
        BuiltinAlgebra::Biquaternion,
        BuiltinAlgebra::Sedenion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinAlgebra::Quaternion => "quaternion",
            BuiltinAlgebra::Octonion => "octonion",
            BuiltinAlgebra::SplitOctonion => "split_octonion",
            BuiltinAlgebra::Biquaternion => "biquaternion",
            BuiltinAlgebra::Sedenion => "sedenion",
        }
    }

    /// The shared instance; repeated calls return the same `Arc`.
    pub fn algebra(self) -> Arc<Algebra> {
        static CACHE: [OnceLock<Arc<Algebra>>; 5] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        let slot = &CACHE[self as usize];
        Arc::clone(slot.get_or_init(|| self.build().expect("built-in table is valid")))
    }

    fn build(self) -> Result<Arc<Algebra>, AlgebraError> {
        match self {
            BuiltinAlgebra::Octonion => octonion(),
            BuiltinAlgebra::SplitOctonion => split_octonion(),
            BuiltinAlgebra::Sedenion => sedenion(),
            BuiltinAlgebra::Quaternion => subalgebra(
                &BuiltinAlgebra::Sedenion.algebra(),
                &[0, 1, 2, 3],
                "quaternion",
            ),
            BuiltinAlgebra::Biquaternion => subalgebra(
                &BuiltinAlgebra::Sedenion.algebra(),
                &[0, 1, 2, 3, 8, 9, 10, 11],
                "biquaternion",
            ),
        }
    }
}

impl FromStr for BuiltinAlgebra {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinAlgebra::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| AlgebraError::UnknownAlgebra(s.to_string()))
    }
}

impl fmt::Display for BuiltinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn builtin_algebra(name: &str) -> Result<Arc<Algebra>, AlgebraError> {
    Ok(name.parse::<BuiltinAlgebra>()?.algebra())
}

fn signed(dim: usize, sign: i64, index: usize) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); dim];
    v[index] = GaussianRational::from_int(sign);
    v
}

#[allow(clippy::needless_range_loop)]
fn octonion() -> Result<Arc<Algebra>, AlgebraError> {
    let mut table = vec![vec![None; 8]; 8];
    for a in 0..8 {
        table[0][a] = Some(basis_vector(8, a));
        table[a][0] = Some(basis_vector(8, a));
    }
    for a in 1..8 {
        table[a][a] = Some(signed(8, -1, 0));
    }
    for [a, b, c] in OCTONION_TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            table[x][y] = Some(signed(8, 1, z));
            table[y][x] = Some(signed(8, -1, z));
        }
    }
    let table = table
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| e.expect("triples cover every pair"))
                .collect()
        })
        .collect();
    let mut labels = vec!["1".to_string()];
    labels.extend((1..8).map(|i| format!("e{i}")));
    make_algebra(AlgebraSpec {
        name: "octonion".into(),
        labels,
        unit: Unit::Index(0),
        table,
        conjugation: None,
    })
}

fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1,
        _ => 0,
    }
}

#[derive(Clone, Copy)]
enum SplitBasis {
    U0,
    U0c,
    U(usize),
    Uc(usize),
}

impl SplitBasis {
    fn index(self) -> usize {
        match self {
            SplitBasis::U0 => 0,
            SplitBasis::U0c => 1,
            SplitBasis::U(i) => 1 + i,
            SplitBasis::Uc(i) => 4 + i,
        }
    }

    fn from_index(k: usize) -> Self {
        match k {
            0 => SplitBasis::U0,
            1 => SplitBasis::U0c,
            2..=4 => SplitBasis::U(k - 1),
            _ => SplitBasis::Uc(k - 4),
        }
    }
}

fn split_product(a: SplitBasis, b: SplitBasis) -> Vec<GaussianRational> {
    use SplitBasis::*;
    let zero = vec![GaussianRational::zero(); 8];
    let one = |x: SplitBasis| basis_vector(8, x.index());
    let eps = |i, j, ctor: fn(usize) -> SplitBasis| {
        let mut v = vec![GaussianRational::zero(); 8];
        for k in 1..=3 {
            let s = levi_civita(i, j, k);
            if s != 0 {
                v[ctor(k).index()] = GaussianRational::from_int(s);
            }
        }
        v
    };
    let minus_delta = |i: usize, j: usize, target: SplitBasis| {
        if i == j {
            signed(8, -1, target.index())
        } else {
            vec![GaussianRational::zero(); 8]
        }
    };
    match (a, b) {
        (U(i), U(j)) => eps(i, j, Uc),
        (Uc(i), Uc(j)) => eps(i, j, U),
        (U(i), Uc(j)) => minus_delta(i, j, U0),
        (Uc(i), U(j)) => minus_delta(i, j, U0c),
        (U(_), U0) => zero,
        (U(i), U0c) => one(U(i)),
        (Uc(i), U0) => one(Uc(i)),
        (Uc(_), U0c) => zero,
        (U0, U(i)) => one(U(i)),
        (U0c, U(_)) => zero,
        (U0, Uc(_)) => zero,
        (U0c, Uc(i)) => one(Uc(i)),
        (U0, U0) => one(U0),
        (U0c, U0c) => one(U0c),
        (U0, U0c) | (U0c, U0) => zero,
    }
}

fn split_octonion() -> Result<Arc<Algebra>, AlgebraError> {
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| split_product(SplitBasis::from_index(a), SplitBasis::from_index(b)))
                .collect()
        })
        .collect();
    let mut unit = vec![GaussianRational::zero(); 8];
    unit[0] = GaussianRational::one();
    unit[1] = GaussianRational::one();
    make_algebra(AlgebraSpec {
        name: "split_octonion".into(),
        labels: SPLIT_OCTONION_LABELS
            .iter()
            .map(|s| s.to_string())
            .collect(),
        unit: Unit::Vector(unit),
        table,
        conjugation: None,
    })
}

/// Parses a signed basis label such as `-eps3` against `labels`.
fn parse_cell(cell: &str, labels: &[&str]) -> Option<(i64, usize)> {
    let (sign, name) = match cell.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, cell),
    };
    labels.iter().position(|l| *l == name).map(|i| (sign, i))
}

/// Parses the whitespace-separated table format of `data/sedenion_table.txt`.
pub fn parse_signed_table(
    text: &str,
    labels: &[&str],
) -> Result<Vec<Vec<(i64, usize)>>, AlgebraError> {
    let dim = labels.len();
    let mut rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect::<Vec<_>>());
    let header = rows
        .next()
        .ok_or_else(|| AlgebraError::MalformedTable("empty table file".into()))?;
    if header.len() != dim + 1 || header[1..] != *labels {
        return Err(AlgebraError::MalformedTable(
            "header does not list the basis in order".into(),
        ));
    }
    let mut table = Vec::with_capacity(dim);
    for (a, row) in rows.enumerate() {
        if a >= dim || row.len() != dim + 1 || row[0] != labels[a] {
            return Err(AlgebraError::MalformedTable(format!(
                "unexpected row {}",
                row.join(" ")
            )));
        }
        let cells = row[1..]
            .iter()
            .map(|c| {
                parse_cell(c, labels)
                    .ok_or_else(|| AlgebraError::MalformedTable(format!("bad cell {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        table.push(cells);
    }
    if table.len() != dim {
        return Err(AlgebraError::MalformedTable(format!(
            "{} rows, expected {dim}",
            table.len()
        )));
    }
    Ok(table)
}

/// The sedenion table exactly as stored in the data file.
pub fn sedenion_signed_table() -> Vec<Vec<(i64, usize)>> {
    parse_signed_table(SEDENION_TABLE, &SEDENION_LABELS).expect("bundled sedenion table parses")
}

fn sedenion() -> Result<Arc<Algebra>, AlgebraError> {
    let table = sedenion_signed_table()
        .into_iter()
        .map(|row| row.into_iter().map(|(s, i)| signed(16, s, i)).collect())
        .collect();
    // conjugation is linear over the central unit i0
    let conjugation: Matrix = (0..16)
        .map(|a| signed(16, if a == 0 || a == 8 { 1 } else { -1 }, a))
        .collect();
    make_algebra(AlgebraSpec {
        name: "sedenion".into(),
        labels: SEDENION_LABELS.iter().map(|s| s.to_string()).collect(),
        unit: Unit::Index(0),
        table,
        conjugation: Some(conjugation),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;

    fn el(alg: &Arc<Algebra>, label: &str) -> Element {
        Element::from_label(alg, label).unwrap()
    }

    #[test]
    fn builtins_are_cached() {
        for b in BuiltinAlgebra::ALL {
            assert!(Arc::ptr_eq(&b.algebra(), &b.algebra()));
            assert_eq!(b.algebra().name(), b.name());
        }
        assert!(builtin_algebra("cayley_dickson").is_err());
    }

    #[test]
    fn dimensions() {
        let dims: Vec<_> = BuiltinAlgebra::ALL
            .iter()
            .map(|b| b.algebra().dim())
            .collect();
        assert_eq!(dims, vec![4, 8, 8, 8, 16]);
    }

    #[test]
    fn octonion_triple_516() {
        let o = BuiltinAlgebra::Octonion.algebra();
        assert_eq!(el(&o, "e5").mul(&el(&o, "e1")).unwrap(), el(&o, "e6"));
    }

    #[test]
    fn split_octonion_products() {
        let s = BuiltinAlgebra::SplitOctonion.algebra();
        assert_eq!(
            el(&s, "u1").mul(&el(&s, "u1c")).unwrap(),
            el(&s, "u0").neg()
        );
        assert_eq!(el(&s, "u0").mul(&el(&s, "u0")).unwrap(), el(&s, "u0"));
        assert!(el(&s, "u0").mul(&el(&s, "u0c")).unwrap().is_zero());
        assert!(el(&s, "u0c").mul(&el(&s, "u0")).unwrap().is_zero());
        assert_eq!(s.unit_index(), None);
    }

    #[test]
    fn sedenion_cells() {
        let s = BuiltinAlgebra::Sedenion.algebra();
        assert_eq!(
            el(&s, "eps4").mul(&el(&s, "eps5")).unwrap(),
            el(&s, "i1").neg()
        );
        assert_eq!(
            el(&s, "i0").mul(&el(&s, "i0")).unwrap(),
            Element::unit(&s).neg()
        );
    }

    #[test]
    fn subalgebra_labels() {
        let q = BuiltinAlgebra::Quaternion.algebra();
        assert_eq!(q.labels(), ["1", "i1", "i2", "i3"]);
        let b = BuiltinAlgebra::Biquaternion.algebra();
        assert_eq!(
            b.labels(),
            ["1", "i1", "i2", "i3", "i0", "eps1", "eps2", "eps3"]
        );
        assert_eq!(b.unit_index(), Some(0));
    }

    #[test]
    fn malformed_table_files() {
        let labels = ["1", "a"];
        assert!(parse_signed_table("", &labels).is_err());
        assert!(parse_signed_table("* 1 a\n1 1 a\na a b\n", &labels).is_err());
        assert!(parse_signed_table("* a 1\n", &labels).is_err());
        let ok = parse_signed_table("* 1 a\n1 1 a\na a -1\n", &labels).unwrap();
        assert_eq!(ok[1][1], (-1, 0));
    }
}
