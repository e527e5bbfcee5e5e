use std::sync::Arc;

use num_traits::{One, Zero};

use super::{LawReport, ReportBuilder, Witness};
use crate::algebra::{Algebra, AlgebraError, Coeffs};
use crate::scalar::GaussianRational;

/// A linear map sending basis element `k` of the source to
/// `signs[k] * b_{targets[k]}` of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedBasisMap {
    pub targets: Vec<usize>,
    pub signs: Vec<GaussianRational>,
}

impl SignedBasisMap {
    pub fn identity(dim: usize) -> Self {
        SignedBasisMap {
            targets: (0..dim).collect(),
            signs: vec![GaussianRational::one(); dim],
        }
    }

    /// Builds a map from `(sign, target)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let (signs, targets) = pairs
            .into_iter()
            .map(|(s, t)| (GaussianRational::from_int(s), t))
            .unzip();
        SignedBasisMap { targets, signs }
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    /// Image of a coordinate vector.
    pub fn apply(&self, x: &[GaussianRational], target_dim: usize) -> Coeffs {
        let mut out = vec![GaussianRational::zero(); target_dim];
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.targets[k]] += &(c * &self.signs[k]);
            }
        }
        out
    }

    /// `source_label -> image` lines, one per basis element.
    pub fn describe(&self, source: &Algebra, target: &Algebra) -> Vec<String> {
        (0..self.len())
            .map(|k| {
                let mut image = vec![GaussianRational::zero(); target.dim()];
                image[self.targets[k]] = self.signs[k].clone();
                format!("{} -> {}", source.label(k), target.format_coeffs(&image))
            })
            .collect()
    }

    fn check_shape(&self, a: &Algebra, b: &Algebra) -> Result<(), AlgebraError> {
        if a.dim() != b.dim() {
            return Err(AlgebraError::DimensionMismatch(a.dim(), b.dim()));
        }
        if self.len() != a.dim() || self.signs.len() != a.dim() {
            return Err(AlgebraError::DimensionMismatch(a.dim(), self.len()));
        }
        if let Some(&t) = self.targets.iter().find(|&&t| t >= b.dim()) {
            return Err(AlgebraError::DimensionMismatch(b.dim(), t));
        }
        Ok(())
    }
}

fn product_agrees(
    a: &Algebra,
    b: &Algebra,
    map: &SignedBasisMap,
    x: usize,
    y: usize,
) -> (bool, Coeffs, Coeffs) {
    let lhs = map.apply(a.product(x, y), b.dim());
    let scale = &map.signs[x] * &map.signs[y];
    let rhs: Coeffs = b
        .product(map.targets[x], map.targets[y])
        .iter()
        .map(|c| c * &scale)
        .collect();
    (lhs == rhs, lhs, rhs)
}

/// Passes iff `map(x y) = map(x) map(y)` for every pair of basis elements of
/// `a`, i.e. the tables agree entry by entry under the map.
pub fn compare_algebras(
    a: &Arc<Algebra>,
    b: &Arc<Algebra>,
    map: &SignedBasisMap,
) -> Result<LawReport, AlgebraError> {
    map.check_shape(a, b)?;
    let mut report = ReportBuilder::new("table_match", format!("{} -> {}", a.name(), b.name()));
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let (ok, lhs, rhs) = product_agrees(a, b, map, x, y);
            report.check(ok, vec![x, y], || Witness {
                inputs: vec![a.label(x).to_string(), a.label(y).to_string()],
                lhs: b.format_coeffs(&lhs),
                rhs: b.format_coeffs(&rhs),
            });
        }
    }
    Ok(report.finish())
}

fn is_homomorphism(a: &Algebra, b: &Algebra, map: &SignedBasisMap) -> bool {
    (0..a.dim()).all(|x| (0..a.dim()).all(|y| product_agrees(a, b, map, x, y).0))
}

/// Every map obtained from `base` by negating some subset of the images of
/// `free`, in order of the subset bitmask, that matches the tables. The search
/// covers all `2^free.len()` choices.
pub fn search_sign_maps(
    a: &Arc<Algebra>,
    b: &Arc<Algebra>,
    base: &SignedBasisMap,
    free: &[usize],
) -> Result<Vec<SignedBasisMap>, AlgebraError> {
    base.check_shape(a, b)?;
    assert!(free.len() < 32, "sign search over {} indices", free.len());
    let mut found = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut map = base.clone();
        for (bit, &k) in free.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                map.signs[k] = -&map.signs[k];
            }
        }
        if is_homomorphism(a, b, &map) {
            found.push(map);
        }
    }
    Ok(found)
}

/// All bijections `b_k -> +-b'_{pi(k)}` that carry the table of `a` onto the
/// table of `b`, found by backtracking over basis indices in order.
pub fn signed_isomorphisms(
    a: &Arc<Algebra>,
    b: &Arc<Algebra>,
) -> Result<Vec<SignedBasisMap>, AlgebraError> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimensionMismatch(a.dim(), b.dim()));
    }
    let n = a.dim();
    // pairs (x, y) become checkable once x, y and the support of x*y are all
    // assigned; bucket them by the largest index involved
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            let top = a
                .product(x, y)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, _)| k)
                .chain([x, y])
                .max()
                .expect("nonempty");
            checks[top].push((x, y));
        }
    }
    let mut state = Search {
        a,
        b,
        checks,
        map: SignedBasisMap::identity(n),
        used: vec![false; n],
        found: Vec::new(),
    };
    state.extend(0);
    Ok(state.found)
}

struct Search<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    checks: Vec<Vec<(usize, usize)>>,
    map: SignedBasisMap,
    used: Vec<bool>,
    found: Vec<SignedBasisMap>,
}

impl Search<'_> {
    fn extend(&mut self, k: usize) {
        let n = self.a.dim();
        if k == n {
            self.found.push(self.map.clone());
            return;
        }
        for t in 0..n {
            if self.used[t] {
                continue;
            }
            for s in [1, -1] {
                self.map.targets[k] = t;
                self.map.signs[k] = GaussianRational::from_int(s);
                let ok = self.checks[k]
                    .iter()
                    .all(|&(x, y)| product_agrees(self.a, self.b, &self.map, x, y).0);
                if ok {
                    self.used[t] = true;
                    self.extend(k + 1);
                    self.used[t] = false;
                }
            }
        }
    }
}
