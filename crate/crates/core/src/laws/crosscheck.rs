//! Cross-derivations of built-in tables from the octonion table.
//!
//! The split-octonion table is recomputed from the octonions by a complex
//! change of basis. The sedenion table is matched against `C (x) O`, where `O`
//! is either the octonion subalgebra of the sedenions or the built-in
//! octonions (whose triples differ, so an isomorphism is composed in).

use std::sync::Arc;

use num_traits::Zero;

use super::isomorphism::{search_sign_maps, signed_isomorphisms, SignedBasisMap};
use super::{compare_algebras, LawReport};
use crate::algebra::{change_basis, complexify, subalgebra, Algebra, AlgebraError};
use crate::builtins::{BuiltinAlgebra, SPLIT_OCTONION_LABELS};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

/// Rows are `u0, u0c, u1, u2, u3, u1c, u2c, u3c` in the octonion basis
/// `1, e1..e7`:
/// `u0 = (1 + I e7)/2`, `u0c = (1 - I e7)/2`,
/// `u_k = (e_k + I e_{k+3})/2`, `u_kc = (e_k - I e_{k+3})/2`.
pub fn app_basis_matrix() -> Matrix {
    let half = GaussianRational::ratio(1, 2);
    let half_i = &half * &GaussianRational::i();
    let mut m = vec![vec![GaussianRational::zero(); 8]; 8];
    m[0][0] = half.clone();
    m[0][7] = half_i.clone();
    m[1][0] = half.clone();
    m[1][7] = -&half_i;
    for k in 1..=3 {
        m[1 + k][k] = half.clone();
        m[1 + k][k + 3] = half_i.clone();
        m[4 + k][k] = half.clone();
        m[4 + k][k + 3] = -&half_i;
    }
    m
}

/// The built-in octonions re-expressed in the basis of [`app_basis_matrix`].
pub fn split_octonion_via_basis_change() -> Result<Arc<Algebra>, AlgebraError> {
    change_basis(
        &BuiltinAlgebra::Octonion.algebra(),
        &app_basis_matrix(),
        SPLIT_OCTONION_LABELS
            .iter()
            .map(|s| s.to_string())
            .collect(),
        "split_octonion_from_octonion",
    )
}

/// Outcome of matching the sedenion table against complexified octonions.
///
/// Sedenion indices are `1, i1..i7, i0, eps1..eps7`; `C (x) O` indices are
/// `1, e1..e7, j, je1..je7`. Every search fixes `1 -> 1`, `i0 -> j`,
/// `i_n -> o(i_n)` and `eps_n -> +-j o(i_n)` for an octonion map `o`, and
/// tries all `2^7` sign choices for the `eps_n`.
#[derive(Debug, Clone)]
pub struct SedenionCrossCheck {
    /// Sign maps found with `o(i_n) = e_n` into the built-in octonions.
    pub literal_maps: Vec<SignedBasisMap>,
    /// Sign maps found with `O` the subalgebra `{1, i1..i7}` of the sedenions
    /// and `o` the identity.
    pub subalgebra_maps: Vec<SignedBasisMap>,
    /// First signed isomorphism from `{1, i1..i7}` onto the built-in
    /// octonions, in backtracking order.
    pub octonion_isomorphism: SignedBasisMap,
    /// Sign maps found with `o` = `octonion_isomorphism`.
    pub composed_maps: Vec<SignedBasisMap>,
    /// Entry-by-entry comparison of the sedenion table and `C (x) O` (built-in
    /// octonions) under the first composed map.
    pub report: LawReport,
}

const EPS_FIRST: usize = 9;

fn lift(octonion_map: &SignedBasisMap) -> SignedBasisMap {
    let mut pairs: Vec<(GaussianRational, usize)> = Vec::with_capacity(16);
    for k in 0..8 {
        pairs.push((octonion_map.signs[k].clone(), octonion_map.targets[k]));
    }
    pairs[0] = (GaussianRational::from_int(1), 0);
    pairs.push((GaussianRational::from_int(1), 8));
    for n in 1..8 {
        pairs.push((octonion_map.signs[n].clone(), 8 + octonion_map.targets[n]));
    }
    let (signs, targets) = pairs.into_iter().unzip();
    SignedBasisMap { targets, signs }
}

pub fn sedenion_complex_octonion() -> Result<SedenionCrossCheck, AlgebraError> {
    let sed = BuiltinAlgebra::Sedenion.algebra();
    let oct = BuiltinAlgebra::Octonion.algebra();
    let c_oct = complexify(&oct, "complex_octonion")?;
    let free: Vec<usize> = (EPS_FIRST..16).collect();

    let literal_maps = search_sign_maps(&sed, &c_oct, &lift(&SignedBasisMap::identity(8)), &free)?;

    let sub_oct = subalgebra(&sed, &(0..8).collect::<Vec<_>>(), "sedenion_octonion")?;
    let c_sub = complexify(&sub_oct, "complex_sedenion_octonion")?;
    let subalgebra_maps =
        search_sign_maps(&sed, &c_sub, &lift(&SignedBasisMap::identity(8)), &free)?;

    let octonion_isomorphism = signed_isomorphisms(&sub_oct, &oct)?
        .into_iter()
        .next()
        .ok_or_else(|| AlgebraError::NotClosed("no octonion isomorphism".into()))?;
    let composed_maps = search_sign_maps(&sed, &c_oct, &lift(&octonion_isomorphism), &free)?;

    let report_map = composed_maps
        .first()
        .cloned()
        .unwrap_or_else(|| lift(&octonion_isomorphism));
    let mut report = compare_algebras(&sed, &c_oct, &report_map)?
        .with_note(format!("{} of 128 sign choices match", composed_maps.len()));
    for line in report_map.describe(&sed, &c_oct) {
        report = report.with_note(line);
    }
    Ok(SedenionCrossCheck {
        literal_maps,
        subalgebra_maps,
        octonion_isomorphism,
        composed_maps,
        report,
    })
}
