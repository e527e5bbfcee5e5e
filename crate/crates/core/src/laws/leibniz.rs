use std::sync::Arc;

use serde::Serialize;

use super::{LawReport, ReportBuilder, Witness};
use crate::algebra::{Algebra, AlgebraError};
use crate::element::Element;

/// A set of basis indices of a named algebra, expected to span a subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubalgebraSpec {
    pub algebra: String,
    pub indices: Vec<usize>,
}

impl SubalgebraSpec {
    pub fn new(algebra: &Algebra, indices: &[usize]) -> Self {
        SubalgebraSpec {
            algebra: algebra.name().to_string(),
            indices: indices.to_vec(),
        }
    }

    /// Resolves basis labels of `algebra`.
    pub fn from_labels(algebra: &Algebra, labels: &[&str]) -> Result<Self, AlgebraError> {
        let indices = labels
            .iter()
            .map(|l| {
                algebra
                    .index_of(l)
                    .ok_or_else(|| AlgebraError::UnknownLabel {
                        algebra: algebra.name().to_string(),
                        label: l.to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubalgebraSpec::new(algebra, &indices))
    }

    /// Checks that the indices name basis elements of `alg`, that the unit lies
    /// in their span and that the span is closed under multiplication.
    pub fn validate(&self, alg: &Algebra) -> Result<(), AlgebraError> {
        if self.algebra != alg.name() {
            return Err(AlgebraError::AlgebraMismatch {
                left: self.algebra.clone(),
                right: alg.name().to_string(),
            });
        }
        crate::algebra::subalgebra(alg, &self.indices, "sub").map(|_| ())
    }
}

/// Checks `[ab; h1, h2] = a [b; h1, h2] + [a; h1, h2] b` for every ordered pair
/// of basis elements of `sub`.
pub fn check_leibniz(
    alg: &Arc<Algebra>,
    sub: &SubalgebraSpec,
    h1: &Element,
    h2: &Element,
) -> Result<LawReport, AlgebraError> {
    check_leibniz_family(alg, sub, &sub.indices, &[(h1.clone(), h2.clone())])
}

/// The Leibniz check for every `(h1, h2)` in `h_pairs` and every ordered pair
/// `(a, b)` drawn from `factors`, which must lie in `sub`.
///
/// Witness keys are `(pair index, a, b)`, so the ordering is deterministic.
pub fn check_leibniz_family(
    alg: &Arc<Algebra>,
    sub: &SubalgebraSpec,
    factors: &[usize],
    h_pairs: &[(Element, Element)],
) -> Result<LawReport, AlgebraError> {
    sub.validate(alg)?;
    if let Some(&bad) = factors.iter().find(|f| !sub.indices.contains(f)) {
        return Err(AlgebraError::NotClosed(format!(
            "factor {} is outside the subalgebra",
            alg.labels().get(bad).map_or("?", |s| s.as_str())
        )));
    }
    let mut report = ReportBuilder::new("leibniz", alg.name());
    let basis: Vec<Element> = factors.iter().map(|&i| Element::basis(alg, i)).collect();
    for (p, (h1, h2)) in h_pairs.iter().enumerate() {
        let brackets = basis
            .iter()
            .map(|a| a.nonassoc_commutator(h1, h2))
            .collect::<Result<Vec<_>, _>>()?;
        for (ia, a) in basis.iter().enumerate() {
            for (ib, b) in basis.iter().enumerate() {
                let lhs = a.mul(b)?.nonassoc_commutator(h1, h2)?;
                let rhs = a.mul(&brackets[ib])?.add(&brackets[ia].mul(b)?)?;
                report.check(lhs == rhs, vec![p, factors[ia], factors[ib]], || Witness {
                    inputs: vec![a.to_string(), b.to_string(), h1.to_string(), h2.to_string()],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(report.finish())
}
