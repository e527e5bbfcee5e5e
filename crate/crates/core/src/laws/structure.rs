use std::sync::Arc;

use num_traits::Zero;

use super::{LawReport, ReportBuilder, Witness};
use crate::algebra::Algebra;
use crate::element::Element;
use crate::scalar::GaussianRational;

/// Passes iff the span of the listed basis elements contains the unit and is
/// closed under multiplication. A witness shows a product and its projection
/// onto the span.
pub fn check_subalgebra(alg: &Arc<Algebra>, indices: &[usize]) -> LawReport {
    let mut report = ReportBuilder::new("subalgebra_closure", alg.name());
    let valid: Vec<usize> = indices.iter().copied().filter(|&i| i < alg.dim()).collect();
    let project = |v: &[GaussianRational]| -> Vec<GaussianRational> {
        v.iter()
            .enumerate()
            .map(|(k, c)| {
                if valid.contains(&k) {
                    c.clone()
                } else {
                    GaussianRational::zero()
                }
            })
            .collect()
    };
    for &bad in indices.iter().filter(|&&i| i >= alg.dim()) {
        report.fail(vec![usize::MAX, bad], || Witness {
            inputs: vec![format!("#{bad}")],
            lhs: "out of range".into(),
            rhs: format!("dim {}", alg.dim()),
        });
    }
    let unit = alg.unit();
    report.check(alg.escaping(unit, &valid).is_empty(), vec![], || Witness {
        inputs: vec!["unit".into()],
        lhs: alg.format_coeffs(unit),
        rhs: alg.format_coeffs(&project(unit)),
    });
    for &a in &valid {
        for &b in &valid {
            let prod = alg.product(a, b);
            report.check(alg.escaping(prod, &valid).is_empty(), vec![a, b], || {
                Witness {
                    inputs: vec![alg.label(a).to_string(), alg.label(b).to_string()],
                    lhs: alg.format_coeffs(prod),
                    rhs: alg.format_coeffs(&project(prod)),
                }
            });
        }
    }
    report.finish()
}

/// Sums of `1..=depth` distinct basis elements with coefficients `+-1`, the
/// first coefficient positive. Negating either factor does not change whether
/// a product vanishes, so this covers every signed sum up to sign.
fn signed_sums(dim: usize, depth: usize) -> Vec<Vec<(usize, i64)>> {
    fn extend(
        dim: usize,
        depth: usize,
        start: usize,
        current: &mut Vec<(usize, i64)>,
        out: &mut Vec<Vec<(usize, i64)>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == depth {
            return;
        }
        for i in start..dim {
            let signs: &[i64] = if current.is_empty() { &[1] } else { &[1, -1] };
            for &s in signs {
                current.push((i, s));
                extend(dim, depth, i + 1, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(dim, depth, 0, &mut Vec::new(), &mut out);
    out.sort_by_key(|terms| terms.len());
    out
}

/// Enumerates products `x y` of signed sums of at most `depth` basis elements
/// and reports every pair with `x y = 0`. Passes iff none is found.
pub fn zero_divisor_scan(alg: &Arc<Algebra>, depth: usize) -> LawReport {
    let candidates: Vec<Element> = signed_sums(alg.dim(), depth)
        .into_iter()
        .map(|terms| {
            let mut coeffs = vec![GaussianRational::zero(); alg.dim()];
            for (i, s) in terms {
                coeffs[i] = GaussianRational::from_int(s);
            }
            Element::new(alg, coeffs).expect("length matches")
        })
        .collect();
    let mut report = ReportBuilder::new("zero_divisors", alg.name()).note(format!(
        "signed sums of at most {depth} basis elements, up to overall sign"
    ));
    for (i, x) in candidates.iter().enumerate() {
        for (j, y) in candidates.iter().enumerate() {
            let xy = alg.mul_coeffs(x.coeffs(), y.coeffs());
            let zero = xy.iter().all(Zero::is_zero);
            report.check(!zero, vec![i, j], || Witness {
                inputs: vec![x.to_string(), y.to_string()],
                lhs: "0".into(),
                rhs: "0".into(),
            });
        }
    }
    report.finish()
}
