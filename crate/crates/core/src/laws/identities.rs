use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LawReport, ReportBuilder, Witness, BASIS_EXHAUSTIVE};
use crate::algebra::{Algebra, Coeffs};
use crate::element::Element;
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `(x,y,z) = -(z,y,x)`
    Flexible,
    /// `[[x,y],z] + [[z,x],y] + [[y,z],x] = 0`
    LieAdmissible,
    /// `(x,x,y) = (y,x,x) = 0` and `(x,y,z) + (y,x,z) = 0`
    Alternative,
    /// `N(xy) = N(x) N(y)` with `N(x) = x conj(x)`
    Composition,
}

impl Law {
    pub const ALL: [Law; 4] = [
        Law::Flexible,
        Law::LieAdmissible,
        Law::Alternative,
        Law::Composition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::Flexible => "flexible",
            Law::LieAdmissible => "lie_admissible",
            Law::Alternative => "alternative",
            Law::Composition => "composition",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Law::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| format!("unknown law {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub witness_limit: usize,
    /// Number of random pairs for the composition law.
    pub composition_samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            witness_limit: super::WITNESS_LIMIT,
            composition_samples: 1000,
            seed: 0x5eed,
        }
    }
}

pub fn check_identity(alg: &Arc<Algebra>, law: Law) -> LawReport {
    check_identity_with(alg, law, &CheckOptions::default())
}

pub fn check_identity_with(alg: &Arc<Algebra>, law: Law, opts: &CheckOptions) -> LawReport {
    let builder = ReportBuilder::new(law.id(), alg.name()).limit(opts.witness_limit);
    match law {
        Law::Flexible => flexible(alg, builder.note(BASIS_EXHAUSTIVE)),
        Law::LieAdmissible => lie_admissible(alg, builder.note(BASIS_EXHAUSTIVE)),
        Law::Alternative => alternative(alg, builder.note(BASIS_EXHAUSTIVE)),
        Law::Composition => composition(alg, builder, opts),
    }
}

fn sub(x: &[GaussianRational], y: &[GaussianRational]) -> Coeffs {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn add(x: &[GaussianRational], y: &[GaussianRational]) -> Coeffs {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn is_zero(x: &[GaussianRational]) -> bool {
    x.iter().all(Zero::is_zero)
}

fn associator(alg: &Algebra, a: usize, b: usize, c: usize) -> Coeffs {
    let left = alg.mul_coeffs(alg.product(a, b), &alg.basis(c));
    let right = alg.mul_coeffs(&alg.basis(a), alg.product(b, c));
    sub(&left, &right)
}

fn commutator(alg: &Algebra, x: &[GaussianRational], y: &[GaussianRational]) -> Coeffs {
    sub(&alg.mul_coeffs(x, y), &alg.mul_coeffs(y, x))
}

fn labels(alg: &Algebra, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| alg.label(i).to_string()).collect()
}

fn flexible(alg: &Algebra, mut report: ReportBuilder) -> LawReport {
    let n = alg.dim();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = associator(alg, a, b, c);
                let rhs: Coeffs = associator(alg, c, b, a).iter().map(|x| -x).collect();
                report.check(lhs == rhs, vec![a, b, c], || Witness {
                    inputs: labels(alg, &[a, b, c]),
                    lhs: alg.format_coeffs(&lhs),
                    rhs: alg.format_coeffs(&rhs),
                });
            }
        }
    }
    report.finish()
}

fn lie_admissible(alg: &Algebra, mut report: ReportBuilder) -> LawReport {
    let n = alg.dim();
    let brackets: Vec<Vec<Coeffs>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| sub(alg.product(a, b), alg.product(b, a)))
                .collect()
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let jacobi = add(
                    &add(
                        &commutator(alg, &brackets[a][b], &alg.basis(c)),
                        &commutator(alg, &brackets[c][a], &alg.basis(b)),
                    ),
                    &commutator(alg, &brackets[b][c], &alg.basis(a)),
                );
                report.check(is_zero(&jacobi), vec![a, b, c], || Witness {
                    inputs: labels(alg, &[a, b, c]),
                    lhs: alg.format_coeffs(&jacobi),
                    rhs: "0".into(),
                });
            }
        }
    }
    report.finish()
}

fn alternative(alg: &Algebra, mut report: ReportBuilder) -> LawReport {
    let n = alg.dim();
    // key prefix keeps the three families apart in the witness ordering
    for a in 0..n {
        for b in 0..n {
            let left = associator(alg, a, a, b);
            report.check(is_zero(&left), vec![0, a, b], || Witness {
                inputs: labels(alg, &[a, a, b]),
                lhs: alg.format_coeffs(&left),
                rhs: "0".into(),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let right = associator(alg, b, a, a);
            report.check(is_zero(&right), vec![1, a, b], || Witness {
                inputs: labels(alg, &[b, a, a]),
                lhs: alg.format_coeffs(&right),
                rhs: "0".into(),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lin = add(&associator(alg, a, b, c), &associator(alg, b, a, c));
                report.check(is_zero(&lin), vec![2, a, b, c], || Witness {
                    inputs: labels(alg, &[a, b, c]),
                    lhs: alg.format_coeffs(&lin),
                    rhs: "0".into(),
                });
            }
        }
    }
    report.finish()
}

/// A pseudo-random element with coefficients `p/q + (r/s) I`, `|p|, |r| <= 3`,
/// `1 <= q, s <= 3`.
pub fn random_element(alg: &Arc<Algebra>, rng: &mut impl Rng) -> Element {
    let coeffs = (0..alg.dim())
        .map(|_| {
            GaussianRational::from_parts(
                rng.gen_range(-3..=3),
                rng.gen_range(1..=3),
                rng.gen_range(-3..=3),
                rng.gen_range(1..=3),
            )
            .expect("nonzero denominators")
        })
        .collect();
    Element::new(alg, coeffs).expect("length matches")
}

fn composition(alg: &Arc<Algebra>, mut report: ReportBuilder, opts: &CheckOptions) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for k in 0..opts.composition_samples {
        let x = random_element(alg, &mut rng);
        let y = random_element(alg, &mut rng);
        let xy = x.mul(&y).expect("same algebra");
        let lhs = xy.norm();
        let rhs = x.norm().mul(&y.norm()).expect("same algebra");
        report.check(lhs == rhs, vec![k], || Witness {
            inputs: vec![x.to_string(), y.to_string()],
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let report = report.finish().with_note(format!(
        "{} random pairs, seed {}",
        opts.composition_samples, opts.seed
    ));
    if *alg.conjugation() != alg.default_conjugation() {
        report.with_note("derived convention: conjugation fixes more than the unit line")
    } else {
        report
    }
}
