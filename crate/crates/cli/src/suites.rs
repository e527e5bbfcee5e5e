//! Verification suites: law reports paired with their expected outcome.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nonassoc::laws::{
    check_identity, check_identity_with, check_leibniz_family, check_subalgebra, compare_algebras,
    sedenion_complex_octonion, split_octonion_via_basis_change, zero_divisor_scan, CheckOptions,
    Law, LawReport, SignedBasisMap, Status, SubalgebraSpec,
};
use nonassoc::operator::RewriteRules;
use nonassoc::operator::{example1_catalog, verify_example1};
use nonassoc::susy::{check_matrix_susy_algebra, check_matrix_susy_algebra_with, SusyControls};
use nonassoc::{Algebra, AlgebraError, BuiltinAlgebra, Element};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Example1,
    Example2,
    Example3,
    AppendixA,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Core,
        Suite::Example1,
        Suite::Example2,
        Suite::Example3,
        Suite::AppendixA,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Example1 => "example1",
            Suite::Example2 => "example2",
            Suite::Example3 => "example3",
            Suite::AppendixA => "appendixA",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub expected: Status,
    pub met: bool,
    pub report: LawReport,
}

impl Check {
    fn new(report: LawReport, expected: Status) -> Self {
        Check {
            met: report.status == expected,
            expected,
            report,
        }
    }

    fn pass(report: LawReport) -> Self {
        Check::new(report, Status::Pass)
    }

    fn fail(report: LawReport) -> Self {
        Check::new(report, Status::Fail)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
    /// `pass` iff every check met its expectation.
    pub status: Status,
    pub suite: String,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub zero_divisor_depth: usize,
    pub composition_samples: usize,
    pub timing: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            zero_divisor_depth: 2,
            composition_samples: 1000,
            timing: true,
        }
    }
}

fn el(alg: &Arc<Algebra>, label: &str) -> Result<Element, AlgebraError> {
    Element::from_label(alg, label)
}

fn indices(alg: &Algebra, labels: &[&str]) -> Result<Vec<usize>, AlgebraError> {
    Ok(SubalgebraSpec::from_labels(alg, labels)?.indices)
}

fn core(opts: &SuiteOptions) -> Result<Vec<Check>, AlgebraError> {
    use BuiltinAlgebra::*;
    let mut checks = Vec::new();
    let oct = Octonion.algebra();
    checks.push(Check::pass(check_identity(&oct, Law::Flexible)));
    checks.push(Check::fail(check_identity(&oct, Law::LieAdmissible)));
    checks.push(Check::pass(check_identity(&oct, Law::Alternative)));
    for b in [Quaternion, Biquaternion] {
        for law in [Law::Flexible, Law::LieAdmissible, Law::Alternative] {
            checks.push(Check::pass(check_identity(&b.algebra(), law)));
        }
    }
    checks.push(Check::pass(check_identity(
        &Sedenion.algebra(),
        Law::Flexible,
    )));
    checks.push(Check::pass(check_identity(
        &Sedenion.algebra(),
        Law::Alternative,
    )));
    let comp = CheckOptions {
        composition_samples: opts.composition_samples,
        ..CheckOptions::default()
    };
    for b in [Octonion, SplitOctonion, Sedenion] {
        checks.push(Check::pass(check_identity_with(
            &b.algebra(),
            Law::Composition,
            &comp,
        )));
    }

    let sed = Sedenion.algebra();
    checks.push(Check::pass(check_subalgebra(
        &sed,
        &indices(&sed, &["1", "i1", "i2", "i3"])?,
    )));
    let split_sub = ["1", "i1", "i2", "i3", "eps4", "eps5", "eps6", "eps7"];
    checks.push(Check::pass(check_subalgebra(
        &sed,
        &indices(&sed, &split_sub)?,
    )));
    checks.push(Check::fail(check_subalgebra(
        &sed,
        &indices(&sed, &["1", "i1", "i4"])?,
    )));

    let depth = opts.zero_divisor_depth;
    checks.push(Check::fail(zero_divisor_scan(
        &SplitOctonion.algebra(),
        depth,
    )));
    checks.push(Check::pass(zero_divisor_scan(&oct, depth)));
    checks.push(Check::pass(zero_divisor_scan(&Quaternion.algebra(), depth)));

    let via = split_octonion_via_basis_change()?;
    checks.push(Check::pass(compare_algebras(
        &via,
        &SplitOctonion.algebra(),
        &SignedBasisMap::identity(8),
    )?));
    checks.push(Check::pass(sedenion_complex_octonion()?.report));
    Ok(checks)
}

/// `h1 = e4`, `h2 = e_{m+4}` over the quaternion subalgebra of the octonions.
pub fn example2_report() -> Result<LawReport, AlgebraError> {
    let oct = BuiltinAlgebra::Octonion.algebra();
    let sub = SubalgebraSpec::from_labels(&oct, &["1", "e1", "e2", "e3"])?;
    let pairs = (5..=7)
        .map(|m| Ok((el(&oct, "e4")?, el(&oct, &format!("e{m}"))?)))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    check_leibniz_family(&oct, &sub, &sub.indices, &pairs)
}

/// `h1 = i4`, `h2 = eps_{m+4}`, factors `i_k, eps_l` of the biquaternions.
pub fn example3_report() -> Result<LawReport, AlgebraError> {
    let sed = BuiltinAlgebra::Sedenion.algebra();
    let sub =
        SubalgebraSpec::from_labels(&sed, &["1", "i1", "i2", "i3", "i0", "eps1", "eps2", "eps3"])?;
    let factors = indices(&sed, &["i1", "i2", "i3", "eps1", "eps2", "eps3"])?;
    let pairs = (5..=7)
        .map(|m| Ok((el(&sed, "i4")?, el(&sed, &format!("eps{m}"))?)))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    check_leibniz_family(&sed, &sub, &factors, &pairs)
}

/// Expectations follow the stated identities; the last report is a control
/// with a corrupted Hamiltonian.
fn example1() -> Vec<Check> {
    let reports = verify_example1(&example1_catalog());
    let n = reports.len();
    reports
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            if k + 1 == n {
                Check::fail(r)
            } else {
                Check::pass(r)
            }
        })
        .collect()
}

fn appendix_a() -> Vec<Check> {
    let mut flipped = check_matrix_susy_algebra_with(&SusyControls {
        flip_sigma_z: true,
        ..SusyControls::default()
    });
    flipped.law_id = "matrix_susy_flipped_sigma_z_control".into();
    let mut capped = check_matrix_susy_algebra_with(&SusyControls {
        rules: RewriteRules::capped(2),
        ..SusyControls::default()
    });
    capped.law_id = "matrix_susy_truncated_symbols_control".into();
    vec![
        Check::pass(check_matrix_susy_algebra()),
        Check::fail(flipped),
        Check::fail(capped),
    ]
}

fn checks(suite: Suite, opts: &SuiteOptions) -> Result<Vec<Check>, AlgebraError> {
    Ok(match suite {
        Suite::Core => core(opts)?,
        Suite::Example1 => example1(),
        Suite::Example2 => vec![Check::pass(example2_report()?)],
        Suite::Example3 => vec![Check::pass(example3_report()?)],
        Suite::AppendixA => appendix_a(),
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Core,
                Suite::Example1,
                Suite::Example2,
                Suite::Example3,
                Suite::AppendixA,
            ] {
                all.extend(checks(s, opts)?);
            }
            all
        }
    })
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport, AlgebraError> {
    let mut checks = checks(suite, opts)?;
    if !opts.timing {
        for c in &mut checks {
            c.report = c.report.clone().without_timing();
        }
    }
    let status = if checks.iter().all(|c| c.met) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(SuiteReport {
        checks,
        status,
        suite: suite.name().to_string(),
    })
}
