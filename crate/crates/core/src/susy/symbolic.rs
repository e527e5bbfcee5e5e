//! The 2x2 matrix supersymmetry algebra over the one-variable Weyl algebra.
//! Here `V[k]` stands for the `k`-th derivative of the superpotential `U`.

use std::fmt;

use num_traits::One;

use crate::laws::{LawReport, ReportBuilder, Witness};
use crate::operator::{OperatorError, RewriteRules, WeylElement};
use crate::scalar::GaussianRational;

pub type Weyl1 = WeylElement<1>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatrixOperator {
    pub entries: [[Weyl1; 2]; 2],
}

impl MatrixOperator {
    pub fn new(entries: [[Weyl1; 2]; 2]) -> Self {
        MatrixOperator { entries }
    }

    pub fn zero() -> Self {
        MatrixOperator::default()
    }

    fn constant(m: [[i64; 2]; 2]) -> Self {
        let c = |v: i64| Weyl1::constant(GaussianRational::from_int(v));
        MatrixOperator::new([[c(m[0][0]), c(m[0][1])], [c(m[1][0]), c(m[1][1])]])
    }

    pub fn identity() -> Self {
        Self::constant([[1, 0], [0, 1]])
    }

    pub fn sigma_plus() -> Self {
        Self::constant([[0, 1], [0, 0]])
    }

    pub fn sigma_minus() -> Self {
        Self::constant([[0, 0], [1, 0]])
    }

    pub fn sigma_z() -> Self {
        Self::constant([[1, 0], [0, -1]])
    }

    /// `op * self`, scaling every entry by an operator from the left.
    pub fn left_scale(&self, op: &Weyl1) -> Self {
        let e = &self.entries;
        MatrixOperator::new([
            [op * &e[0][0], op * &e[0][1]],
            [op * &e[1][0], op * &e[1][1]],
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Weyl1::is_zero)
    }

    pub fn mul_with(&self, other: &Self, rules: &RewriteRules) -> Result<Self, OperatorError> {
        let mut out = MatrixOperator::zero();
        for r in 0..2 {
            for c in 0..2 {
                let a = self.entries[r][0].mul_with(&other.entries[0][c], rules)?;
                let b = self.entries[r][1].mul_with(&other.entries[1][c], rules)?;
                out.entries[r][c] = &a + &b;
            }
        }
        Ok(out)
    }

    pub fn commutator_with(
        &self,
        other: &Self,
        rules: &RewriteRules,
    ) -> Result<Self, OperatorError> {
        Ok(&self.mul_with(other, rules)? - &other.mul_with(self, rules)?)
    }

    pub fn anticommutator_with(
        &self,
        other: &Self,
        rules: &RewriteRules,
    ) -> Result<Self, OperatorError> {
        Ok(&self.mul_with(other, rules)? + &other.mul_with(self, rules)?)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let e = &self.entries;
        MatrixOperator::new([
            [e[0][0].scale(c), e[0][1].scale(c)],
            [e[1][0].scale(c), e[1][1].scale(c)],
        ])
    }

    /// First entry, in row-major order, where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        (0..2)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .find(|&(r, c)| self.entries[r][c] != other.entries[r][c])
    }
}

impl std::ops::Add for &MatrixOperator {
    type Output = MatrixOperator;

    fn add(self, other: &MatrixOperator) -> MatrixOperator {
        let (a, b) = (&self.entries, &other.entries);
        MatrixOperator::new([
            [&a[0][0] + &b[0][0], &a[0][1] + &b[0][1]],
            [&a[1][0] + &b[1][0], &a[1][1] + &b[1][1]],
        ])
    }
}

impl std::ops::Sub for &MatrixOperator {
    type Output = MatrixOperator;

    fn sub(self, other: &MatrixOperator) -> MatrixOperator {
        self + &other.scale(&-GaussianRational::one())
    }
}

impl fmt::Display for MatrixOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

fn u_prime(k: u32) -> Weyl1 {
    Weyl1::symbol([k])
}

/// `Q = (p - I U'/2) sigma+` and `Qbar = (p + I U'/2) sigma-`.
pub fn build_matrix_supercharges() -> (MatrixOperator, MatrixOperator) {
    let half_i = &GaussianRational::ratio(1, 2) * &GaussianRational::i();
    let shift = u_prime(1).scale(&half_i);
    let p = Weyl1::p(0);
    (
        MatrixOperator::sigma_plus().left_scale(&(&p - &shift)),
        MatrixOperator::sigma_minus().left_scale(&(&p + &shift)),
    )
}

/// `H = 1/2 (p^2 + U'^2/4) 1 + sign (U''/4) sigma_z`; the physical
/// Hamiltonian has `sign = 1`.
pub fn matrix_hamiltonian(sigma_z_sign: i64) -> MatrixOperator {
    let kinetic = (&Weyl1::p(0).pow(2) + &u_prime(1).pow(2).scale(&GaussianRational::ratio(1, 4)))
        .scale(&GaussianRational::ratio(1, 2));
    let spin = u_prime(2).scale(&GaussianRational::ratio(sigma_z_sign, 4));
    &MatrixOperator::identity().left_scale(&kinetic) + &MatrixOperator::sigma_z().left_scale(&spin)
}

/// The diagonal blocks `1/2 p^2 + V-` (top left) and `1/2 p^2 + V+`, with
/// `V-+ = U'^2/8 +- U''/4`.
pub fn partner_blocks() -> (Weyl1, Weyl1) {
    let base = &Weyl1::p(0).pow(2).scale(&GaussianRational::ratio(1, 2))
        + &u_prime(1).pow(2).scale(&GaussianRational::ratio(1, 8));
    let spin = u_prime(2).scale(&GaussianRational::ratio(1, 4));
    (&base + &spin, &base - &spin)
}

/// Variations used as negative controls.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SusyControls {
    /// Replace `sigma_z` by `-sigma_z` in `H`.
    pub flip_sigma_z: bool,
    pub rules: RewriteRules,
}

pub fn check_matrix_susy_algebra() -> LawReport {
    check_matrix_susy_algebra_with(&SusyControls::default())
}

/// Checks, in order: `{sigma-, sigma+} = 1`, `[sigma+, sigma-] = sigma_z`,
/// `Q^2 = 0`, `Qbar^2 = 0`, `{Qbar, Q} = 2H`, `[Q, H] = 0`, `[Qbar, H] = 0`,
/// and that the diagonal of `H` is `diag(1/2 p^2 + V-, 1/2 p^2 + V+)`.
pub fn check_matrix_susy_algebra_with(controls: &SusyControls) -> LawReport {
    let rules = &controls.rules;
    let (q, qbar) = build_matrix_supercharges();
    let h = matrix_hamiltonian(if controls.flip_sigma_z { -1 } else { 1 });
    let (sp, sm, sz) = (
        MatrixOperator::sigma_plus(),
        MatrixOperator::sigma_minus(),
        MatrixOperator::sigma_z(),
    );
    let zero = MatrixOperator::zero();
    let (h_minus, h_plus) = partner_blocks();
    let blocks = MatrixOperator::new([[h_minus, Weyl1::zero()], [Weyl1::zero(), h_plus]]);

    type Computation<'a> = Box<dyn Fn() -> Result<MatrixOperator, OperatorError> + 'a>;
    let cases: Vec<(&str, Computation, MatrixOperator)> = vec![
        (
            "{sigma-,sigma+} = 1",
            Box::new(|| sm.anticommutator_with(&sp, rules)),
            MatrixOperator::identity(),
        ),
        (
            "[sigma+,sigma-] = sigma_z",
            Box::new(|| sp.commutator_with(&sm, rules)),
            sz.clone(),
        ),
        ("Q^2 = 0", Box::new(|| q.mul_with(&q, rules)), zero.clone()),
        (
            "Qbar^2 = 0",
            Box::new(|| qbar.mul_with(&qbar, rules)),
            zero.clone(),
        ),
        (
            "{Qbar,Q} = 2H",
            Box::new(|| qbar.anticommutator_with(&q, rules)),
            h.scale(&GaussianRational::from_int(2)),
        ),
        (
            "[Q,H] = 0",
            Box::new(|| q.commutator_with(&h, rules)),
            zero.clone(),
        ),
        (
            "[Qbar,H] = 0",
            Box::new(|| qbar.commutator_with(&h, rules)),
            zero.clone(),
        ),
        ("H = diag(H-, H+)", Box::new(|| Ok(h.clone())), blocks),
    ];

    let mut report = ReportBuilder::new("matrix_susy_algebra", "matrix_operators")
        .note("sigma_z = diag(1,-1); H- = p^2/2 + V- is the top-left block");
    for (k, (name, compute, expected)) in cases.into_iter().enumerate() {
        match compute() {
            Ok(value) => {
                let diff = value.first_difference(&expected);
                report.check(diff.is_none(), vec![k], || {
                    let (r, c) = diff.unwrap_or_default();
                    Witness {
                        inputs: vec![name.to_string(), format!("entry ({},{})", r + 1, c + 1)],
                        lhs: value.entries[r][c].to_string(),
                        rhs: expected.entries[r][c].to_string(),
                    }
                });
            }
            Err(e) => report.fail(vec![k], || Witness {
                inputs: vec![name.to_string(), "rewrite".to_string()],
                lhs: e.to_string(),
                rhs: "closed normal form".to_string(),
            }),
        }
    }
    report.finish()
}
