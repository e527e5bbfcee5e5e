//! Elements of an [`Algebra`] and the products built from them.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraError, Coeffs};
use crate::scalar::GaussianRational;

/// A coefficient vector tied to the algebra it lives in.
///
/// Every binary operation checks that both operands belong to the same
/// algebra and fails with [`AlgebraError::AlgebraMismatch`] otherwise.
#[derive(Clone)]
pub struct Element {
    algebra: Arc<Algebra>,
    coeffs: Coeffs,
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn new(algebra: &Arc<Algebra>, coeffs: Coeffs) -> Result<Self, AlgebraError> {
        if coeffs.len() != algebra.dim() {
            return Err(AlgebraError::WrongLength {
                algebra: algebra.name().to_string(),
                expected: algebra.dim(),
                found: coeffs.len(),
            });
        }
        Ok(Element {
            algebra: Arc::clone(algebra),
            coeffs,
        })
    }

    pub(crate) fn from_coeffs(algebra: &Arc<Algebra>, coeffs: Coeffs) -> Self {
        debug_assert_eq!(coeffs.len(), algebra.dim());
        Element {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Element::from_coeffs(algebra, vec![GaussianRational::zero(); algebra.dim()])
    }

    pub fn unit(algebra: &Arc<Algebra>) -> Self {
        Element::from_coeffs(algebra, algebra.unit().to_vec())
    }

    /// `c * 1`.
    pub fn scalar(algebra: &Arc<Algebra>, c: &GaussianRational) -> Self {
        Element::unit(algebra).scale(c)
    }

    pub fn basis(algebra: &Arc<Algebra>, i: usize) -> Self {
        Element::from_coeffs(algebra, algebra.basis(i))
    }

    pub fn from_label(algebra: &Arc<Algebra>, label: &str) -> Result<Self, AlgebraError> {
        let i = algebra
            .index_of(label)
            .ok_or_else(|| AlgebraError::UnknownLabel {
                algebra: algebra.name().to_string(),
                label: label.to_string(),
            })?;
        Ok(Element::basis(algebra, i))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, label: &str) -> Option<&GaussianRational> {
        self.algebra.index_of(label).map(|i| &self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Element) -> Result<(), AlgebraError> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            })
        }
    }

    fn with(&self, coeffs: Coeffs) -> Element {
        Element::from_coeffs(&self.algebra, coeffs)
    }

    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        Ok(self.with(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        Ok(self.with(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Element {
        self.with(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Element {
        self.with(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Bilinear extension of the basis table.
    pub fn mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        Ok(self.with(self.algebra.mul_coeffs(&self.coeffs, &other.coeffs)))
    }

    /// `alpha*a + beta*b`.
    pub fn linear(
        a: &Element,
        b: &Element,
        alpha: &GaussianRational,
        beta: &GaussianRational,
    ) -> Result<Element, AlgebraError> {
        a.scale(alpha).add(&b.scale(beta))
    }

    pub fn conjugate(&self) -> Element {
        self.with(self.algebra.conjugate_coeffs(&self.coeffs))
    }

    /// `x * conj(x)` as an element. For composition algebras this lies in the
    /// span of the unit; for the sedenions it lies in the span of `1` and `i0`.
    pub fn norm(&self) -> Element {
        self.with(
            self.algebra
                .mul_coeffs(&self.coeffs, &self.conjugate().coeffs),
        )
    }

    /// The scalar `q` with `x * conj(x) = q * 1`.
    pub fn quadratic_form(&self) -> Result<GaussianRational, AlgebraError> {
        let n = self.norm();
        let unit = self.algebra.unit();
        let (pivot, u) = unit
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .expect("unit is nonzero");
        let q = n.coeffs[pivot].checked_div(u)?;
        for (k, c) in n.coeffs.iter().enumerate() {
            let expected = &q * &unit[k];
            if *c != expected {
                return Err(AlgebraError::NonScalarForm {
                    label: self.algebra.label(k).to_string(),
                    value: (c - &expected).to_string(),
                });
            }
        }
        Ok(q)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `(ab)c - a(bc)`.
    pub fn associator(&self, b: &Element, c: &Element) -> Result<Element, AlgebraError> {
        self.mul(b)?.mul(c)?.sub(&self.mul(&b.mul(c)?)?)
    }

    /// `(ab + ba) / 2`.
    pub fn jordan_product(&self, other: &Element) -> Result<Element, AlgebraError> {
        let s = self.mul(other)?.add(&other.mul(self)?)?;
        Ok(s.scale(&GaussianRational::ratio(1, 2)))
    }

    /// `[g; h1, h2] = (g h1) h2 - h1 (h2 g)`, grouped exactly so.
    pub fn nonassoc_commutator(&self, h1: &Element, h2: &Element) -> Result<Element, AlgebraError> {
        let left = self.mul(h1)?.mul(h2)?;
        let right = h1.mul(&h2.mul(self)?)?;
        left.sub(&right)
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs == self.algebra.unit()
    }

    pub fn is_one_basis(&self) -> Option<usize> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nz.next(), nz.next()) {
            (Some((i, c)), None) if c.is_one() => Some(i),
            _ => None,
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_coeffs(&self.coeffs))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.algebra.name(), self)
    }
}
