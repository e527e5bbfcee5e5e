//! Elements of `Q_M (x) O` with `Q_M` the three-variable Weyl algebra and `O`
//! the split octonions: one operator per split-octonion basis slot.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::weyl::{OperatorError, RewriteRules, WeylElement};
use crate::algebra::Algebra;
use crate::builtins::BuiltinAlgebra;
use crate::scalar::GaussianRational;

pub type Weyl3 = WeylElement<3>;

/// Split-octonion slot indices, in the built-in basis order.
pub mod slot {
    pub const U0: usize = 0;
    pub const U0C: usize = 1;

    /// `u_k`, `k` in `1..=3`.
    pub const fn u(k: usize) -> usize {
        1 + k
    }

    /// `u_k*`, `k` in `1..=3`.
    pub const fn uc(k: usize) -> usize {
        4 + k
    }
}

fn split() -> Arc<Algebra> {
    BuiltinAlgebra::SplitOctonion.algebra()
}

/// Missing slots are zero; stored operators are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    components: BTreeMap<usize, Weyl3>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// `op (x) u` for the basis slot `u`.
    pub fn basis(op: Weyl3, u: usize) -> Self {
        assert!(u < 8, "split-octonion slot {u}");
        let mut t = TensorElement::zero();
        t.add_to(u, op);
        t
    }

    /// `op (x) 1`, where `1 = u0 + u0*`.
    pub fn scalar(op: Weyl3) -> Self {
        let unit = split();
        let mut t = TensorElement::zero();
        for (k, c) in unit.unit().iter().enumerate() {
            t.add_to(k, op.scale(c));
        }
        t
    }

    /// `a (x) u0 + b (x) u0*`, the form of elements of the associative
    /// subalgebra spanned by `u0` and `u0*`.
    pub fn diagonal(a: Weyl3, b: Weyl3) -> Self {
        &TensorElement::basis(a, slot::U0) + &TensorElement::basis(b, slot::U0C)
    }

    pub fn component(&self, u: usize) -> Weyl3 {
        self.components.get(&u).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Weyl3)> {
        self.components.iter().map(|(k, v)| (*k, v))
    }

    fn add_to(&mut self, u: usize, op: Weyl3) {
        let sum = match self.components.remove(&u) {
            Some(old) => &old + &op,
            None => op,
        };
        if !sum.is_zero() {
            self.components.insert(u, sum);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = TensorElement::zero();
        for (&u, op) in &self.components {
            out.add_to(u, op.scale(c));
        }
        out
    }

    /// Applies `f` to every operator component.
    pub fn map(&self, f: impl Fn(&Weyl3) -> Weyl3) -> Self {
        let mut out = TensorElement::zero();
        for (&u, op) in &self.components {
            out.add_to(u, f(op));
        }
        out
    }

    /// `(a (x) u)(b (x) v) = ab (x) uv`, extended bilinearly.
    pub fn mul_with(&self, other: &Self, rules: &RewriteRules) -> Result<Self, OperatorError> {
        let alg = split();
        let mut out = TensorElement::zero();
        for (&u, a) in &self.components {
            for (&v, b) in &other.components {
                let ab = a.mul_with(b, rules)?;
                for (w, c) in alg.product(u, v).iter().enumerate() {
                    if !c.is_zero() {
                        out.add_to(w, ab.scale(c));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, &RewriteRules::default())
            .expect("uncapped rules always close")
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.mul(other) - &other.mul(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.mul(other) + &other.mul(self)
    }

    /// `[l; h1, h2] = (l h1) h2 - h1 (h2 l)`.
    pub fn nonassoc_commutator(&self, h1: &Self, h2: &Self) -> Self {
        &self.mul(h1).mul(h2) - &h1.mul(&h2.mul(self))
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;

    fn add(self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (&u, op) in &other.components {
            out.add_to(u, op.clone());
        }
        out
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;

    fn sub(self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (&u, op) in &other.components {
            out.add_to(u, -op);
        }
        out
    }
}

impl fmt::Display for TensorElement {
    /// `(x1*p1 - I)*u0 + (p1)*u1c`, slots in basis order; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let alg = split();
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(&u, op)| format!("({op})*{}", alg.label(u)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Q = sum_j (-p_j + I V_j) (x) u_j*` and `Qbar = sum_j (p_j + I V_j) (x) u_j`.
pub fn build_supercharges() -> (TensorElement, TensorElement) {
    let i = GaussianRational::i();
    let mut q = TensorElement::zero();
    let mut qbar = TensorElement::zero();
    for j in 0..3 {
        let iv = Weyl3::dv(j).scale(&i);
        q = &q + &TensorElement::basis(&iv - &Weyl3::p(j), slot::uc(j + 1));
        qbar = &qbar + &TensorElement::basis(&iv + &Weyl3::p(j), slot::u(j + 1));
    }
    (q, qbar)
}

/// `D_j = -p_j + I V_j` and `Dbar_j = p_j + I V_j`, `j` 0-based.
pub fn d_operators(j: usize) -> (Weyl3, Weyl3) {
    let iv = Weyl3::dv(j).scale(&GaussianRational::i());
    (&iv - &Weyl3::p(j), &iv + &Weyl3::p(j))
}

/// `1/2 [p^2 + sum_j V_j^2] (x) 1 + 1/2 sum_j V_jj (x) (u0* - u0)`.
pub fn hamiltonian_split() -> TensorElement {
    hamiltonian_with_sign(1)
}

/// [`hamiltonian_split`] with the `V_jj` term multiplied by `sign`.
pub(crate) fn hamiltonian_with_sign(sign: i64) -> TensorElement {
    let half = GaussianRational::ratio(1, 2);
    let mut kinetic = Weyl3::zero();
    let mut laplacian = Weyl3::zero();
    for j in 0..3 {
        kinetic = &kinetic + &(&Weyl3::p(j).pow(2) + &Weyl3::dv(j).pow(2));
        laplacian = &laplacian + &Weyl3::ddv(j, j);
    }
    let spin = laplacian.scale(&(&half * &GaussianRational::from_int(sign)));
    &(&TensorElement::scalar(kinetic.scale(&half)) + &TensorElement::basis(spin.clone(), slot::U0C))
        - &TensorElement::basis(spin, slot::U0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weyl3 {
        s.parse().unwrap()
    }

    #[test]
    fn supercharge_components() {
        let (q, qbar) = build_supercharges();
        assert_eq!(q.component(slot::uc(1)), w("-p1 + I*V[1,0,0]"));
        assert!(q.component(slot::u(1)).is_zero());
        assert_eq!(qbar.component(slot::u(2)), w("p2 + I*V[0,1,0]"));
    }

    #[test]
    fn tensor_products() {
        let one = Weyl3::one();
        assert!(TensorElement::basis(one.clone(), slot::U0)
            .mul(&TensorElement::basis(one.clone(), slot::U0C))
            .is_zero());
        let lhs = TensorElement::basis(w("p1"), slot::u(1))
            .mul(&TensorElement::basis(w("x1"), slot::uc(1)));
        assert_eq!(lhs, TensorElement::basis(w("-x1*p1 + I"), slot::U0));
        let a = TensorElement::basis(w("x2*p3"), slot::u(3));
        assert_eq!(TensorElement::scalar(one).mul(&a), a);
    }

    #[test]
    fn supercharges_are_nilpotent() {
        let (q, qbar) = build_supercharges();
        assert!(q.anticommutator(&q).is_zero());
        assert!(qbar.anticommutator(&qbar).is_zero());
    }

    #[test]
    fn free_hamiltonian() {
        let h = hamiltonian_split().map(Weyl3::without_symbols);
        let p2 = &(&w("p1^2") + &w("p2^2")) + &w("p3^2");
        assert_eq!(
            h,
            TensorElement::scalar(p2.scale(&GaussianRational::ratio(1, 2)))
        );
    }

    #[test]
    fn unit_brackets_vanish() {
        let (q, qbar) = build_supercharges();
        let h = &q + &qbar;
        assert!(TensorElement::scalar(Weyl3::one())
            .nonassoc_commutator(&h, &h)
            .is_zero());
    }
}
