//! Polynomial-representation oracle.
//!
//! Operators are kept as unordered words in `x_j`, `p_j = -I d/dx_j` and the
//! symbols `d^mu V`, and act on polynomials with exact coefficients once `V`
//! is fixed to a concrete polynomial. Nothing here uses normal ordering: two
//! expressions are compared by applying both to a basis of test polynomials.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use nonassoc::algebra::Algebra;
use nonassoc::builtins::BuiltinAlgebra;
use nonassoc::operator::{TensorElement, WeylElement};
use nonassoc::scalar::GaussianRational;
use num_traits::{One, Zero};

pub type Gr = GaussianRational;

pub fn gr(n: i64) -> Gr {
    Gr::from_int(n)
}

pub fn half() -> Gr {
    Gr::ratio(1, 2)
}

pub fn i() -> Gr {
    Gr::i()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly<const N: usize>(pub BTreeMap<[u32; N], Gr>);

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn monomial(c: Gr, e: [u32; N]) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, c);
        p
    }

    fn add_term(&mut self, e: [u32; N], c: Gr) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(e).or_insert_with(Gr::zero);
        *entry += &c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Gr) -> Self {
        let mut out = Poly::zero();
        for (e, k) in &self.0 {
            out.add_term(*e, k * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                let mut e = *e1;
                for j in 0..N {
                    e[j] += e2[j];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn deriv(&self, j: usize) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.0 {
            if e[j] > 0 {
                let mut e2 = *e;
                e2[j] -= 1;
                out.add_term(e2, c * &gr(i64::from(e[j])));
            }
        }
        out
    }

    pub fn deriv_multi(&self, mu: &[u32; N]) -> Self {
        let mut out = self.clone();
        for (j, &k) in mu.iter().enumerate() {
            for _ in 0..k {
                out = out.deriv(j);
            }
        }
        out
    }
}

/// Every monomial of total degree at most `max_degree`.
pub fn test_polynomials<const N: usize>(max_degree: u32) -> Vec<Poly<N>> {
    let mut out = Vec::new();
    let mut e = [0u32; N];
    loop {
        if e.iter().sum::<u32>() <= max_degree {
            out.push(Poly::monomial(Gr::one(), e));
        }
        let mut j = 0;
        loop {
            if j == N {
                return out;
            }
            e[j] += 1;
            if e[j] <= max_degree {
                break;
            }
            e[j] = 0;
            j += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter<const N: usize> {
    X(usize),
    P(usize),
    Sym([u32; N]),
}

/// A linear combination of operator words; a word acts right to left.
#[derive(Debug, Clone, Default)]
pub struct FreeOp<const N: usize>(pub Vec<(Gr, Vec<Letter<N>>)>);

impl<const N: usize> FreeOp<N> {
    pub fn zero() -> Self {
        FreeOp(Vec::new())
    }

    pub fn scalar(c: Gr) -> Self {
        FreeOp(vec![(c, Vec::new())])
    }

    pub fn one() -> Self {
        Self::scalar(Gr::one())
    }

    pub fn letter(l: Letter<N>) -> Self {
        FreeOp(vec![(Gr::one(), vec![l])])
    }

    pub fn x(j: usize) -> Self {
        Self::letter(Letter::X(j))
    }

    pub fn p(j: usize) -> Self {
        Self::letter(Letter::P(j))
    }

    pub fn sym(mu: [u32; N]) -> Self {
        Self::letter(Letter::Sym(mu))
    }

    pub fn dv(j: usize) -> Self {
        let mut mu = [0; N];
        mu[j] = 1;
        Self::sym(mu)
    }

    pub fn add(&self, other: &Self) -> Self {
        FreeOp(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&gr(-1)))
    }

    pub fn scale(&self, c: &Gr) -> Self {
        FreeOp(self.0.iter().map(|(k, w)| (k * c, w.clone())).collect())
    }

    /// Word concatenation: `(a b) f = a (b f)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for (c1, w1) in &self.0 {
            for (c2, w2) in &other.0 {
                let mut w = w1.clone();
                w.extend(w2.iter().copied());
                out.push((c1 * c2, w));
            }
        }
        FreeOp(out)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    pub fn apply(&self, v: &Poly<N>, f: &Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for (c, word) in &self.0 {
            let mut g = f.clone();
            for letter in word.iter().rev() {
                g = match *letter {
                    Letter::X(j) => {
                        let mut e = [0; N];
                        e[j] = 1;
                        g.mul(&Poly::monomial(Gr::one(), e))
                    }
                    Letter::P(j) => g.deriv(j).scale(&-i()),
                    Letter::Sym(mu) => g.mul(&v.deriv_multi(&mu)),
                };
            }
            out = out.add(&g.scale(c));
        }
        out
    }
}

/// Action of a normal-ordered engine element: momenta first, then symbols and
/// positions.
pub fn apply_weyl<const N: usize>(w: &WeylElement<N>, v: &Poly<N>, f: &Poly<N>) -> Poly<N> {
    let mut out = Poly::zero();
    for (m, c) in w.terms() {
        let mut g = f.clone();
        for j in 0..N {
            for _ in 0..m.p[j] {
                g = g.deriv(j).scale(&-i());
            }
        }
        for mu in &m.v {
            g = g.mul(&v.deriv_multi(mu));
        }
        g = g.mul(&Poly::monomial(Gr::one(), m.x));
        out = out.add(&g.scale(c));
    }
    out
}

/// Translates an engine element into words (for use as an oracle input only).
pub fn words_of<const N: usize>(w: &WeylElement<N>) -> FreeOp<N> {
    let mut out = Vec::new();
    for (m, c) in w.terms() {
        let mut word = Vec::new();
        for j in 0..N {
            word.extend(std::iter::repeat_n(Letter::X(j), m.x[j] as usize));
        }
        word.extend(m.v.iter().map(|mu| Letter::Sym(*mu)));
        for j in 0..N {
            word.extend(std::iter::repeat_n(Letter::P(j), m.p[j] as usize));
        }
        out.push((c.clone(), word));
    }
    FreeOp(out)
}

pub fn ops_agree<const N: usize>(
    a: &FreeOp<N>,
    b: &FreeOp<N>,
    v: &Poly<N>,
    tests: &[Poly<N>],
) -> bool {
    tests.iter().all(|f| a.apply(v, f) == b.apply(v, f))
}

pub fn engine_agrees<const N: usize>(
    w: &WeylElement<N>,
    a: &FreeOp<N>,
    v: &Poly<N>,
    tests: &[Poly<N>],
) -> bool {
    tests.iter().all(|f| apply_weyl(w, v, f) == a.apply(v, f))
}

/// `V = x1^2 x2 + x3`.
pub fn potential3() -> Poly<3> {
    Poly::monomial(Gr::one(), [2, 1, 0]).add(&Poly::monomial(Gr::one(), [0, 0, 1]))
}

pub fn split() -> Arc<Algebra> {
    BuiltinAlgebra::SplitOctonion.algebra()
}

/// `sum c * word (x) u` over split-octonion slots.
#[derive(Debug, Clone, Default)]
pub struct FreeTensor(pub Vec<(FreeOp<3>, usize)>);

impl FreeTensor {
    pub fn basis(op: FreeOp<3>, u: usize) -> Self {
        FreeTensor(vec![(op, u)])
    }

    /// `op (x) (u0 + u0*)`.
    pub fn scalar(op: FreeOp<3>) -> Self {
        FreeTensor(vec![(op.clone(), 0), (op, 1)])
    }

    pub fn add(&self, other: &Self) -> Self {
        FreeTensor(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn scale(&self, c: &Gr) -> Self {
        FreeTensor(self.0.iter().map(|(op, u)| (op.scale(c), *u)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&gr(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let alg = split();
        let mut out = Vec::new();
        for (a, u) in &self.0 {
            for (b, v) in &other.0 {
                let ab = a.mul(b);
                for (w, c) in alg.product(*u, *v).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((ab.scale(c), w));
                    }
                }
            }
        }
        FreeTensor(out)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    /// `(l h1) h2 - h1 (h2 l)`.
    pub fn nacomm(&self, h1: &Self, h2: &Self) -> Self {
        self.mul(h1).mul(h2).sub(&h1.mul(&h2.mul(self)))
    }

    /// Slot-wise action on `f`.
    pub fn apply(&self, v: &Poly<3>, f: &Poly<3>) -> [Poly<3>; 8] {
        let mut out: [Poly<3>; 8] = Default::default();
        for (op, u) in &self.0 {
            out[*u] = out[*u].add(&op.apply(v, f));
        }
        out
    }
}

pub fn tensors_agree(a: &FreeTensor, b: &FreeTensor, v: &Poly<3>, tests: &[Poly<3>]) -> bool {
    tests.iter().all(|f| a.apply(v, f) == b.apply(v, f))
}

pub fn tensor_engine_agrees(
    t: &TensorElement,
    a: &FreeTensor,
    v: &Poly<3>,
    tests: &[Poly<3>],
) -> bool {
    tests.iter().all(|f| {
        let expected = a.apply(v, f);
        (0..8).all(|u| apply_weyl(&t.component(u), v, f) == expected[u])
    })
}

/// `Q = sum_j (-p_j + I V_j) (x) u_j*`, `Qbar = sum_j (p_j + I V_j) (x) u_j`,
/// built from words.
pub fn free_supercharges() -> (FreeTensor, FreeTensor) {
    let mut q = FreeTensor::default();
    let mut qbar = FreeTensor::default();
    for j in 0..3 {
        let iv = FreeOp::dv(j).scale(&i());
        q = q.add(&FreeTensor::basis(iv.sub(&FreeOp::p(j)), 5 + j));
        qbar = qbar.add(&FreeTensor::basis(iv.add(&FreeOp::p(j)), 2 + j));
    }
    (q, qbar)
}

/// `1/2 [p^2 + sum V_j^2] (x) 1 + 1/2 sum V_jj (x) (u0* - u0)`, from words.
pub fn free_hamiltonian() -> FreeTensor {
    let mut kinetic = FreeOp::zero();
    let mut lap = FreeOp::zero();
    for j in 0..3 {
        kinetic = kinetic.add(&FreeOp::p(j).mul(&FreeOp::p(j)));
        kinetic = kinetic.add(&FreeOp::dv(j).mul(&FreeOp::dv(j)));
        let mut mu = [0; 3];
        mu[j] = 2;
        lap = lap.add(&FreeOp::sym(mu));
    }
    let lap = lap.scale(&half());
    FreeTensor::scalar(kinetic.scale(&half()))
        .add(&FreeTensor::basis(lap.clone(), 1))
        .sub(&FreeTensor::basis(lap, 0))
}

/// `1, x1, p1, x1 p1, V_1` as words.
pub fn free_catalog() -> Vec<FreeOp<3>> {
    vec![
        FreeOp::one(),
        FreeOp::x(0),
        FreeOp::p(0),
        FreeOp::x(0).mul(&FreeOp::p(0)),
        FreeOp::dv(0),
    ]
}

pub fn free_lift(l0: &FreeOp<3>) -> FreeTensor {
    FreeTensor::basis(l0.clone(), 0).add(&FreeTensor::basis(l0.clone(), 1))
}

/// 2x2 matrices of one-variable words, for the matrix supercharge algebra.
pub type FreeMatrix = [[FreeOp<1>; 2]; 2];

pub fn mat_mul(a: &FreeMatrix, b: &FreeMatrix) -> FreeMatrix {
    let entry = |r: usize, c: usize| a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

pub fn mat_add(a: &FreeMatrix, b: &FreeMatrix) -> FreeMatrix {
    [
        [a[0][0].add(&b[0][0]), a[0][1].add(&b[0][1])],
        [a[1][0].add(&b[1][0]), a[1][1].add(&b[1][1])],
    ]
}

pub fn mat_scale(a: &FreeMatrix, c: &Gr) -> FreeMatrix {
    [
        [a[0][0].scale(c), a[0][1].scale(c)],
        [a[1][0].scale(c), a[1][1].scale(c)],
    ]
}

pub fn mat_zero() -> FreeMatrix {
    Default::default()
}

pub fn matrices_agree(a: &FreeMatrix, b: &FreeMatrix, u: &Poly<1>, tests: &[Poly<1>]) -> bool {
    (0..2).all(|r| (0..2).all(|c| ops_agree(&a[r][c], &b[r][c], u, tests)))
}

/// `Q = (p - I U'/2) sigma+`, `Qbar = (p + I U'/2) sigma-` and
/// `H = 1/2 (p^2 + U'^2/4) + sign U''/4 sigma_z`, from words.
pub fn free_matrix_susy(sigma_z_sign: i64) -> (FreeMatrix, FreeMatrix, FreeMatrix) {
    let shift = FreeOp::sym([1]).scale(&(&half() * &i()));
    let mut q = mat_zero();
    q[0][1] = FreeOp::p(0).sub(&shift);
    let mut qbar = mat_zero();
    qbar[1][0] = FreeOp::p(0).add(&shift);
    let u1 = FreeOp::sym([1]);
    let kinetic = FreeOp::p(0)
        .mul(&FreeOp::p(0))
        .add(&u1.mul(&u1).scale(&Gr::ratio(1, 4)))
        .scale(&half());
    let spin = FreeOp::sym([2]).scale(&Gr::ratio(sigma_z_sign, 4));
    let mut h = mat_zero();
    h[0][0] = kinetic.add(&spin);
    h[1][1] = kinetic.sub(&spin);
    (q, qbar, h)
}
