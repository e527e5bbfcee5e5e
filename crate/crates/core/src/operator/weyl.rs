//! Normal-ordered elements of the Weyl algebra in `N` variables, extended by
//! the formal derivatives `V[mu] = d^mu V` of one potential function.
//!
//! A monomial is `x^alpha * V[mu_1]*...*V[mu_r] * p^beta` with `[x_j, p_k] =
//! I delta_jk` and `[p_j, V[mu]] = -I V[mu + e_j]`. Positions and symbols
//! commute among themselves and sit to the left of all momenta.
//!
//! Products use the closed form of the rewrite rules,
//! `p^beta f = sum_{kappa <= beta} C(beta, kappa) (-I)^|kappa| (d^kappa f) p^(beta - kappa)`,
//! for `f` a product of positions and symbols.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::GaussianRational;

pub type MultiIndex<const N: usize> = [u32; N];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("rewrite system does not close: {symbol} has order above {max_order}")]
    Unclosed { symbol: String, max_order: u32 },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// Limits on the rewrite system. The default has none.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RewriteRules {
    /// Highest derivative order `|mu|` of a symbol the rules may produce.
    pub max_symbol_order: Option<u32>,
}

impl RewriteRules {
    pub fn capped(max_symbol_order: u32) -> Self {
        RewriteRules {
            max_symbol_order: Some(max_symbol_order),
        }
    }
}

fn total(m: &[u32]) -> u32 {
    m.iter().sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial<const N: usize> {
    pub x: MultiIndex<N>,
    /// Sorted; every entry has `|mu| >= 1`.
    pub v: Vec<MultiIndex<N>>,
    pub p: MultiIndex<N>,
}

impl<const N: usize> Monomial<N> {
    pub fn one() -> Self {
        Monomial {
            x: [0; N],
            v: Vec::new(),
            p: [0; N],
        }
    }

    pub fn degree(&self) -> u32 {
        total(&self.x) + self.v.len() as u32 + total(&self.p)
    }
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.v.cmp(&other.v))
            .then_with(|| self.p.cmp(&other.p))
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn var_name(prefix: char, n: usize, j: usize) -> String {
    if n == 1 {
        prefix.to_string()
    } else {
        format!("{prefix}{}", j + 1)
    }
}

fn symbol_name<const N: usize>(mu: &MultiIndex<N>) -> String {
    let parts: Vec<String> = mu.iter().map(u32::to_string).collect();
    format!("V[{}]", parts.join(","))
}

fn power(base: String, e: u32) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

impl<const N: usize> fmt::Display for Monomial<N> {
    /// `x1^2*V[1,0,0]*p2`; the empty monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (j, &e) in self.x.iter().enumerate() {
            if e > 0 {
                factors.push(power(var_name('x', N, j), e));
            }
        }
        let mut k = 0;
        while k < self.v.len() {
            let run = self.v[k..].iter().take_while(|m| **m == self.v[k]).count() as u32;
            factors.push(power(symbol_name(&self.v[k]), run));
            k += run as usize;
        }
        for (j, &e) in self.p.iter().enumerate() {
            if e > 0 {
                factors.push(power(var_name('p', N, j), e));
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// A finite sum of normal-ordered monomials with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement<const N: usize> {
    terms: BTreeMap<Monomial<N>, GaussianRational>,
}

// the left factor of a product: positions and symbols only
type Func<const N: usize> = (MultiIndex<N>, Vec<MultiIndex<N>>);

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

fn minus_i_pow(k: u32) -> GaussianRational {
    match k % 4 {
        0 => GaussianRational::one(),
        1 => -GaussianRational::i(),
        2 => -GaussianRational::one(),
        _ => GaussianRational::i(),
    }
}

/// `d/dx_j` of a product of positions and symbols, as `(multiplier, term)`.
fn derive<const N: usize>(
    f: &Func<N>,
    j: usize,
    rules: &RewriteRules,
) -> Result<Vec<(i64, Func<N>)>, OperatorError> {
    let (x, v) = f;
    let mut out = Vec::new();
    if x[j] > 0 {
        let mut x2 = *x;
        x2[j] -= 1;
        out.push((i64::from(x[j]), (x2, v.clone())));
    }
    let mut k = 0;
    while k < v.len() {
        // equal symbols are adjacent; differentiate one representative of a run
        let run = v[k..].iter().take_while(|m| **m == v[k]).count();
        let mut mu = v[k];
        mu[j] += 1;
        if let Some(cap) = rules.max_symbol_order {
            if total(&mu) > cap {
                return Err(OperatorError::Unclosed {
                    symbol: symbol_name(&mu),
                    max_order: cap,
                });
            }
        }
        let mut v2 = v.clone();
        v2[k] = mu;
        v2.sort_unstable();
        out.push((run as i64, (*x, v2)));
        k += run;
    }
    Ok(out)
}

impl<const N: usize> Default for WeylElement<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> WeylElement<N> {
    pub fn zero() -> Self {
        WeylElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn term(c: GaussianRational, m: Monomial<N>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeylElement { terms }
    }

    /// The position `x_j` (0-based).
    pub fn x(j: usize) -> Self {
        let mut m = Monomial::one();
        m.x[j] = 1;
        Self::term(GaussianRational::one(), m)
    }

    /// The momentum `p_j` (0-based).
    pub fn p(j: usize) -> Self {
        let mut m = Monomial::one();
        m.p[j] = 1;
        Self::term(GaussianRational::one(), m)
    }

    /// The symbol `V[mu]`; `mu` must be nonzero.
    pub fn symbol(mu: MultiIndex<N>) -> Self {
        assert!(total(&mu) > 0, "symbol of order zero");
        let mut m = Monomial::one();
        m.v.push(mu);
        Self::term(GaussianRational::one(), m)
    }

    /// `V[e_j]`, the first derivative along `x_j`.
    pub fn dv(j: usize) -> Self {
        let mut mu = [0; N];
        mu[j] = 1;
        Self::symbol(mu)
    }

    /// `V[e_j + e_k]`.
    pub fn ddv(j: usize, k: usize) -> Self {
        let mut mu = [0; N];
        mu[j] += 1;
        mu[k] += 1;
        Self::symbol(mu)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<N>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial<N>) -> GaussianRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    fn accumulate(&mut self, m: Monomial<N>, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WeylElement {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Drops every monomial that contains a symbol, i.e. sets `V = 0`.
    pub fn without_symbols(&self) -> Self {
        WeylElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.v.is_empty())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest `|mu|` among the symbols present.
    pub fn max_symbol_order(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.v.iter().map(|mu| total(mu)))
            .max()
            .unwrap_or(0)
    }

    pub fn mul_with(&self, other: &Self, rules: &RewriteRules) -> Result<Self, OperatorError> {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                // (coefficient, left function, accumulated momenta)
                let mut stage: Vec<(GaussianRational, Func<N>, MultiIndex<N>)> =
                    vec![(c, (m2.x, m2.v.clone()), [0; N])];
                for j in (0..N).rev() {
                    let b = m1.p[j];
                    if b == 0 {
                        continue;
                    }
                    let mut next = Vec::new();
                    for (c, f, q) in stage {
                        let mut layer = vec![(1i64, f)];
                        for k in 0..=b {
                            let weight = &c
                                * &(&minus_i_pow(k) * &GaussianRational::from_int(binomial(b, k)));
                            for (mult, g) in &layer {
                                let mut q2 = q;
                                q2[j] += b - k;
                                next.push((
                                    &weight * &GaussianRational::from_int(*mult),
                                    g.clone(),
                                    q2,
                                ));
                            }
                            if k < b {
                                let mut deeper = Vec::new();
                                for (mult, g) in &layer {
                                    for (m, h) in derive(g, j, rules)? {
                                        deeper.push((mult * m, h));
                                    }
                                }
                                layer = deeper;
                            }
                        }
                    }
                    stage = next;
                }
                for (c, (fx, fv), q) in stage {
                    let mut x = m1.x;
                    let mut p = m2.p;
                    for j in 0..N {
                        x[j] += fx[j];
                        p[j] += q[j];
                    }
                    let mut v = m1.v.clone();
                    v.extend(fv);
                    v.sort_unstable();
                    out.accumulate(Monomial { x, v, p }, c);
                }
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

    pub fn commutator(&self, other: &Self) -> Self {
        self.commutator_with(other, &RewriteRules::default())
            .expect("uncapped rules always close")
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.anticommutator_with(other, &RewriteRules::default())
            .expect("uncapped rules always close")
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<const N: usize> Add for &WeylElement<N> {
    type Output = WeylElement<N>;

    fn add(self, other: &WeylElement<N>) -> WeylElement<N> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &WeylElement<N> {
    type Output = WeylElement<N>;

    fn sub(self, other: &WeylElement<N>) -> WeylElement<N> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c);
        }
        out
    }
}

impl<const N: usize> Neg for &WeylElement<N> {
    type Output = WeylElement<N>;

    fn neg(self) -> WeylElement<N> {
        self.scale(&-GaussianRational::one())
    }
}

impl<const N: usize> Mul for &WeylElement<N> {
    type Output = WeylElement<N>;

    fn mul(self, other: &WeylElement<N>) -> WeylElement<N> {
        self.mul_with(other, &RewriteRules::default())
            .expect("uncapped rules always close")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl<const N: usize> $tr for WeylElement<N> {
            type Output = WeylElement<N>;

            fn $f(self, other: WeylElement<N>) -> WeylElement<N> {
                (&self).$f(&other)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<const N: usize> Neg for WeylElement<N> {
    type Output = WeylElement<N>;

    fn neg(self) -> WeylElement<N> {
        -&self
    }
}

impl<const N: usize> From<GaussianRational> for WeylElement<N> {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl<const N: usize> fmt::Display for WeylElement<N> {
    /// Terms from the highest monomial down, e.g. `2*x1*p1 - I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<(String, &GaussianRational)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.to_string(), c))
            .collect();
        let text = crate::text::format_terms(
            labels
                .iter()
                .map(|(l, c)| (*c, if l == "1" { None } else { Some(l.as_str()) })),
        );
        f.write_str(&text)
    }
}

struct Parser<'a, const N: usize> {
    src: &'a str,
    pos: usize,
}

impl<const N: usize> Parser<'_, N> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, OperatorError> {
        Err(OperatorError::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b == b' ') {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<u32, OperatorError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        self.src[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("number out of range")
        })
    }

    fn exponent(&mut self) -> Result<u32, OperatorError> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.number()
        } else {
            Ok(1)
        }
    }

    fn index(&mut self) -> Result<usize, OperatorError> {
        if N == 1 {
            return Ok(0);
        }
        let at = self.pos;
        let j = self.number()? as usize;
        if j == 0 || j > N {
            self.pos = at;
            return self.err(format!("variable index must be 1..{N}"));
        }
        Ok(j - 1)
    }

    fn scalar_literal(&mut self) -> Result<GaussianRational, OperatorError> {
        let start = self.pos;
        if self.peek() == Some(b'(') {
            let close = match self.src[start..].find(')') {
                Some(k) => start + k,
                None => return self.err("unclosed parenthesis"),
            };
            let inner = &self.src[start + 1..close];
            self.pos = close + 1;
            return inner.parse().or_else(|_| {
                self.pos = start;
                self.err(format!("bad scalar {inner:?}"))
            });
        }
        if self.peek() == Some(b'I') {
            self.pos += 1;
            return Ok(GaussianRational::i());
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit() || b == b'/') {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("bad number")
        })
    }

    fn factor(&mut self) -> Result<WeylElement<N>, OperatorError> {
        let base = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                WeylElement::x(self.index()?)
            }
            Some(b'p') => {
                self.pos += 1;
                WeylElement::p(self.index()?)
            }
            Some(b'V') => {
                self.pos += 1;
                if self.peek() != Some(b'[') {
                    return self.err("expected '['");
                }
                self.pos += 1;
                let at = self.pos;
                let mut mu = [0; N];
                for (j, slot) in mu.iter_mut().enumerate() {
                    if j > 0 {
                        if self.peek() != Some(b',') {
                            return self.err("expected ','");
                        }
                        self.pos += 1;
                    }
                    *slot = self.number()?;
                }
                if self.peek() != Some(b']') {
                    return self.err("expected ']'");
                }
                self.pos += 1;
                if total(&mu) == 0 {
                    self.pos = at;
                    return self.err("symbol of order zero");
                }
                WeylElement::symbol(mu)
            }
            Some(b'(' | b'I' | b'0'..=b'9') => {
                return Ok(WeylElement::constant(self.scalar_literal()?))
            }
            _ => return self.err("expected a factor"),
        };
        let e = self.exponent()?;
        Ok(base.pow(e))
    }

    fn term(&mut self) -> Result<WeylElement<N>, OperatorError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<WeylElement<N>, OperatorError> {
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        }
        let mut acc = WeylElement::zero();
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
            self.skip_ws();
        }
    }
}

impl<const N: usize> FromStr for WeylElement<N> {
    type Err = OperatorError;

    /// Reads the canonical text form; factors are multiplied in the order
    /// written, so `p1*x1` parses to `x1*p1 - I`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::<N> { src: s, pos: 0 };
        if s.trim().is_empty() {
            return parser.err("empty operator");
        }
        parser.sum()
    }
}
