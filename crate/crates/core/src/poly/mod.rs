//! Exact multivariate Laurent polynomials.

mod basis;
mod format;
mod monomial;
mod parse;
mod var;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::Coeff;

pub use basis::{e_collect, e_expand, gamma_collect, gamma_expand, GammaExpansion};
pub use format::{latex, text};
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_terms, IndexExpr, RawFactor, RawTerm};
pub use var::{Name, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("substituted value for `{0}` is not an invertible monomial")]
    NotInvertible(VarId),
    #[error("polynomial has a negative power of `{0}`")]
    NegativeExponent(VarId),
    #[error("polynomial is not homogeneous in the requested variables")]
    NotHomogeneous,
    #[error("polynomial is not symmetric in the requested variables")]
    NotSymmetric,
    #[error("expansion has no valid form: {0}")]
    NoExpansion(String),
}

/// A finite sum of Laurent monomials with nonzero coefficients, kept in
/// graded order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

pub type Poly = Polynomial<BigInt>;
pub type Poly64 = Polynomial<i64>;
pub type Poly128 = Polynomial<i128>;

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(C::from(c))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::term(Monomial::var_pow(v, e), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// `Σ coeffs[k] · v^k`.
    pub fn univariate<I: IntoIterator<Item = C>>(v: VarId, coeffs: I) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(v, k as i32), c)),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    /// The single term, if the polynomial is `c · m`.
    pub fn as_term(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|p| p.0))
            .collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// Largest and smallest exponent of `v` over the terms.
    pub fn degree_range(&self, v: VarId) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn degree_in(&self, v: VarId) -> i32 {
        self.degree_range(v).map_or(0, |r| r.1)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    /// Divides every coefficient by `c`, or `None` if some division is inexact.
    pub fn exact_div_scalar(&self, c: &C) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (m, a) in &self.terms {
            out.insert(m.clone(), a.checked_exact_div(c)?);
        }
        Some(Polynomial { terms: out })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `∂/∂v`, with the usual rule for negative exponents.
    pub fn partial_derivative(&self, v: VarId) -> Self {
        let mut out = Self::zero();
        let dv = Monomial::var(v);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e != 0 {
                out.add_term(m.div(&dv), c.clone() * C::from(e as i64));
            }
        }
        out
    }

    /// Sum of `c · m'` over terms `c · v^e · m'`, i.e. the coefficient of
    /// `v^e` viewed as a polynomial in `v`.
    pub fn coefficient_of(&self, v: VarId, e: i32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == e)
                .map(|(m, c)| (m.without(v), c.clone())),
        )
    }

    /// Dense coefficient list in `v` for a polynomial whose only variable is
    /// `v` (or none), from `v^0` upward. Fails on negative exponents.
    pub fn univariate_coeffs(&self, v: VarId) -> Result<Vec<C>, PolyError> {
        let mut out: Vec<C> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e < 0 {
                return Err(PolyError::NegativeExponent(v));
            }
            if m.factors().len() > usize::from(e != 0) {
                return Err(PolyError::NoExpansion(format!(
                    "`{}` is not univariate in {v}",
                    text(self)
                )));
            }
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, C::zero());
            }
            out[e] = c.clone();
        }
        Ok(out)
    }

    /// Ring morphism sending each bound variable to its image. Unbound
    /// variables are left alone. Negative powers need the image to be a
    /// single monomial with coefficient ±1.
    pub fn substitute(&self, bindings: &HashMap<VarId, Self>) -> Result<Self, PolyError> {
        let mut cache: HashMap<(VarId, i32), Self> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for &(v, e) in m.factors() {
                match bindings.get(&v) {
                    None => kept.push((v, e)),
                    Some(image) => {
                        if !cache.contains_key(&(v, e)) {
                            let p = if e >= 0 {
                                image.pow(e as u32)
                            } else {
                                image.inverse_unit().ok_or(PolyError::NotInvertible(v))?.pow((-e) as u32)
                            };
                            cache.insert((v, e), p);
                        }
                        acc = &acc * &cache[&(v, e)];
                    }
                }
            }
            let rest = Monomial::from_factors(kept);
            out += &acc.mul_monomial(&rest);
        }
        Ok(out)
    }

    pub fn substitute_one(&self, v: VarId, image: &Self) -> Result<Self, PolyError> {
        let mut b = HashMap::new();
        b.insert(v, image.clone());
        self.substitute(&b)
    }

    /// Inverse of a unit `±m`.
    pub fn inverse_unit(&self) -> Option<Self> {
        let (m, c) = self.as_term()?;
        if c.is_one() || (-c.clone()).is_one() {
            Some(Self::term(Monomial::one().div(m), c.clone()))
        } else {
            None
        }
    }

    /// Truncated power series of `self / (1 - v)^m` in `v`, keeping powers
    /// `0..=order`. The numerator must not contain negative powers of `v`.
    pub fn series_quotient(&self, v: VarId, m: u32, order: usize) -> Result<Self, PolyError> {
        let terms = order + 1;
        if let Some((lo, _)) = self.degree_range(v) {
            if lo < 0 {
                return Err(PolyError::NegativeExponent(v));
            }
        }
        // coefficients of (1-v)^{-m} are C(m-1+j, j)
        let mut binom: Vec<C> = Vec::with_capacity(terms);
        let mut cur = C::one();
        for j in 0..terms {
            if j > 0 {
                cur = cur * C::from_u64((m as u64) + j as u64 - 1) / C::from_u64(j as u64);
            }
            binom.push(if m == 0 && j > 0 { C::zero() } else { cur.clone() });
        }
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let e = mono.exponent(v) as usize;
            let rest = mono.without(v);
            for (j, b) in binom.iter().enumerate() {
                let k = e + j;
                if k >= terms {
                    break;
                }
                out.add_term(
                    rest.mul(&Monomial::var_pow(v, k as i32)),
                    c.clone() * b.clone(),
                );
            }
        }
        Ok(out)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Self {
        self.map_monomials(|m| {
            m.map_vars(|v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
        })
    }

    /// Total degree if every term has the same degree in `vars`.
    pub fn homogeneous_degree(&self, vars: &[VarId]) -> Option<i64> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d: i64 = vars.iter().map(|v| m.exponent(*v) as i64).sum();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    /// Leading term in graded order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }
}

impl<C: Coeff> From<VarId> for Polynomial<C> {
    fn from(v: VarId) -> Self {
        Self::var(v)
    }
}

impl<C: Coeff> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coeff> MulAssign<&Polynomial<C>> for Polynomial<C> {
    fn mul_assign(&mut self, rhs: &Polynomial<C>) {
        *self = &*self * rhs;
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out += small;
        out
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca.clone() * cb.clone();
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c = c.clone() + prod.clone())
                    .or_insert(prod);
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Self) -> Polynomial<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$f(rhs)
            }
        }
        impl<C: Coeff> $tr<Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$f(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coeff> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut out = Self::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl<C: Coeff> std::iter::Product for Polynomial<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut out = Self::one();
        for p in iter {
            out = &out * &p;
        }
        out
    }
}

impl<C: Coeff> std::fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&text(self))
    }
}

impl<C: Coeff> std::str::FromStr for Polynomial<C> {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        parse_poly(s)
    }
}
