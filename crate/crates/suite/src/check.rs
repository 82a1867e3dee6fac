//! What a single identity evaluation produces, plus shared polynomial
//! plumbing used by the route implementations.

use std::collections::HashMap;

use boxsort_core::boxsort::OwpError;
use boxsort_core::families::FamilyError;
use boxsort_core::grammar::GrammarError;
use boxsort_core::normalorder::NormalOrderError;
use boxsort_core::oracle::OracleError;
use boxsort_core::tableaux::{syt_sum, Tableau};
use boxsort_core::{Monomial, Poly, PolyError, VarId};
use num_bigint::BigInt;

/// A route failed to compute at all.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ComputeError(pub String);

macro_rules! from_err {
    ($($t:ty),*) => {$(
        impl From<$t> for ComputeError {
            fn from(e: $t) -> Self {
                ComputeError(e.to_string())
            }
        }
    )*};
}
from_err!(PolyError, GrammarError, NormalOrderError, FamilyError, OracleError, OwpError);

pub type Outcome = Result<Vec<Check>, ComputeError>;

#[derive(Debug, Clone)]
pub enum Check {
    /// Every route must give the same polynomial.
    Equal {
        label: String,
        routes: Vec<(String, Poly)>,
        notes: Vec<String>,
    },
    /// A property that is not an equation, such as a sign condition.
    Holds {
        label: String,
        ok: bool,
        detail: String,
    },
}

pub fn equal<S: Into<String>>(label: &str, routes: impl IntoIterator<Item = (S, Poly)>) -> Check {
    Check::Equal {
        label: label.to_string(),
        routes: routes.into_iter().map(|(s, p)| (s.into(), p)).collect(),
        notes: Vec::new(),
    }
}

pub fn holds(label: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check::Holds {
        label: label.to_string(),
        ok,
        detail: detail.into(),
    }
}

impl Check {
    pub fn note(mut self, s: impl Into<String>) -> Self {
        if let Check::Equal { notes, .. } = &mut self {
            notes.push(s.into());
        }
        self
    }
}

pub fn var(name: &str) -> VarId {
    VarId::plain(name)
}

pub fn pv(name: &str) -> Poly {
    Poly::var(var(name))
}

pub fn int(v: i64) -> Poly {
    Poly::from_int(v)
}

pub fn big(v: BigInt) -> Poly {
    Poly::constant(v)
}

/// `v^e` as a polynomial.
pub fn vpow(name: &str, e: i32) -> Poly {
    Poly::var_pow(var(name), e)
}

pub fn mono(factors: &[(&str, i32)]) -> Monomial {
    Monomial::from_factors(factors.iter().map(|(n, e)| (var(n), *e)))
}

/// Renames the oracle statistic variables.
pub fn rename(p: &Poly, pairs: &[(&str, &str)]) -> Poly {
    let map: HashMap<VarId, VarId> = pairs.iter().map(|(a, b)| (var(a), var(b))).collect();
    p.map_monomials(|m| m.map_vars(|v| *map.get(&v).unwrap_or(&v)))
}

pub fn set(p: &Poly, name: &str, value: &Poly) -> Result<Poly, ComputeError> {
    Ok(p.substitute_one(var(name), value)?)
}

/// `p(x -> x^k)` for a polynomial in `x`.
pub fn stretch(p: &Poly, name: &str, k: i32) -> Poly {
    let v = var(name);
    p.map_monomials(|m| {
        let e = m.exponent(v);
        m.without(v).mul(&Monomial::var_pow(v, e * k))
    })
}

/// Divides by a monomial.
pub fn div_mono(p: &Poly, m: &Monomial) -> Poly {
    p.mul_monomial(&Monomial::one().div(m))
}

/// Splits a Laurent polynomial as `m · q` with `q` free of negative powers
/// and of monomial content.
pub fn clear(p: &Poly) -> (Poly, Monomial) {
    let mut it = p.terms().map(|(m, _)| m.clone());
    let Some(first) = it.next() else {
        return (Poly::zero(), Monomial::one());
    };
    let g = it.fold(first, |a, b| a.gcd_exponents(&b));
    (div_mono(p, &g), g)
}

/// Univariate `Σ c_k x^k` from a coefficient list in `x`, homogenized as
/// `Σ c_k a^{k + s} b^{d - k}`.
pub fn ab_form(p: &Poly, x: &str, a: &str, shift: i32, b: &str, d: i32) -> Result<Poly, ComputeError> {
    let coeffs = p.univariate_coeffs(var(x))?;
    Ok(Poly::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| {
        let k = k as i32;
        (mono(&[(a, k + shift), (b, d - k)]), c)
    })))
}

/// `Σ_T Π_i box_index(T, i, m) · f(T, w, ℓ)` over SYT of size `n`.
pub fn indexed_sum(
    n: usize,
    m: u32,
    max_cols: Option<usize>,
    f: impl Fn(&Tableau, &[usize], usize) -> Poly,
) -> Poly {
    syt_sum(n, max_cols, |t| {
        let (w, ell) = t.weights();
        f(t, &w, ell).scale(&t.box_product(m))
    })
}

/// `w[i]`, zero past the end.
pub fn wt(w: &[usize], i: usize) -> i32 {
    w.get(i).copied().unwrap_or(0) as i32
}

pub fn factorial_poly(n: usize) -> Poly {
    big(boxsort_core::combinat::factorial(n as u64))
}
