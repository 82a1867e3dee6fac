//! Named polynomial families and number triangles.
//!
//! Most families come from an Eulerian-type recurrence
//! `P_{n+1} = α_n(x) P_n + β(x) P_n'`. The few defined only through a
//! grammar are produced by derivation and then dehomogenized.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinat::binomial;
use crate::grammar::{Grammar, GrammarError};
use crate::poly::{Poly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

type Result<T> = std::result::Result<T, FamilyError>;

pub fn x() -> VarId {
    VarId::plain("x")
}
pub fn y() -> VarId {
    VarId::plain("y")
}
pub fn z() -> VarId {
    VarId::plain("z")
}

fn px() -> Poly {
    Poly::var(x())
}

fn int(v: i64) -> Poly {
    Poly::from_int(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    EulerianA,
    EulerianABiv,
    EulerianB,
    KInvEulerian(u32),
    SecondOrder,
    SecondOrderTri,
    KOrder(u32),
    FlagAP,
    InteriorPeak,
    LeftPeak,
    NarayanaA,
    NarayanaB,
    Ramanujan,
    Andre,
    Hermite,
    LsDescent,
    MultisetDescent2,
}

impl FamilyId {
    pub const NAMES: [&'static str; 17] = [
        "eulerianA",
        "eulerianA_biv",
        "eulerianB",
        "kInvEulerian",
        "secondOrder",
        "secondOrderTri",
        "kOrder",
        "flagAP",
        "interiorPeak",
        "leftPeak",
        "narayanaA",
        "narayanaB",
        "ramanujan",
        "andre",
        "hermite",
        "lsDescent",
        "multisetDescent2",
    ];

    /// Resolves a catalog name; `kInvEulerian` and `kOrder` need `k >= 1`,
    /// the rest take no parameter.
    pub fn parse(name: &str, param: Option<i64>) -> Result<Self> {
        let needs_k = matches!(name, "kInvEulerian" | "kOrder");
        let k = match (needs_k, param) {
            (true, Some(k)) if k >= 1 && k <= u32::MAX as i64 => k as u32,
            (true, Some(k)) => return Err(FamilyError::BadParams(format!("{name} needs k >= 1, got {k}"))),
            (true, None) => return Err(FamilyError::BadParams(format!("{name} needs a parameter k"))),
            (false, Some(_)) if Self::NAMES.contains(&name) => {
                return Err(FamilyError::BadParams(format!("{name} takes no parameter")))
            }
            _ => 0,
        };
        Ok(match name {
            "eulerianA" => FamilyId::EulerianA,
            "eulerianA_biv" => FamilyId::EulerianABiv,
            "eulerianB" => FamilyId::EulerianB,
            "kInvEulerian" => FamilyId::KInvEulerian(k),
            "secondOrder" => FamilyId::SecondOrder,
            "secondOrderTri" => FamilyId::SecondOrderTri,
            "kOrder" => FamilyId::KOrder(k),
            "flagAP" => FamilyId::FlagAP,
            "interiorPeak" => FamilyId::InteriorPeak,
            "leftPeak" => FamilyId::LeftPeak,
            "narayanaA" => FamilyId::NarayanaA,
            "narayanaB" => FamilyId::NarayanaB,
            "ramanujan" => FamilyId::Ramanujan,
            "andre" => FamilyId::Andre,
            "hermite" => FamilyId::Hermite,
            "lsDescent" => FamilyId::LsDescent,
            "multisetDescent2" => FamilyId::MultisetDescent2,
            _ => return Err(FamilyError::UnknownFamily(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::EulerianA => "eulerianA",
            FamilyId::EulerianABiv => "eulerianA_biv",
            FamilyId::EulerianB => "eulerianB",
            FamilyId::KInvEulerian(_) => "kInvEulerian",
            FamilyId::SecondOrder => "secondOrder",
            FamilyId::SecondOrderTri => "secondOrderTri",
            FamilyId::KOrder(_) => "kOrder",
            FamilyId::FlagAP => "flagAP",
            FamilyId::InteriorPeak => "interiorPeak",
            FamilyId::LeftPeak => "leftPeak",
            FamilyId::NarayanaA => "narayanaA",
            FamilyId::NarayanaB => "narayanaB",
            FamilyId::Ramanujan => "ramanujan",
            FamilyId::Andre => "andre",
            FamilyId::Hermite => "hermite",
            FamilyId::LsDescent => "lsDescent",
            FamilyId::MultisetDescent2 => "multisetDescent2",
        }
    }

    /// Largest `n` accepted by [`family`].
    pub fn max_n(&self) -> usize {
        match self {
            FamilyId::SecondOrderTri => 12,
            FamilyId::Andre | FamilyId::LsDescent | FamilyId::MultisetDescent2 => 16,
            FamilyId::EulerianABiv => 30,
            _ => 40,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::KInvEulerian(k) | FamilyId::KOrder(k) => write!(f, "{}({k})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

/// `[P_0, ..., P_n]` for `P_{i+1} = α(i) P_i + β P_i'` in `x`.
fn eulerian_type(init: Poly, n: usize, alpha: impl Fn(i64) -> Poly, beta: Poly) -> Vec<Poly> {
    let mut out = vec![init];
    for i in 0..n {
        let p = out.last().expect("nonempty");
        let next = &alpha(i as i64) * p + &beta * &p.partial_derivative(x());
        out.push(next);
    }
    out
}

/// `x(1 - x)`.
fn x_one_minus_x() -> Poly {
    &px() - &px().pow(2)
}

/// The family at `n`.
pub fn family(id: FamilyId, n: usize) -> Result<Poly> {
    Ok(family_seq(id, n)?.pop().expect("nonempty"))
}

/// `[P_0, ..., P_n]`; for `ramanujan`, whose first member is `R_1`, entry 0
/// is unused and set to zero.
pub fn family_seq(id: FamilyId, n: usize) -> Result<Vec<Poly>> {
    if n > id.max_n() {
        return Err(FamilyError::OutOfRange(format!("{id} is bounded by n <= {}", id.max_n())));
    }
    let xx = px();
    Ok(match id {
        FamilyId::EulerianA => {
            eulerian_type(Poly::one(), n, |i| &int(i + 1) * &xx, x_one_minus_x())
        }
        FamilyId::EulerianABiv => family_seq(FamilyId::EulerianA, n)?
            .into_iter()
            .enumerate()
            .map(|(i, a)| if i == 0 { a } else { homogenize(&a, i as i32 + 1) })
            .collect(),
        FamilyId::EulerianB => eulerian_type(
            Poly::one(),
            n,
            |i| &int(1) + &(&int(2 * i + 1) * &xx),
            x_one_minus_x().scale(&BigInt::from(2)),
        ),
        FamilyId::KInvEulerian(k) => {
            let k = k as i64;
            eulerian_type(
                Poly::one(),
                n,
                |i| &int(1) + &(&int(i * k) * &xx),
                x_one_minus_x().scale(&BigInt::from(k)),
            )
        }
        FamilyId::SecondOrder => family_seq(FamilyId::KOrder(2), n)?,
        FamilyId::KOrder(k) => {
            let k = k as i64;
            eulerian_type(Poly::one(), n, |i| &int(1 + k * i) * &xx, x_one_minus_x())
        }
        FamilyId::FlagAP => eulerian_type(
            Poly::one(),
            n,
            |i| &xx + &(&int(2 * i) * &xx.pow(2)),
            &xx - &xx.pow(3),
        ),
        FamilyId::InteriorPeak => {
            let mut seq = vec![Poly::one()];
            if n >= 1 {
                // W_{j+1} = (jx - x + 2) W_j + 2x(1-x) W_j' from j = 1
                seq.extend(eulerian_type(
                    Poly::one(),
                    n - 1,
                    |i| &(&int(i) * &xx) + &int(2),
                    x_one_minus_x().scale(&BigInt::from(2)),
                ));
            }
            seq
        }
        FamilyId::LeftPeak => eulerian_type(
            Poly::one(),
            n,
            |i| &(&int(i) * &xx) + &int(1),
            x_one_minus_x().scale(&BigInt::from(2)),
        ),
        FamilyId::Ramanujan => {
            if n == 0 {
                return Err(FamilyError::OutOfRange("ramanujan starts at n = 1".into()));
            }
            let mut seq = vec![Poly::zero()];
            // R_{i+1} = i(1+x) R_i + x^2 R_i', indexed from R_1
            seq.extend(eulerian_type(
                Poly::one(),
                n - 1,
                |i| &int(i + 1) * &(&int(1) + &xx),
                xx.pow(2),
            ));
            seq
        }
        FamilyId::Hermite => {
            let mut seq = vec![Poly::one()];
            for _ in 0..n {
                let h = seq.last().expect("nonempty");
                let next = &(&int(2) * &(&xx * h)) - &h.partial_derivative(x());
                seq.push(next);
            }
            seq
        }
        FamilyId::NarayanaA => (0..=n as u64).map(narayana_a).collect(),
        FamilyId::NarayanaB => (0..=n as u64)
            .map(|m| Poly::univariate(x(), (0..=m).map(|k| binomial(m, k).pow(2))))
            .collect(),
        FamilyId::SecondOrderTri => {
            let g = Grammar::parse("x -> x*y*z; y -> x*y*z; z -> x*y*z")?;
            let mut seq = g.derive_seq(&xx, n)?;
            seq[0] = Poly::one();
            seq
        }
        FamilyId::Andre => andre_grammar().derive_seq(&Poly::var(y()), n)?,
        FamilyId::LsDescent => {
            let mut seq: Vec<Poly> = alternating_seq("a -> b^3; b -> b^3", n)?
                .iter()
                .map(dehomogenize_ab)
                .collect::<Result<_>>()?;
            // the grammar identity starts at n = 1
            seq[0] = Poly::one();
            seq
        }
        FamilyId::MultisetDescent2 => {
            let raw = alternating_seq("a -> b^2; b -> b^2", n)?;
            let mut seq = Vec::with_capacity(n + 1);
            for (i, p) in raw.into_iter().enumerate() {
                // 2^i · a · b^{2i} · P(a/b)
                let q = dehomogenize_ab(&p)?;
                let q = q
                    .exact_div_scalar(&BigInt::from(2).pow(i as u32))
                    .ok_or_else(|| FamilyError::OutOfRange("inexact 2^n division".into()))?;
                seq.push(q.mul_monomial(&crate::poly::Monomial::var_pow(x(), -1)));
            }
            seq
        }
    })
}

/// `{x -> x*y, y -> x}`.
pub fn andre_grammar() -> Grammar<BigInt> {
    Grammar::parse("x -> x*y; y -> x").expect("fixed grammar")
}

/// `[a, (D2 D1) a, ..., (D2 D1)^n a]` with `G1 = {a -> a^2, b -> a^2}`.
pub fn alternating_seq(g2: &str, n: usize) -> Result<Vec<Poly>> {
    let g1: Grammar<BigInt> = Grammar::parse("a -> a^2; b -> a^2")?;
    let g2: Grammar<BigInt> = Grammar::parse(g2)?;
    let mut out = vec![Poly::var(VarId::plain("a"))];
    for _ in 0..n {
        let last = out.last().expect("nonempty");
        let next = g2.derive(&g1.derive(last)?)?;
        out.push(next);
    }
    Ok(out)
}

/// `p(a = x, b = 1)`.
fn dehomogenize_ab(p: &Poly) -> Result<Poly> {
    let mut b = std::collections::HashMap::new();
    b.insert(VarId::plain("a"), px());
    b.insert(VarId::plain("b"), Poly::one());
    p.substitute(&b).map_err(|e| FamilyError::Grammar(e.into()))
}

/// `y^d p(x/y)` for univariate `p` in `x` of degree at most `d`.
pub fn homogenize(p: &Poly, d: i32) -> Poly {
    p.map_monomials(|m| {
        let e = m.exponent(x());
        crate::poly::Monomial::from_factors([(x(), e), (y(), d - e)])
    })
}

/// `N(A_n, x) = Σ_k C(n+1,k+1) C(n+1,k) / (n+1) x^k`, exact division.
fn narayana_a(n: u64) -> Poly {
    Poly::univariate(
        x(),
        (0..=n).map(|k| {
            let num = binomial(n + 1, k + 1) * binomial(n + 1, k);
            let d = BigInt::from(n + 1);
            assert!((&num % &d).is_zero(), "Narayana numbers are integral");
            num / d
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberTable {
    Stirling1,
    Stirling2,
    EulerianNum,
    Lah,
    LegendreStirling,
    RamanujanImproper,
}

impl std::str::FromStr for NumberTable {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "stirling1" => NumberTable::Stirling1,
            "stirling2" => NumberTable::Stirling2,
            "eulerianNum" => NumberTable::EulerianNum,
            "lah" => NumberTable::Lah,
            "legendreStirling" => NumberTable::LegendreStirling,
            "ramanujanImproper" => NumberTable::RamanujanImproper,
            _ => return Err(FamilyError::UnknownFamily(s.to_string())),
        })
    }
}

/// Rows `0..=n` of a triangle `T(i, j) = T(i-1, j-1)·u(i,j) + T(i-1, j)·v(i,j)`
/// with `T(0,0) = 1`.
fn triangle(n: usize, rule: impl Fn(i64, i64) -> (i64, i64)) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let get = |j: i64| -> BigInt {
            if j < 0 || j as usize >= prev.len() {
                BigInt::zero()
            } else {
                prev[j as usize].clone()
            }
        };
        let row = (0..=i as i64)
            .map(|j| {
                let (u, v) = rule(i as i64, j);
                get(j - 1) * BigInt::from(u) + get(j) * BigInt::from(v)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Full table rows `0..=n`.
pub fn number_rows(kind: NumberTable, n: usize) -> Result<Vec<Vec<BigInt>>> {
    Ok(match kind {
        NumberTable::Stirling1 => triangle(n, |i, _| (1, i - 1)),
        NumberTable::Stirling2 => triangle(n, |_, j| (1, j)),
        NumberTable::EulerianNum => triangle(n, |i, j| (i - j + 1, j)),
        NumberTable::Lah => triangle(n, |i, j| (1, i - 1 + j)),
        NumberTable::LegendreStirling => triangle(n, |_, j| (1, j * (j + 1))),
        NumberTable::RamanujanImproper => {
            let seq = family_seq(FamilyId::Ramanujan, n.max(1))?;
            let mut rows = vec![vec![BigInt::zero()]];
            for r in seq.iter().take(n + 1).skip(1) {
                rows.push(r.univariate_coeffs(x()).map_err(|e| FamilyError::Grammar(e.into()))?);
            }
            rows
        }
    })
}

/// A single table value.
pub fn number_table(kind: NumberTable, n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(FamilyError::OutOfRange(format!("need k <= n, got n={n}, k={k}")));
    }
    if kind == NumberTable::RamanujanImproper && n == 0 {
        return Err(FamilyError::OutOfRange("ramanujanImproper starts at n = 1".into()));
    }
    let rows = number_rows(kind, n)?;
    Ok(rows[n].get(k).cloned().unwrap_or_default())
}
