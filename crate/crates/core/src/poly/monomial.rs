use std::cmp::Ordering;

use smallvec::SmallVec;

use super::VarId;

/// A Laurent monomial: variables with nonzero integer exponents, sorted by
/// variable. The empty monomial is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[(VarId, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        let mut m = Monomial::one();
        if e != 0 {
            m.0.push((v, e));
        }
        m
    }

    /// Builds a monomial from unsorted factors, merging repeated variables.
    pub fn from_factors<I: IntoIterator<Item = (VarId, i32)>>(factors: I) -> Self {
        let mut v: SmallVec<[(VarId, i32); 4]> = factors.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(VarId, i32); 4]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|p| p.1 > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, 1)
    }

    /// `self / other`, always defined for Laurent monomials.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.merge(other, -1)
    }

    fn merge(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|p| (p.0, sign * p.1)));
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|p| (p.0, p.1 * k)).collect())
    }

    /// The monomial with `v` removed.
    pub fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().copied().filter(|p| p.0 != v).collect())
    }

    /// Componentwise minimum of exponents, treating absent variables as 0.
    pub fn gcd_exponents(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(v, _) in self.0.iter().chain(other.0.iter()) {
            let m = self.exponent(v).min(other.exponent(v));
            if m != 0 {
                out.push((v, m));
            }
        }
        out.sort_by_key(|p| p.0);
        out.dedup();
        Monomial(out.into_iter().collect())
    }

    /// Renames variables; colliding images are merged.
    pub fn map_vars(&self, mut f: impl FnMut(VarId) -> VarId) -> Monomial {
        Monomial::from_factors(self.0.iter().map(|p| (f(p.0), p.1)))
    }
}

impl Ord for Monomial {
    /// Graded order: total degree first, then at the first variable where
    /// the exponents differ, the smaller exponent comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let (va, vb) = (a.get(i), b.get(j));
            // exponents at the smaller of the two current variables
            let (ea, eb, step_a, step_b) = match (va, vb) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => (x.1, 0, 1, 0),
                (None, Some(y)) => (0, y.1, 0, 1),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Less => (x.1, 0, 1, 0),
                    Ordering::Greater => (0, y.1, 0, 1),
                    Ordering::Equal => (x.1, y.1, 1, 1),
                },
            };
            match ea.cmp(&eb) {
                Ordering::Equal => {
                    i += step_a;
                    j += step_b;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
