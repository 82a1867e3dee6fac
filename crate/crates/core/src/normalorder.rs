//! Powers of `cD` and `c^k D` on jet variables `c[i] = D^i c`,
//! `f[i] = D^i f`, and the coefficients `F_{n,k}` and `a(n, λ)`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::grammar::{Grammar, GrammarError};
use crate::partition::Partition;
use crate::poly::{Monomial, Poly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalOrderError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

type Result<T> = std::result::Result<T, NormalOrderError>;

/// `c[i]`; `c[0]` plays the role of `c`.
pub fn c(i: u32) -> VarId {
    VarId::indexed("c", i)
}

/// `f[i]`.
pub fn f(i: u32) -> VarId {
    VarId::indexed("f", i)
}

/// The jet grammar `c[i] -> c[i+1]; f[i] -> f[i+1]` with a fixed index cap.
#[derive(Clone, Debug)]
pub struct JetContext {
    grammar: Grammar<BigInt>,
}

impl JetContext {
    pub fn new(max_index: u32) -> Result<Self> {
        if max_index == 0 {
            return Err(NormalOrderError::OutOfRange("max index must be positive".into()));
        }
        let grammar = Grammar::new()
            .with_family("c", "c[i+1]")
            .and_then(|g| g.with_family("f", "f[i+1]"))
            .expect("fixed templates parse")
            .with_max_index(max_index);
        Ok(JetContext { grammar })
    }

    /// Context large enough for `n` applications of `D`.
    pub fn for_power(n: usize) -> Self {
        Self::new(n as u32 + 1).expect("positive")
    }

    pub fn grammar(&self) -> &Grammar<BigInt> {
        &self.grammar
    }

    /// `[t, (wD)t, ..., (wD)^n t]` by direct iteration.
    pub fn weighted_powers(&self, w: &Poly, t: &Poly, n: usize) -> Result<Vec<Poly>> {
        let mut out = vec![t.clone()];
        for _ in 0..n {
            let next = w * &self.grammar.derive(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }
}

fn need_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(NormalOrderError::OutOfRange(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `(cD)^n f`.
pub fn cd_power_on_f(n: usize) -> Result<Poly> {
    need_positive("n", n)?;
    let ctx = JetContext::for_power(n);
    Ok(ctx
        .weighted_powers(&Poly::var(c(0)), &Poly::var(f(0)), n)?
        .pop()
        .expect("nonempty"))
}

/// `(c^k D)^n c`.
pub fn ckd_power_on_c(k: usize, n: usize) -> Result<Poly> {
    need_positive("k", k)?;
    need_positive("n", n)?;
    let ctx = JetContext::for_power(n);
    let w = Poly::var_pow(c(0), k as i32);
    Ok(ctx
        .weighted_powers(&w, &Poly::var(c(0)), n)?
        .pop()
        .expect("nonempty"))
}

/// `F_{n,k}`: the coefficient of `f[k]` in `(cD)^n f`.
pub fn extract_f(n: usize, k: usize) -> Result<Poly> {
    if k == 0 || k > n {
        return Err(NormalOrderError::OutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(cd_power_on_f(n)?.coefficient_of(f(k as u32), 1))
}

/// The monomial `c^{n-ℓ(λ)} Π c_{λ_i}`.
pub fn jet_monomial(n: usize, lambda: &Partition) -> Monomial {
    let mut fs: Vec<(VarId, i32)> = lambda.parts().iter().map(|p| (c(*p), 1)).collect();
    fs.push((c(0), n as i32 - lambda.len() as i32));
    Monomial::from_factors(fs)
}

/// Reads a jet monomial back as a partition: the parts are the positive
/// indices of the `c` factors, with multiplicity.
pub fn monomial_partition(m: &Monomial) -> Partition {
    let mut parts = Vec::new();
    let c_name = c(0).name();
    for (v, e) in m.factors() {
        if let (Some(i), true) = (v.index(), v.name() == c_name) {
            if i > 0 && *e > 0 {
                parts.extend(std::iter::repeat_n(i, *e as usize));
            }
        }
    }
    Partition::new(parts)
}

/// `a(n, λ)`.
pub fn extract_a(n: usize, lambda: &Partition) -> Result<BigInt> {
    let size = lambda.size() as usize;
    if n == 0 || size + 1 > n {
        return Err(NormalOrderError::OutOfRange(format!(
            "need |λ| <= n-1, got n={n}, λ={lambda}"
        )));
    }
    Ok(extract_f(n, n - size)?.coeff(&jet_monomial(n, lambda)))
}

/// The three classical triangles read off `(cD)^n f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    Stirling1,
    Stirling2,
    Eulerian,
}

impl FromStr for Projection {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "stirling1" => Ok(Projection::Stirling1),
            "stirling2" => Ok(Projection::Stirling2),
            "eulerian" => Ok(Projection::Eulerian),
            _ => Err(format!("unknown projection `{s}`")),
        }
    }
}

/// `Σ_{λ⊢n-k} a(n,λ)`, `a(n, 1^{n-k})`, or `Σ_{ℓ(λ)=n-k} a(n,λ)`.
pub fn project(kind: Projection, n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(NormalOrderError::OutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    match kind {
        Projection::Stirling1 => Ok(extract_f(n, k)?.terms().map(|(_, c)| c.clone()).sum()),
        Projection::Stirling2 => extract_a(n, &Partition::ones(n - k)),
        Projection::Eulerian => {
            let full = cd_power_on_f(n)?;
            let mut total = BigInt::zero();
            for (m, coeff) in full.terms() {
                if monomial_partition(m).len() == n - k {
                    total += coeff;
                }
            }
            Ok(total)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn table_rows() {
        assert_eq!(cd_power_on_f(1).unwrap(), p("c[0]*f[1]"));
        assert_eq!(
            cd_power_on_f(3).unwrap(),
            p("c[0]*c[1]^2*f[1] + c[0]^2*c[2]*f[1] + 3*c[0]^2*c[1]*f[2] + c[0]^3*f[3]")
        );
        assert_eq!(extract_f(4, 1).unwrap(), p("c[0]*c[1]^3 + 4*c[0]^2*c[1]*c[2] + c[0]^3*c[3]"));
        assert_eq!(extract_f(4, 2).unwrap(), p("7*c[0]^2*c[1]^2 + 4*c[0]^3*c[2]"));
        assert_eq!(extract_f(2, 2).unwrap(), p("c[0]^2"));
        assert!(extract_f(3, 4).is_err());
        assert!(cd_power_on_f(0).is_err());
    }

    #[test]
    fn ckd_examples() {
        assert_eq!(
            ckd_power_on_c(2, 3).unwrap(),
            p("c[0]^6*c[3] + 8*c[0]^5*c[1]*c[2] + 6*c[0]^4*c[1]^3")
        );
        assert_eq!(ckd_power_on_c(1, 2).unwrap(), p("c[0]*c[1]^2 + c[0]^2*c[2]"));
        assert_eq!(ckd_power_on_c(2, 1).unwrap(), p("c[0]^2*c[1]"));
    }

    #[test]
    fn a_values() {
        assert_eq!(extract_a(4, &"1,1".parse().unwrap()).unwrap(), BigInt::from(7));
        assert_eq!(extract_a(4, &"2,1".parse().unwrap()).unwrap(), BigInt::from(4));
        for n in 1..=6 {
            assert_eq!(extract_a(n, &Partition::empty()).unwrap(), BigInt::from(1));
        }
        assert!(extract_a(3, &"3".parse().unwrap()).is_err());
    }

    #[test]
    fn projections() {
        assert_eq!(project(Projection::Stirling2, 4, 2).unwrap(), BigInt::from(7));
        assert_eq!(project(Projection::Stirling1, 5, 5).unwrap(), BigInt::from(1));
        assert_eq!(project(Projection::Eulerian, 4, 2).unwrap(), BigInt::from(11));
    }
}
