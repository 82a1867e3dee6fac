//! Ordered weak set partitions produced by the box sorting process, their
//! weights, and the map `φ` onto standard Young tableaux.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::normalorder::c;
use crate::poly::{Monomial, Poly};
use crate::tableaux::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OwpError {
    #[error("invalid ordered weak partition: {0}")]
    Invalid(String),
}

/// `m·n + 1` possibly empty blocks; block 0 holds `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Owp {
    order: u32,
    blocks: Vec<Vec<u32>>,
}

impl Owp {
    /// Validates the block conditions for order `m`.
    pub fn new(order: u32, blocks: Vec<Vec<u32>>) -> Result<Self, OwpError> {
        let bad = |s: &str| Err(OwpError::Invalid(s.to_string()));
        if order == 0 {
            return bad("order must be positive");
        }
        let slots = blocks.len();
        if slots == 0 || !(slots - 1).is_multiple_of(order as usize) {
            return bad("block count must be m*n+1");
        }
        let n = (slots - 1) / order as usize;
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &e in b {
                if e == 0 || e as usize > n || seen[e as usize] {
                    return bad("blocks must partition 1..n");
                }
                seen[e as usize] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return bad("blocks must partition 1..n");
        }
        if n > 0 && !blocks[0].contains(&1) {
            return bad("1 must lie in the first block");
        }
        for (slot, b) in blocks.iter().enumerate().skip(1) {
            // slot was opened right after inserting i
            let i = (slot - 1) / order as usize + 1;
            if let Some(min) = b.iter().min() {
                if *min as usize <= i {
                    return bad("a block opened after i must have minimum above i");
                }
            }
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(Owp { order, blocks })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        (self.blocks.len() - 1) / self.order as usize
    }

    /// `Π_B c[|B|]` over all blocks, empty ones included.
    pub fn weight(&self) -> Poly {
        let m = Monomial::from_factors(self.blocks.iter().map(|b| (c(b.len() as u32), 1)));
        Poly::term(m, BigInt::from(1))
    }

    /// `φ`: drop empty blocks, order rows by decreasing length (stable),
    /// then sort each column increasingly.
    pub fn phi(&self) -> Tableau {
        let mut rows: Vec<Vec<u32>> = self.blocks.iter().filter(|b| !b.is_empty()).cloned().collect();
        rows.sort_by_key(|r| std::cmp::Reverse(r.len()));
        let width = rows.first().map_or(0, Vec::len);
        for j in 0..width {
            let mut col: Vec<u32> = rows.iter().filter_map(|r| r.get(j).copied()).collect();
            col.sort_unstable();
            for (r, v) in rows.iter_mut().filter(|r| r.len() > j).zip(col) {
                r[j] = v;
            }
        }
        Tableau::new(rows).expect("column sorting of row-increasing blocks gives an SYT")
    }
}

impl fmt::Display for Owp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                if b.is_empty() {
                    "-".to_string()
                } else {
                    b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl Owp {
    /// Parses `1,3|2|-|-` at the given order.
    pub fn parse(s: &str, order: u32) -> Result<Self, OwpError> {
        let blocks = s
            .split('|')
            .map(|b| {
                let b = b.trim();
                if b == "-" {
                    return Ok(Vec::new());
                }
                b.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| OwpError::Invalid(format!("bad entry `{}`", e.trim())))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Owp::new(order, blocks)
    }
}

impl FromStr for Owp {
    type Err = OwpError;

    /// Order-1 form.
    fn from_str(s: &str) -> Result<Self, OwpError> {
        Owp::parse(s, 1)
    }
}

/// Visits every OWP of `[n]` at order `m` by running the insertion process:
/// `i` enters one of the `m(i-1)+1` open boxes, then `m` empty boxes open.
pub fn for_each_owp(n: usize, m: u32, mut visit: impl FnMut(&Owp)) {
    fn go(i: u32, n: u32, m: u32, blocks: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&Owp)) {
        if i > n {
            visit(&Owp {
                order: m,
                blocks: blocks.clone(),
            });
            return;
        }
        for slot in 0..blocks.len() {
            blocks[slot].push(i);
            blocks.extend(std::iter::repeat_n(Vec::new(), m as usize));
            go(i + 1, n, m, blocks, visit);
            blocks.truncate(blocks.len() - m as usize);
            blocks[slot].pop();
        }
    }
    assert!(m > 0, "order must be positive");
    let mut blocks = vec![Vec::new()];
    go(1, n as u32, m, &mut blocks, &mut visit);
}

pub fn enumerate_owp(n: usize, m: u32) -> Vec<Owp> {
    let mut out = Vec::new();
    for_each_owp(n, m, |p| out.push(p.clone()));
    out
}

/// `Σ_p w(p)` over all OWPs of `[n]` at order `m`.
pub fn weight_sum(n: usize, m: u32) -> Poly {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for_each_owp(n, m, |p| {
        let m = Monomial::from_factors(p.blocks.iter().map(|b| (c(b.len() as u32), 1)));
        *counts.entry(m).or_default() += 1;
    });
    Poly::from_terms(counts.into_iter().map(|(m, k)| (m, BigInt::from(k))))
}

/// Size of every nonempty fiber of `φ` at order `m`.
pub fn fiber_counts(n: usize, m: u32) -> HashMap<Tableau, u64> {
    let mut out = HashMap::new();
    for_each_owp(n, m, |p| *out.entry(p.phi()).or_default() += 1);
    out
}

/// `#φ^{-1}(T)` at order `m`, by enumeration.
pub fn fiber_count(t: &Tableau, m: u32) -> u64 {
    let mut k = 0;
    for_each_owp(t.size(), m, |p| {
        if p.phi() == *t {
            k += 1;
        }
    });
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let one = enumerate_owp(1, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "1|-");
        assert_eq!(enumerate_owp(3, 1).len(), 6);
        assert_eq!(enumerate_owp(3, 2).len(), 15);
        assert!(enumerate_owp(4, 2).iter().all(|p| Owp::new(2, p.blocks.clone()).is_ok()));
    }

    #[test]
    fn weights() {
        let p: Owp = "1,2|-|-".parse().unwrap();
        assert_eq!(p.weight(), "c[0]^2*c[2]".parse().unwrap());
        let q: Owp = "1|2|3|-".parse().unwrap();
        assert_eq!(q.weight(), "c[0]*c[1]^3".parse().unwrap());
        assert_eq!(
            weight_sum(3, 2),
            "c[0]^6*c[3] + 8*c[0]^5*c[1]*c[2] + 6*c[0]^4*c[1]^3".parse().unwrap()
        );
    }

    #[test]
    fn phi_examples() {
        let t = |s: &str| s.parse::<Tableau>().unwrap();
        assert_eq!("1,3|2|-|-".parse::<Owp>().unwrap().phi(), t("1,3/2"));
        assert_eq!("1,2,3|-|-|-".parse::<Owp>().unwrap().phi(), t("1,2,3"));
        assert_eq!("1|2,3|-|-".parse::<Owp>().unwrap().phi(), t("1,3/2"));
    }

    #[test]
    fn fibers_at_three() {
        let t = |s: &str| s.parse::<Tableau>().unwrap();
        assert_eq!(fiber_count(&t("1,2,3"), 1), 1);
        assert_eq!(fiber_count(&t("1,3/2"), 1), 2);
        assert_eq!(fiber_count(&t("1,2/3"), 1), 2);
        assert_eq!(fiber_count(&t("1/2/3"), 1), 1);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!("2|1|-|-".parse::<Owp>().is_err());
        assert!("1|2,3|-".parse::<Owp>().is_err());
        assert!("1|-|2|-".parse::<Owp>().is_err());
        assert!("1,2|-|2|-".parse::<Owp>().is_err());
        assert!("1,3|-|2|-".parse::<Owp>().is_err());
    }
}
