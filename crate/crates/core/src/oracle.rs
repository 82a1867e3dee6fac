//! Brute-force enumeration of the combinatorial classes behind each family,
//! used as independent ground truth.
//!
//! `stat_poly` returns `Σ_objects Π_s s^{stat_s(object)}`, with one variable
//! per requested statistic named after the statistic itself.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{Monomial, Poly, VarId};

/// Enumerations touching more objects than this are refused.
pub const MAX_OBJECTS: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{class} at n = {n} needs about {count} objects, above the limit {MAX_OBJECTS}")]
    TooLarge { class: String, n: usize, count: u128 },
    #[error("statistic `{stat}` is not defined on {class}")]
    UnknownStatistic { class: String, stat: String },
    #[error("bad parameters: {0}")]
    BadParams(String),
}

type Result<T> = std::result::Result<T, OracleError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectClass {
    Permutation,
    SignedPermutation,
    /// `k`-Stirling permutations of `{1^k, ..., n^k}`.
    StirlingPermutation(u32),
    /// Multiplicities of `1, 2, ...`; `n` must equal their count.
    MultisetPermutation(Vec<u32>),
    ListPartition,
    RootedLabeledTree,
    /// 0-1-2 increasing trees on `{0, ..., n-1}`.
    IncTree012,
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectClass::Permutation => f.write_str("permutation"),
            ObjectClass::SignedPermutation => f.write_str("signedPermutation"),
            ObjectClass::StirlingPermutation(k) => write!(f, "stirlingPermutation({k})"),
            ObjectClass::MultisetPermutation(m) => write!(f, "multisetPermutation({m:?})"),
            ObjectClass::ListPartition => f.write_str("listPartition"),
            ObjectClass::RootedLabeledTree => f.write_str("rootedLabeledTree"),
            ObjectClass::IncTree012 => f.write_str("incTree012"),
        }
    }
}

impl ObjectClass {
    /// `{1^p, ..., n^p}`.
    pub fn uniform_multiset(p: u32, n: usize) -> Self {
        ObjectClass::MultisetPermutation(vec![p; n])
    }

    pub fn statistics(&self) -> &'static [&'static str] {
        match self {
            ObjectClass::Permutation => &["des", "asc", "exc", "cyc", "ipk", "lpk", "val", "dd"],
            ObjectClass::SignedPermutation => &["desB"],
            ObjectClass::StirlingPermutation(_) => &["des", "asc", "plat", "ap", "lap", "fap"],
            ObjectClass::MultisetPermutation(_) => &["des"],
            ObjectClass::ListPartition => &["lists", "asc", "des", "val", "dd"],
            ObjectClass::RootedLabeledTree => &["improper"],
            ObjectClass::IncTree012 => &["leaves", "deg1"],
        }
    }

    /// Number of objects visited by the enumeration at `n`.
    fn effort(&self, n: usize) -> u128 {
        let n128 = n as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self {
            ObjectClass::Permutation => fact(n128),
            ObjectClass::SignedPermutation => fact(n128).saturating_mul(1u128 << n.min(100)),
            ObjectClass::StirlingPermutation(k) => {
                (1..=n128).map(|i| *k as u128 * (i - 1) + 1).product()
            }
            ObjectClass::MultisetPermutation(m) => {
                let total: u128 = m.iter().map(|v| *v as u128).sum();
                let mut acc = fact(total.min(34));
                for v in m {
                    acc /= fact(*v as u128);
                }
                acc
            }
            // set partitions into lists; bounded by (2n)!/n!
            ObjectClass::ListPartition => (n128 + 1..=2 * n128).product(),
            ObjectClass::RootedLabeledTree => n128.saturating_pow(n as u32),
            ObjectClass::IncTree012 => fact(n128),
        }
    }
}

/// `Σ Π s^{stat_s}` over all objects of size `n`.
pub fn stat_poly(cls: &ObjectClass, n: usize, stats: &[&str]) -> Result<Poly> {
    for s in stats {
        if !cls.statistics().contains(s) {
            return Err(OracleError::UnknownStatistic {
                class: cls.to_string(),
                stat: s.to_string(),
            });
        }
    }
    let count = cls.effort(n);
    if count > MAX_OBJECTS {
        return Err(OracleError::TooLarge {
            class: cls.to_string(),
            n,
            count,
        });
    }
    let mut acc: HashMap<Vec<i32>, u64> = HashMap::new();
    let mut record = |vals: Vec<i32>| *acc.entry(vals).or_default() += 1;
    match cls {
        ObjectClass::Permutation => {
            for_each_permutation(n, |p| record(stats.iter().map(|s| perm_stat(p, s)).collect()))
        }
        ObjectClass::SignedPermutation => for_each_signed_permutation(n, |p| {
            record(stats.iter().map(|_| des_b(p)).collect())
        }),
        ObjectClass::StirlingPermutation(k) => {
            if *k == 0 {
                return Err(OracleError::BadParams("k must be positive".into()));
            }
            for_each_stirling_permutation(n, *k, |p| {
                record(stats.iter().map(|s| stirling_stat(p, s)).collect())
            })
        }
        ObjectClass::MultisetPermutation(m) => {
            if m.len() != n {
                return Err(OracleError::BadParams(format!(
                    "{} multiplicities given for n = {n}",
                    m.len()
                )));
            }
            let mut word: Vec<u32> = m
                .iter()
                .enumerate()
                .flat_map(|(i, k)| std::iter::repeat_n(i as u32 + 1, *k as usize))
                .collect();
            loop {
                record(stats.iter().map(|_| descents(&word)).collect());
                if !next_permutation(&mut word) {
                    break;
                }
            }
        }
        ObjectClass::ListPartition => for_each_list_partition(n, |lists| {
            record(stats.iter().map(|s| list_stat(lists, s)).collect())
        }),
        ObjectClass::RootedLabeledTree => for_each_rooted_tree(n, |parent| {
            record(stats.iter().map(|_| improper_edges(parent)).collect())
        }),
        ObjectClass::IncTree012 => {
            if n == 0 {
                return Err(OracleError::BadParams("trees need n >= 1".into()));
            }
            for_each_tree012(n, |children| {
                record(stats.iter().map(|s| tree012_stat(children, s)).collect())
            })
        }
    }
    let vars: Vec<VarId> = stats.iter().map(|s| VarId::plain(s)).collect();
    Ok(Poly::from_terms(acc.into_iter().map(|(vals, k)| {
        let m = Monomial::from_factors(vars.iter().copied().zip(vals));
        (m, BigInt::from(k))
    })))
}

/// Number of down-up permutations `π1 > π2 < π3 > ...` of `[n]`.
pub fn down_up_count(n: usize) -> u64 {
    let mut k = 0;
    for_each_permutation(n, |p| {
        if p.windows(2).enumerate().all(|(i, w)| (w[0] > w[1]) == (i % 2 == 0)) {
            k += 1;
        }
    });
    k
}

/// Lexicographic successor; false when `w` was the last arrangement.
pub fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All permutations of `[n]` in one-line notation, lexicographically.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

pub fn for_each_signed_permutation(n: usize, mut visit: impl FnMut(&[i32])) {
    for_each_permutation(n, |p| {
        for mask in 0u32..(1 << n) {
            let s: Vec<i32> = p
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i32) } else { v as i32 })
                .collect();
            visit(&s);
        }
    });
}

/// Builds `k`-Stirling permutations by inserting the block `i^k` into every
/// gap of each order-`(i-1)` permutation.
pub fn for_each_stirling_permutation(n: usize, k: u32, mut visit: impl FnMut(&[u32])) {
    fn go(i: u32, n: u32, k: u32, w: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if i > n {
            visit(w);
            return;
        }
        for gap in 0..=w.len() {
            w.splice(gap..gap, std::iter::repeat_n(i, k as usize));
            go(i + 1, n, k, w, visit);
            w.drain(gap..gap + k as usize);
        }
    }
    go(1, n as u32, k, &mut Vec::new(), &mut visit);
}

/// Plain descents `w_i > w_{i+1}`, `i` in `[len-1]`.
pub fn descents<T: Ord>(w: &[T]) -> i32 {
    w.windows(2).filter(|p| p[0] > p[1]).count() as i32
}

fn perm_stat(p: &[u32], stat: &str) -> i32 {
    let n = p.len();
    // padded with zeros on both ends
    let at = |i: usize| if i == 0 || i > n { 0 } else { p[i - 1] };
    match stat {
        "des" => descents(p),
        "asc" => p.windows(2).filter(|w| w[0] < w[1]).count() as i32,
        "exc" => (1..n).filter(|&i| p[i - 1] as usize > i).count() as i32,
        "cyc" => cycles(p),
        "ipk" => (2..n).filter(|&i| at(i - 1) < at(i) && at(i) > at(i + 1)).count() as i32,
        "lpk" => (1..n).filter(|&i| at(i - 1) < at(i) && at(i) > at(i + 1)).count() as i32,
        "val" => (1..=n).filter(|&i| at(i - 1) > at(i) && at(i) < at(i + 1)).count() as i32,
        "dd" => (1..=n).filter(|&i| at(i - 1) > at(i) && at(i) > at(i + 1)).count() as i32,
        _ => unreachable!("validated"),
    }
}

fn cycles(p: &[u32]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut c = 0;
    for s in 0..p.len() {
        if !seen[s] {
            c += 1;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = p[j] as usize - 1;
            }
        }
    }
    c
}

/// `i` in `[0, n-1]` with `σ(i) > σ(i+1)`, `σ(0) = 0`.
fn des_b(s: &[i32]) -> i32 {
    let mut prev = 0;
    let mut d = 0;
    for &v in s {
        if prev > v {
            d += 1;
        }
        prev = v;
    }
    d
}

fn stirling_stat(w: &[u32], stat: &str) -> i32 {
    let len = w.len();
    // σ_0 = σ_{len+1} = 0
    let at = |i: usize| if i == 0 || i > len { 0 } else { w[i - 1] };
    let ap_at = |i: usize| at(i - 1) < at(i) && at(i) == at(i + 1);
    match stat {
        "des" => (1..=len).filter(|&i| at(i) > at(i + 1)).count() as i32,
        "asc" => (0..len).filter(|&i| at(i) < at(i + 1)).count() as i32,
        "plat" => (1..len).filter(|&i| at(i) == at(i + 1)).count() as i32,
        "ap" => (2..len).filter(|&i| ap_at(i)).count() as i32,
        "lap" => (1..len).filter(|&i| ap_at(i)).count() as i32,
        "fap" => (2..len).filter(|&i| ap_at(i)).count() as i32 + (1..len).filter(|&i| ap_at(i)).count() as i32,
        _ => unreachable!("validated"),
    }
}

/// Set partitions of `[n]` into linearly ordered lists, built by inserting
/// `i` into any position of an existing list or as a new list.
pub fn for_each_list_partition(n: usize, mut visit: impl FnMut(&[Vec<u32>])) {
    fn go(i: u32, n: u32, lists: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if i > n {
            visit(lists);
            return;
        }
        for l in 0..lists.len() {
            for pos in 0..=lists[l].len() {
                lists[l].insert(pos, i);
                go(i + 1, n, lists, visit);
                lists[l].remove(pos);
            }
        }
        lists.push(vec![i]);
        go(i + 1, n, lists, visit);
        lists.pop();
    }
    go(1, n as u32, &mut Vec::new(), &mut visit);
}

fn list_stat(lists: &[Vec<u32>], stat: &str) -> i32 {
    if stat == "lists" {
        return lists.len() as i32;
    }
    lists
        .iter()
        .map(|l| {
            let len = l.len();
            let at = |i: usize| if i == 0 || i > len { 0 } else { l[i - 1] };
            match stat {
                "asc" => (0..len).filter(|&p| at(p) < at(p + 1)).count() as i32,
                "des" => (1..=len).filter(|&q| at(q) > at(q + 1)).count() as i32,
                "val" => (1..=len).filter(|&i| at(i - 1) > at(i) && at(i) < at(i + 1)).count() as i32,
                "dd" => (1..=len).filter(|&i| at(i - 1) > at(i) && at(i) > at(i + 1)).count() as i32,
                _ => unreachable!("validated"),
            }
        })
        .sum()
}

/// Rooted trees on `[n]` as parent arrays (`parent[v] = None` at the root,
/// vertices zero based).
pub fn for_each_rooted_tree(n: usize, mut visit: impl FnMut(&[Option<usize>])) {
    if n == 0 {
        return;
    }
    let mut parent = vec![Some(0usize); n];
    let total = (n as u128).pow(n as u32);
    for code in 0..total {
        // digit v is parent of v; digit equal to v marks the root
        let mut c = code;
        let mut roots = 0;
        for v in 0..n {
            let d = (c % n as u128) as usize;
            c /= n as u128;
            parent[v] = if d == v {
                roots += 1;
                None
            } else {
                Some(d)
            };
        }
        if roots == 1 && acyclic(&parent) {
            visit(&parent);
        }
    }
}

fn acyclic(parent: &[Option<usize>]) -> bool {
    let n = parent.len();
    (0..n).all(|start| {
        let mut v = start;
        for _ in 0..n {
            match parent[v] {
                None => return true,
                Some(p) => v = p,
            }
        }
        false
    })
}

/// Edges `(u, v)`, `v` a child of `u`, whose subtree at `v` holds a vertex
/// smaller than `u`.
fn improper_edges(parent: &[Option<usize>]) -> i32 {
    let n = parent.len();
    let mut sub_min: Vec<usize> = (0..n).collect();
    for v in 0..n {
        let mut u = v;
        while let Some(p) = parent[u] {
            sub_min[p] = sub_min[p].min(v);
            u = p;
        }
    }
    (0..n)
        .filter(|&v| matches!(parent[v], Some(u) if sub_min[v] < u))
        .count() as i32
}

/// 0-1-2 increasing trees on `{0, ..., n-1}` as child lists; each vertex
/// `i > 0` hangs from an earlier vertex with fewer than two children.
pub fn for_each_tree012(n: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    fn go(i: usize, n: usize, ch: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if i == n {
            visit(ch);
            return;
        }
        for u in 0..i {
            if ch[u].len() < 2 {
                ch[u].push(i);
                go(i + 1, n, ch, visit);
                ch[u].pop();
            }
        }
    }
    let mut ch = vec![Vec::new(); n];
    go(1, n, &mut ch, &mut visit);
}

fn tree012_stat(children: &[Vec<usize>], stat: &str) -> i32 {
    let want = match stat {
        "leaves" => 0,
        "deg1" => 1,
        _ => unreachable!("validated"),
    };
    children.iter().filter(|c| c.len() == want).count() as i32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let perm = stat_poly(&ObjectClass::Permutation, 3, &["des"]).unwrap();
        assert_eq!(perm, p("1 + 4*des + des^2"));
        let st = ObjectClass::StirlingPermutation(2);
        assert_eq!(stat_poly(&st, 3, &["des"]).unwrap(), p("des + 8*des^2 + 6*des^3"));
        assert_eq!(
            stat_poly(&st, 3, &["fap"]).unwrap(),
            p("fap + 3*fap^2 + 7*fap^3 + 3*fap^4 + fap^5")
        );
        assert_eq!(
            stat_poly(&ObjectClass::RootedLabeledTree, 4, &["improper"]).unwrap(),
            p("6 + 18*improper + 25*improper^2 + 15*improper^3")
        );
        assert_eq!(
            stat_poly(&ObjectClass::SignedPermutation, 2, &["desB"]).unwrap(),
            p("1 + 6*desB + desB^2")
        );
    }

    #[test]
    fn trees_012() {
        let e = stat_poly(&ObjectClass::IncTree012, 4, &["leaves", "deg1"]).unwrap();
        assert_eq!(e, p("leaves*deg1^3 + 4*leaves^2*deg1"));
        assert_eq!(
            (0..7).map(down_up_count).collect::<Vec<_>>(),
            vec![1, 1, 1, 2, 5, 16, 61]
        );
    }

    #[test]
    fn list_partitions_follow_lah() {
        let lp = stat_poly(&ObjectClass::ListPartition, 3, &["lists"]).unwrap();
        assert_eq!(lp, p("6*lists + 6*lists^2 + lists^3"));
    }

    #[test]
    fn multiset_descents() {
        let m = ObjectClass::uniform_multiset(2, 2);
        assert_eq!(stat_poly(&m, 2, &["des"]).unwrap(), p("1 + 4*des + des^2"));
        assert!(stat_poly(&m, 3, &["des"]).is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            stat_poly(&ObjectClass::Permutation, 3, &["plat"]),
            Err(OracleError::UnknownStatistic { .. })
        ));
        assert!(matches!(
            stat_poly(&ObjectClass::Permutation, 12, &["des"]),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
