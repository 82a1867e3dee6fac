use std::fmt;
use std::str::FromStr;

/// An integer partition, parts weakly decreasing. The empty partition is
/// allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the given parts into decreasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|p| *p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `1^k`.
    pub fn ones(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `m[i]` is the number of parts equal to `i`, for `i` in `0..=max part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |p| *p as usize + 1)];
        for p in &self.parts {
            m[*p as usize] += 1;
        }
        m
    }

    /// All partitions of `n`, in reverse lexicographic order: `(n)` first,
    /// `1^n` last.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Accepts `2,1,1`, `(2,1,1)` and the empty string.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|v| *v > 0)
                    .ok_or_else(|| format!("bad part `{}`", t.trim()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_partition_numbers() {
        let p: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn order_and_parse() {
        let all = Partition::all(3);
        assert_eq!(all[0].parts(), &[3]);
        assert_eq!(all[2].parts(), &[1, 1, 1]);
        let p: Partition = "(1,2,1)".parse().unwrap();
        assert_eq!(p.parts(), &[2, 1, 1]);
        assert_eq!(p.to_string(), "(2,1,1)");
        assert_eq!(p.multiplicities(), vec![0, 2, 1]);
        assert!("1,0".parse::<Partition>().is_err());
    }
}
