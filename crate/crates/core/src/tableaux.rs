//! Standard Young tableaux (French convention: row 0 is the bottom, longest
//! row) and the box sorting indices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::partition::Partition;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("invalid tableau: {0}")]
    Invalid(String),
    #[error("entry {0} is not in the tableau")]
    NoEntry(u32),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates rows given bottom to top.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let bad = |m: String| Err(TableauError::Invalid(m));
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return bad("row lengths must weakly decrease upward".into());
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e as usize > n || seen[e as usize] {
                    return bad(format!("entries must be 1..{n} each once"));
                }
                seen[e as usize] = true;
                if j > 0 && row[j - 1] >= e {
                    return bad(format!("row {} is not increasing", r + 1));
                }
                if r > 0 && rows[r - 1][j] >= e {
                    return bad(format!("column {} is not increasing", j + 1));
                }
            }
        }
        Ok(Tableau { rows })
    }

    /// The one-row tableau `1 2 ... n`.
    pub fn single_row(n: u32) -> Self {
        Tableau {
            rows: vec![(1..=n).collect()],
        }
    }

    /// The one-column tableau with `1` at the bottom.
    pub fn single_column(n: u32) -> Self {
        Tableau {
            rows: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Number of rows, `ℓ(λ(T))`.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `(row, column)` of entry `i`, both zero based.
    pub fn position(&self, i: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&e| e == i).map(|c| (r, c)))
    }

    /// Sizes of the nonempty columns of the subtableau of entries `<= i`.
    pub fn col_profile(&self, i: u32) -> Vec<usize> {
        let mut cols = vec![0usize; self.num_cols()];
        for row in &self.rows {
            for (j, &e) in row.iter().enumerate() {
                if e <= i {
                    cols[j] += 1;
                }
            }
        }
        cols.retain(|c| *c > 0);
        cols
    }

    /// The order-`m` box sorting index of entry `i`: `m·i - col_1(T_i) - (m-2)`
    /// in the first column, else `col_{j-1}(T_i) - col_j(T_i) + 1`.
    pub fn box_index(&self, i: u32, m: u32) -> Result<u64, TableauError> {
        let (_, col) = self.position(i).ok_or(TableauError::NoEntry(i))?;
        let profile = self.col_profile(i);
        let v = if col == 0 {
            m as i64 * i as i64 - profile[0] as i64 - (m as i64 - 2)
        } else {
            profile[col - 1] as i64 - profile[col] as i64 + 1
        };
        // positive on valid tableaux: the subtableau T_i has a corner at i
        Ok(v.max(0) as u64)
    }

    /// `Π_i box_index(i, m)`.
    pub fn box_product(&self, m: u32) -> BigInt {
        (1..=self.size() as u32)
            .map(|i| BigInt::from(self.box_index(i, m).expect("entries 1..n")))
            .product()
    }

    /// `w[i]` is the number of rows of length `i` (index 0 unused), and the
    /// second value is the number of rows.
    pub fn weights(&self) -> (Vec<usize>, usize) {
        let mut w = vec![0usize; self.size() + 1];
        for row in &self.rows {
            w[row.len()] += 1;
        }
        (w, self.rows.len())
    }

    /// Entries `i` with `i + 1` in a higher row.
    pub fn descent_set(&self) -> Vec<u32> {
        let n = self.size() as u32;
        let row_of = |e: u32| self.position(e).expect("entry").0;
        (1..n).filter(|&i| row_of(i + 1) > row_of(i)).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    /// `1,3/2`: rows bottom to top.
    fn from_str(s: &str) -> Result<Self, TableauError> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| TableauError::Invalid(format!("bad entry `{}`", e.trim())))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Tableau::new(rows)
    }
}

/// Calls `visit` on every SYT of size `n` with at most `max_cols` columns.
///
/// Shapes come in reverse lexicographic order; within a shape, fillings come
/// in backtracking order, placing `1, 2, ...` in the lowest admissible row
/// first.
pub fn for_each_syt(n: usize, max_cols: Option<usize>, mut visit: impl FnMut(&Tableau)) {
    fn fill(
        i: u32,
        n: u32,
        shape: &[u32],
        rows: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        if i > n {
            visit(&Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] as usize && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(i);
                fill(i + 1, n, shape, rows, visit);
                rows[r].pop();
            }
        }
    }
    for lambda in Partition::all(n as u32) {
        if max_cols.is_some_and(|c| lambda.parts().first().copied().unwrap_or(0) as usize > c) {
            continue;
        }
        let mut rows = vec![Vec::new(); lambda.len()];
        fill(1, n as u32, lambda.parts(), &mut rows, &mut visit);
    }
}

pub fn enumerate_syt(n: usize, max_cols: Option<usize>) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_syt(n, max_cols, |t| out.push(t.clone()));
    out
}

/// `Σ_T (Π_i box_index(T,i,m)) (Π_i jets[i]^{w_i(T)}) base^{mn+1-ℓ(λ(T))}`,
/// over SYT of size `n` with at most `max_cols` columns. `jets[i]` is used
/// for rows of length `i`; `jets[0]` is ignored.
pub fn syt_expansion(
    n: usize,
    m: u32,
    max_cols: Option<usize>,
    base: &Poly,
    jets: &[Poly],
) -> Poly {
    assert!(jets.len() > n, "jets must cover row lengths 1..=n");
    syt_sum(n, max_cols, |t| {
        let (w, ell) = t.weights();
        let mut term = base.pow((m as usize * n + 1 - ell) as u32);
        for (i, &wi) in w.iter().enumerate().skip(1) {
            if wi > 0 {
                term = &term * &jets[i].pow(wi as u32);
            }
        }
        term.scale(&t.box_product(m))
    })
}

/// `Σ_T f(T)` over SYT of size `n` with at most `max_cols` columns.
pub fn syt_sum(n: usize, max_cols: Option<usize>, mut f: impl FnMut(&Tableau) -> Poly) -> Poly {
    let mut acc = Poly::zero();
    for_each_syt(n, max_cols, |t| acc += &f(t));
    acc
}
