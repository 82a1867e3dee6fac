//! Small exact counting helpers.

use num_bigint::BigInt;
use num_traits::One;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `Π_{i=1}^{n} (m(i-1) + 1)`: `n!` at `m = 1`, `(2n-1)!!` at `m = 2`.
pub fn box_count(n: u64, m: u64) -> BigInt {
    (1..=n).map(|i| BigInt::from(m * (i - 1) + 1)).product()
}
