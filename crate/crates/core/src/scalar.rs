//! Coefficient rings.
//!
//! Every polynomial in the crate is generic over an exact integer type. The
//! default everywhere is [`num_bigint::BigInt`]; the fixed-width integers are
//! accepted for callers that know their values stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// An exact, signed integer coefficient ring.
pub trait Coeff:
    Integer + Signed + Clone + Debug + Display + Hash + FromStr + From<i64> + Send + Sync + 'static
{
    /// Returns `self / rhs` when `rhs` divides `self` exactly.
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_u64(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(v) => Self::from(v),
            Err(_) => {
                // only reachable for BigInt-sized values
                let hi = Self::from((v >> 32) as i64);
                let lo = Self::from((v & 0xffff_ffff) as i64);
                hi * Self::from(1i64 << 32) + lo
            }
        }
    }
}

impl Coeff for BigInt {}
impl Coeff for i64 {}
impl Coeff for i128 {}
