//! Exact counting arithmetic.
//!
//! All results are exact nonnegative integers.  The matrix pipeline is
//! generic over a [`CountScalar`] backend: `u128` is the fast fixed-width
//! path in which every operation is overflow-checked, and [`Count`]
//! itself is the unbounded bignum fallback.  Overflow is always detected
//! and surfaced as [`Error::Overflow`](crate::Error::Overflow), never
//! wrapped; with [`Backend::Auto`] a computation that overflows the
//! fixed-width path is rerun on bignums.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Exact arbitrary-precision nonnegative integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The value as a `u128`, if it fits.
    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

macro_rules! count_from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Count {
            fn from(v: $t) -> Self {
                Count(BigUint::from(v))
            }
        }
    )*};
}
count_from_prim!(u8, u16, u32, u64, u128, usize);

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Count {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidCount { text: s.to_owned() });
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(Count)
            .ok_or_else(|| Error::InvalidCount { text: s.to_owned() })
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl Add<&Count> for &Count {
    type Output = Count;
    fn add(self, rhs: &Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl Mul<&Count> for &Count {
    type Output = Count;
    fn mul(self, rhs: &Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

/// Requested arithmetic backend.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Backend {
    /// Fixed-width first, rerun on bignums if it overflows.
    Auto,
    /// Checked `u128` only; overflow is an error.
    Fixed128,
    /// Arbitrary precision throughout.
    Bignum,
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "auto" => Ok(Backend::Auto),
            "fixed128" => Ok(Backend::Fixed128),
            "bignum" => Ok(Backend::Bignum),
            other => Err(Error::InvalidCount {
                text: format!("unknown backend {other:?}, expected auto|fixed128|bignum"),
            }),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Auto => "auto",
            Backend::Fixed128 => "fixed128",
            Backend::Bignum => "bignum",
        })
    }
}

/// Backend that actually produced a result.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BackendKind {
    Fixed128,
    Bignum,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BackendKind::Fixed128 => "fixed128",
            BackendKind::Bignum => "bignum",
        })
    }
}

/// Scalar usable inside the counting matrices.
///
/// Implementations must be exact: an operation either returns the true
/// value or reports `None` for "does not fit".  Wrapping is forbidden.
pub trait CountScalar: Clone + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn checked_add(&self, rhs: &Self) -> Option<Self>;
    fn checked_mul(&self, rhs: &Self) -> Option<Self>;

    /// `acc <- acc + a * b`; returns `false` if the result does not fit.
    fn checked_mul_acc(acc: &mut Self, a: &Self, b: &Self) -> bool {
        match a.checked_mul(b).and_then(|p| acc.checked_add(&p)) {
            Some(v) => {
                *acc = v;
                true
            }
            None => false,
        }
    }

    /// Lossless conversion from an exact count, if the value fits.
    fn from_count(value: &Count) -> Option<Self>;

    /// Lossless conversion to an exact count.
    fn to_count(&self) -> Count;
}

impl CountScalar for u128 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn checked_add(&self, rhs: &Self) -> Option<Self> {
        u128::checked_add(*self, *rhs)
    }

    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        u128::checked_mul(*self, *rhs)
    }

    fn from_count(value: &Count) -> Option<Self> {
        value.to_u128()
    }

    fn to_count(&self) -> Count {
        Count::from(*self)
    }
}

impl CountScalar for Count {
    fn zero() -> Self {
        Count::zero()
    }

    fn one() -> Self {
        Count::one()
    }

    fn is_zero(&self) -> bool {
        Count::is_zero(self)
    }

    fn checked_add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }

    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }

    fn checked_mul_acc(acc: &mut Self, a: &Self, b: &Self) -> bool {
        acc.0 += &a.0 * &b.0;
        true
    }

    fn from_count(value: &Count) -> Option<Self> {
        Some(value.clone())
    }

    fn to_count(&self) -> Count {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_roundtrip() {
        for text in ["0", "1", "71", "144212", "3640808935014382048919715166814208"] {
            let c: Count = text.parse().unwrap();
            assert_eq!(c.to_string(), text);
        }
        assert!(matches!("".parse::<Count>(), Err(Error::InvalidCount { .. })));
        assert!(matches!("12a".parse::<Count>(), Err(Error::InvalidCount { .. })));
        assert!(matches!("-3".parse::<Count>(), Err(Error::InvalidCount { .. })));
    }

    #[test]
    fn fixed_width_overflow_is_reported_not_wrapped() {
        let big = u128::MAX;
        assert_eq!(CountScalar::checked_mul(&big, &2u128), None);
        assert_eq!(CountScalar::checked_add(&big, &1u128), None);
        let mut acc = 5u128;
        assert!(!u128::checked_mul_acc(&mut acc, &big, &big));
        // A failed accumulate leaves no partial garbage the caller could
        // mistake for a value; it is reported through the return flag.
        let mut ok_acc = 5u128;
        assert!(u128::checked_mul_acc(&mut ok_acc, &3, &4));
        assert_eq!(ok_acc, 17);
    }

    #[test]
    fn bignum_never_overflows() {
        let big: Count = "340282366920938463463374607431768211455".parse().unwrap(); // u128::MAX
        let doubled = CountScalar::checked_mul(&big, &Count::from(2u64)).unwrap();
        assert_eq!(doubled.to_string(), "680564733841876926926749214863536422910");
        assert_eq!(big.to_u128(), Some(u128::MAX));
        assert_eq!(doubled.to_u128(), None);
    }

    #[test]
    fn backend_names() {
        for (text, backend) in [
            ("auto", Backend::Auto),
            ("fixed128", Backend::Fixed128),
            ("bignum", Backend::Bignum),
        ] {
            assert_eq!(text.parse::<Backend>().unwrap(), backend);
            assert_eq!(backend.to_string(), text);
        }
        assert!("float".parse::<Backend>().is_err());
        assert_eq!(BackendKind::Fixed128.to_string(), "fixed128");
        assert_eq!(BackendKind::Bignum.to_string(), "bignum");
    }
}
