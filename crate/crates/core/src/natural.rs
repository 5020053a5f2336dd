use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::{BigUint, ParseBigIntError};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Arbitrary-precision nonnegative integer.
///
/// Serializes to JSON as a plain number with every digit preserved.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    /// Divides by `divisor`, returning `None` unless the division is exact.
    pub fn div_exact(&self, divisor: &Natural) -> Option<Natural> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Natural(q))
    }
}

impl From<BigUint> for Natural {
    fn from(value: BigUint) -> Self {
        Natural(value)
    }
}

impl From<u64> for Natural {
    fn from(value: u64) -> Self {
        Natural(BigUint::from(value))
    }
}

impl From<u32> for Natural {
    fn from(value: u32) -> Self {
        Natural(BigUint::from(value))
    }
}

impl From<usize> for Natural {
    fn from(value: usize) -> Self {
        Natural(BigUint::from(value))
    }
}

impl PartialEq<u64> for Natural {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl FromStr for Natural {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(Natural)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl Add<&Natural> for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Natural> for Natural {
    fn add_assign(&mut self, rhs: &Natural) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Natural {
    fn add_assign(&mut self, rhs: Natural) {
        self.0 += rhs.0;
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

impl Mul<&Natural> for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl MulAssign<&Natural> for Natural {
    fn mul_assign(&mut self, rhs: &Natural) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Self {
        iter.fold(Natural::zero(), Add::add)
    }
}

impl<'a> Sum<&'a Natural> for Natural {
    fn sum<I: Iterator<Item = &'a Natural>>(iter: I) -> Self {
        iter.fold(Natural::zero(), |acc, x| &acc + x)
    }
}

impl Product for Natural {
    fn product<I: Iterator<Item = Natural>>(iter: I) -> Self {
        iter.fold(Natural::one(), Mul::mul)
    }
}

impl<'a> Product<&'a Natural> for Natural {
    fn product<I: Iterator<Item = &'a Natural>>(iter: I) -> Self {
        iter.fold(Natural::one(), |acc, x| &acc * x)
    }
}

impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // with arbitrary_precision the digits are kept verbatim
        match serde_json::Number::from_str(&self.0.to_string()) {
            Ok(n) => n.serialize(serializer),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}
