//! Exact rational scalars backed by arbitrary-precision integers.
//!
//! Every value is kept in lowest terms with a positive denominator. The wire
//! form is always `num/den`, including integers (`3/1`), so reports are
//! bit-exact across runs and platforms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::EngineError;

/// Exact rational number, reduced, denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// n/d, reduced. Panics if d == 0; use [`Rat::from_str`] for untrusted input.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// n/2: converts a doubled level or mode index back to a rational.
    pub fn from_half(n2: i64) -> Rat {
        Rat::new(n2, 2)
    }

    pub fn from_big(n: BigInt, d: BigInt) -> Result<Rat, EngineError> {
        if d.is_zero() {
            return Err(EngineError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(n, d)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True when the denominator is 1 or 2.
    pub fn is_half_integer(&self) -> bool {
        let two = BigInt::from(2);
        self.0.denom().is_one() || *self.0.denom() == two
    }

    /// 2x as an i64, for values with denominator 1 or 2.
    pub fn doubled(&self) -> Option<i64> {
        if !self.is_half_integer() {
            return None;
        }
        let two = BigInt::from(2);
        let n2 = self.0.numer() * (&two / self.0.denom());
        i64::try_from(&n2).ok()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, EngineError> {
        if rhs.is_zero() {
            return Err(EngineError::ZeroDenominator);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Rat {
    type Err = EngineError;

    /// Accepts `p` or `p/q`, with optional sign; rejects q == 0.
    fn from_str(s: &str) -> Result<Rat, EngineError> {
        let bad = || EngineError::BadRational(s.to_string());
        let (np, dp) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(np.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(dp.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(EngineError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rat::from_str(&s).map_err(serde::de::Error::custom)
    }
}
