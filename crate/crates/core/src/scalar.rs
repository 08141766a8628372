//! Real scalars that are either exact rationals or binary floats.
//!
//! The string form round-trips bit-for-bit: exact values print as `p` or
//! `p/q`, floats print with Rust's shortest round-trip formatting and always
//! carry a `.`, an exponent, or a non-finite marker so they re-parse as floats.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a rational or decimal number")]
pub struct ScalarParseError(pub String);

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    /// Exact rational value. Floats convert only when they are integers of
    /// magnitude below 2^53.
    pub fn to_exact(&self) -> Option<BigRational> {
        match self {
            Scalar::Exact(q) => Some(q.clone()),
            Scalar::Float(x) if x.is_finite() && x.fract() == 0.0 && x.abs() < 9.007_199_254_740_992e15 => {
                BigRational::from_f64(*x)
            }
            Scalar::Float(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_negative(),
            Scalar::Float(x) => *x < 0.0,
        }
    }

    pub fn ints(values: &[i64]) -> Vec<Scalar> {
        values.iter().map(|&v| Scalar::from(v)).collect()
    }

    pub fn floats(values: &[f64]) -> Vec<Scalar> {
        values.iter().map(|&v| Scalar::Float(v)).collect()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Float(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::Exact(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Float(x) => write!(f, "{x:?}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ScalarParseError(s.to_string());
        if t.is_empty() {
            return Err(err());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            return Ok(Scalar::Exact(BigRational::new(p, q)));
        }
        if let Ok(p) = t.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(p)));
        }
        t.parse::<f64>().map(Scalar::Float).map_err(|_| err())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        assert_eq!("1/2".parse::<Scalar>().unwrap(), Scalar::Exact(BigRational::new(1.into(), 2.into())));
        assert_eq!("-3".parse::<Scalar>().unwrap(), Scalar::from(-3));
        assert_eq!(" 2/4 ".parse::<Scalar>().unwrap().to_string(), "1/2");
        assert_eq!("0.5".parse::<Scalar>().unwrap(), Scalar::Float(0.5));
        assert_eq!("1e-3".parse::<Scalar>().unwrap(), Scalar::Float(1e-3));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn integral_floats_become_exact() {
        assert_eq!(Scalar::Float(-2.0).to_exact(), Some(BigRational::from_integer((-2).into())));
        assert_eq!(Scalar::Float(0.5).to_exact(), None);
        assert_eq!(Scalar::Float(f64::INFINITY).to_exact(), None);
    }

    proptest! {
        #[test]
        fn float_strings_round_trip(x in proptest::num::f64::NORMAL | proptest::num::f64::ZERO) {
            let s = Scalar::Float(x).to_string();
            prop_assert_eq!(s.parse::<Scalar>().unwrap(), Scalar::Float(x));
        }

        #[test]
        fn rational_strings_round_trip(p in -1000i64..1000, q in 1i64..1000) {
            let v = Scalar::Exact(BigRational::new(p.into(), q.into()));
            prop_assert_eq!(v.to_string().parse::<Scalar>().unwrap(), v);
        }
    }
}
