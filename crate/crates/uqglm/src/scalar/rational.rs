//! Exact rational backend.

use super::Scalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// An exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality and hashing of the serialized form are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Approximate magnitude, for seeding heuristics only.
    pub fn to_f64_lossy(&self) -> f64 {
        let n = self.0.numer().to_string().parse::<f64>().unwrap_or(f64::MAX);
        let d = self.0.denom().to_string().parse::<f64>().unwrap_or(1.0);
        n / d
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn from_i64(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.0.is_zero(), "division by zero rational");
        Rat(&self.0 / &rhs.0)
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero rational");
        Rat(self.0.recip())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn mag_cmp(&self, other: &Self) -> Ordering {
        self.0.abs().cmp(&other.0.abs())
    }

    fn is_exact() -> bool {
        true
    }

    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let parse_int = |s: &str| -> Result<BigInt> {
            BigInt::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
        };
        match text.split_once('/') {
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                Ok(Rat(BigRational::new(num, den)))
            }
            None => Ok(Rat(BigRational::from_integer(parse_int(text)?))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_serialize_round_trip() {
        for s in ["3/1", "-7/2", "0", "41", "-6/4"] {
            let r = Rat::parse(s).unwrap();
            let back = Rat::parse(&r.serialize()).unwrap();
            assert_eq!(r, back);
        }
        // canonical form is reduced with positive denominator
        assert_eq!(Rat::parse("-6/4").unwrap().serialize(), "-3/2");
        assert_eq!(Rat::parse("3/1").unwrap().serialize(), "3");
        assert!(Rat::parse("1/0").is_err());
        assert!(Rat::parse("x").is_err());
    }

    #[test]
    fn field_ops() {
        let a = Rat::new(2, 3);
        let b = Rat::new(-5, 7);
        assert_eq!(a.mul(&b), Rat::new(-10, 21));
        assert_eq!(a.div(&b), Rat::new(-14, 15));
        assert_eq!(a.inv(), Rat::new(3, 2));
        assert_eq!(a.sub(&a), Rat::zero());
    }
}
