//! Arbitrary-precision complex backend.
//!
//! A value carries its own precision (in bits of mantissa); binary
//! operations round to the larger of the two operand precisions. Constants
//! are created at a small default precision, which is harmless because they
//! are exactly representable and the max-rule promotes them on first use.

use super::{Rat, Scalar};
use crate::error::{Error, Result};
use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest precision the backend will work at.
pub const MIN_PREC_BITS: usize = 128;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Arbitrary-precision real number.
#[derive(Clone, Debug)]
pub struct MpReal(BigFloat);

impl MpReal {
    pub fn from_i64(v: i64, prec: usize) -> Self {
        MpReal(BigFloat::from_i64(v, prec.max(MIN_PREC_BITS)))
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        MpReal(BigFloat::from_f64(v, prec.max(MIN_PREC_BITS)))
    }

    /// Exact conversion of a rational, then one rounding to `prec` bits.
    pub fn from_rat(r: &Rat, prec: usize) -> Self {
        let prec = prec.max(MIN_PREC_BITS);
        let num = Self::parse_dec(&r.numer().to_string(), prec + 64).0;
        let den = Self::parse_dec(&r.denom().to_string(), prec + 64).0;
        MpReal(num.div(&den, prec, RM))
    }

    /// Parse a decimal string (integer, fixed point, or scientific).
    pub fn parse_dec(text: &str, prec: usize) -> Self {
        let prec = prec.max(MIN_PREC_BITS);
        let v = CONSTS.with(|cc| BigFloat::parse(text, Radix::Dec, prec, RM, &mut cc.borrow_mut()));
        MpReal(v)
    }

    pub fn try_parse_dec(text: &str, prec: usize) -> Result<Self> {
        let v = Self::parse_dec(text, prec);
        if v.0.is_nan() {
            Err(Error::Parse(format!("bad decimal literal {text:?}")))
        } else {
            Ok(v)
        }
    }

    pub fn prec(&self) -> usize {
        self.0.precision().unwrap_or(MIN_PREC_BITS)
    }

    fn join_prec(&self, rhs: &Self) -> usize {
        self.prec().max(rhs.prec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        MpReal(self.0.add(&rhs.0, self.join_prec(rhs), RM))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        MpReal(self.0.sub(&rhs.0, self.join_prec(rhs), RM))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        MpReal(self.0.mul(&rhs.0, self.join_prec(rhs), RM))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero mp real");
        MpReal(self.0.div(&rhs.0, self.join_prec(rhs), RM))
    }

    pub fn neg(&self) -> Self {
        MpReal(self.0.neg())
    }

    pub fn abs(&self) -> Self {
        MpReal(self.0.abs())
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.0.is_negative() {
            return Err(Error::Invalid("sqrt of negative real".into()));
        }
        Ok(MpReal(self.0.sqrt(self.prec(), RM)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn cmp(&self, rhs: &Self) -> Ordering {
        match self.0.cmp(&rhs.0) {
            Some(c) => c.cmp(&0),
            None => panic!("NaN in mp comparison"),
        }
    }

    pub fn max(&self, rhs: &Self) -> Self {
        if self.cmp(rhs) == Ordering::Less {
            rhs.clone()
        } else {
            self.clone()
        }
    }

    /// Re-round to `prec` bits (extending is exact).
    pub fn with_prec(&self, prec: usize) -> Self {
        let mut v = self.0.clone();
        v.set_precision(prec.max(MIN_PREC_BITS), RM)
            .expect("set precision");
        MpReal(v)
    }
}

impl fmt::Display for MpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialEq for MpReal {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Arbitrary-precision complex number `re + i*im`.
#[derive(Clone, Debug, PartialEq)]
pub struct MpC {
    pub re: MpReal,
    pub im: MpReal,
}

impl MpC {
    pub fn new(re: MpReal, im: MpReal) -> Self {
        MpC { re, im }
    }

    pub fn real(re: MpReal) -> Self {
        let prec = re.prec();
        MpC {
            re,
            im: MpReal::from_i64(0, prec),
        }
    }

    pub fn from_rat(r: &Rat, prec: usize) -> Self {
        Self::real(MpReal::from_rat(r, prec))
    }

    pub fn from_f64_pair(re: f64, im: f64, prec: usize) -> Self {
        MpC {
            re: MpReal::from_f64(re, prec),
            im: MpReal::from_f64(im, prec),
        }
    }

    pub fn prec(&self) -> usize {
        self.re.prec().max(self.im.prec())
    }

    /// |z|^2 as a real number.
    pub fn abs_sq(&self) -> MpReal {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// |re| + |im|; a cheap norm equivalent for thresholds and pivoting.
    pub fn abs1(&self) -> MpReal {
        self.re.abs().add(&self.im.abs())
    }

    /// Re-round both components to `prec` bits.
    pub fn with_prec(&self, prec: usize) -> Self {
        MpC {
            re: self.re.with_prec(prec),
            im: self.im.with_prec(prec),
        }
    }
}

impl fmt::Display for MpC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})@{}", self.re, self.im, self.prec())
    }
}

impl Scalar for MpC {
    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn one() -> Self {
        Self::from_i64(1)
    }

    fn from_i64(v: i64) -> Self {
        MpC {
            re: MpReal::from_i64(v, MIN_PREC_BITS),
            im: MpReal::from_i64(0, MIN_PREC_BITS),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        MpC {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        MpC {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        MpC {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    fn div(&self, rhs: &Self) -> Self {
        assert!(!Scalar::is_zero(rhs), "division by zero mp complex");
        let d = rhs.abs_sq();
        MpC {
            re: self.re.mul(&rhs.re).add(&self.im.mul(&rhs.im)).div(&d),
            im: self.im.mul(&rhs.re).sub(&self.re.mul(&rhs.im)).div(&d),
        }
    }

    fn neg(&self) -> Self {
        MpC {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    fn inv(&self) -> Self {
        Self::one().div(self)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn conj(&self) -> Self {
        MpC {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    fn mag_cmp(&self, other: &Self) -> Ordering {
        self.abs1().cmp(&other.abs1())
    }

    fn is_exact() -> bool {
        false
    }

    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix('(') {
            let (body, bits) = rest
                .rsplit_once(")@")
                .ok_or_else(|| Error::Parse(format!("bad complex literal {text:?}")))?;
            let prec: usize = bits
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad precision in {text:?}")))?;
            if prec < MIN_PREC_BITS {
                return Err(Error::Parse(format!(
                    "precision {prec} below minimum {MIN_PREC_BITS}"
                )));
            }
            let (re, im) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad complex literal {text:?}")))?;
            Ok(MpC {
                re: MpReal::try_parse_dec(re, prec)?,
                im: MpReal::try_parse_dec(im, prec)?,
            })
        } else {
            // accept a plain rational, promoted at the default precision
            let r = Rat::parse(text)?;
            Ok(Self::from_rat(&r, MIN_PREC_BITS))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_field_ops() {
        let a = MpC::from_f64_pair(3.0, 4.0, 192);
        let b = a.mul(&a.conj());
        assert_eq!(b.im.cmp(&MpReal::from_i64(0, 192)), Ordering::Equal);
        assert_eq!(b.re.cmp(&MpReal::from_i64(25, 192)), Ordering::Equal);
        let c = a.div(&a);
        assert!(c.sub(&MpC::one()).abs1().cmp(&MpReal::parse_dec("1e-50", 192)) == Ordering::Less);
    }

    #[test]
    fn precision_promotion_via_max_rule() {
        let small = MpC::from_i64(2);
        let big = MpC::from_rat(&Rat::new(1, 3), 320);
        assert_eq!(small.mul(&big).prec(), 320);
    }

    #[test]
    fn parse_round_trip() {
        let z = MpC::from_f64_pair(-1.5, 0.25, 256);
        let s = z.serialize();
        let back = MpC::parse(&s).unwrap();
        assert_eq!(z, back);
        assert!(MpC::parse("(1,2)@8").is_err());
        assert!(MpC::parse("7/3").is_ok());
    }

    #[test]
    fn rational_conversion_is_faithful() {
        let r = Rat::new(-355, 113);
        let z = MpC::from_rat(&r, 256);
        let three = MpC::from_i64(113).mul(&z);
        let diff = three.sub(&MpC::from_i64(-355)).abs1();
        assert!(diff.cmp(&MpReal::parse_dec("1e-70", 256)) == Ordering::Less);
    }
}
