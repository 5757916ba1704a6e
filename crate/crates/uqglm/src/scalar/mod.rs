//! Scalar backends: the single numeric currency of the engine.
//!
//! All formulas are evaluated over one of two fields hidden behind the
//! [`Scalar`] trait:
//!
//! * [`Rat`] — exact rational numbers. Every off-shell identity of the
//!   engine is a rational identity, so "tolerance" is replaced by exact
//!   equality and results are bit-reproducible.
//! * [`MpC`] — arbitrary-precision complex floating point (>= 128 bits),
//!   used for Bethe roots, which are algebraic numbers.
//!
//! Values are immutable and all operations are pure, so scalars can be
//! evaluated in parallel without restriction.

mod mpc;
mod rational;

pub use mpc::{MpC, MpReal};
pub use rational::Rat;

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt::{Debug, Display};

/// Field operations shared by both backends.
///
/// Division and inversion by zero panic: the callers are required to check
/// their pole preconditions first and report a structured [`Error::Pole`],
/// so a zero divisor reaching the arithmetic layer is a bug.
pub trait Scalar: Clone + Debug + Display + PartialEq + Send + Sync + Sized + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Complex conjugate; the identity on the rational backend.
    fn conj(&self) -> Self;

    /// Compare absolute values; used for pivot selection.
    fn mag_cmp(&self, other: &Self) -> Ordering;

    /// Whether the backend is exact (no rounding).
    fn is_exact() -> bool;

    /// Parse the canonical string form (`p/r` or `(re,im)@bits`).
    fn parse(text: &str) -> Result<Self>;

    /// Canonical string form; inverse of [`Scalar::parse`].
    fn serialize(&self) -> String {
        format!("{self}")
    }
}

/// Orientation of the deformation parameter: a computation either runs at q
/// or at q^{-1}. Identities relating the two algebras are tested by running
/// the same engine at both orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Direct,
    Inverted,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Direct => Orientation::Inverted,
            Orientation::Inverted => Orientation::Direct,
        }
    }
}

impl Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Orientation::Direct => write!(f, "q"),
            Orientation::Inverted => write!(f, "q_inv"),
        }
    }
}

/// The deformation parameter together with its precomputed inverse.
///
/// Rejects q = 0 and q^2 = 1: at q^2 = 1 the function g vanishes
/// identically and every formula of the engine degenerates.
#[derive(Clone, Debug, PartialEq)]
pub struct QParam<S: Scalar> {
    q: S,
    q_inv: S,
}

impl<S: Scalar> QParam<S> {
    pub fn new(q: S) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidQ);
        }
        let q2 = q.mul(&q);
        if q2.is_one() {
            return Err(Error::InvalidQ);
        }
        let q_inv = q.inv();
        Ok(QParam { q, q_inv })
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn q_inv(&self) -> &S {
        &self.q_inv
    }

    /// q - q^{-1}, the prefactor of g.
    pub fn q_minus_qinv(&self) -> S {
        self.q.sub(&self.q_inv)
    }

    /// q + q^{-1}.
    pub fn q_plus_qinv(&self) -> S {
        self.q.add(&self.q_inv)
    }

    /// The parameter with the opposite orientation (q <-> q^{-1}).
    pub fn inverted(&self) -> Self {
        QParam {
            q: self.q_inv.clone(),
            q_inv: self.q.clone(),
        }
    }

    pub fn oriented(&self, o: Orientation) -> Self {
        match o {
            Orientation::Direct => self.clone(),
            Orientation::Inverted => self.inverted(),
        }
    }
}

/// True if all values in the list are pairwise distinct.
pub fn all_distinct<S: Scalar>(values: &[S]) -> bool {
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            if a == b {
                return false;
            }
        }
    }
    true
}

/// Elementwise inverses; fails on a zero entry.
pub fn invert_all<S: Scalar>(values: &[S]) -> Result<Vec<S>> {
    values
        .iter()
        .map(|v| {
            if v.is_zero() {
                Err(Error::ZeroParameter)
            } else {
                Ok(v.inv())
            }
        })
        .collect()
}
