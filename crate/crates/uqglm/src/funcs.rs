//! Elementary rational functions and their set-product shorthand.
//!
//! The whole engine is written in terms of
//!
//! ```text
//! f(u,v) = (q u - q^{-1} v) / (u - v)
//! g(u,v) = (q - q^{-1}) / (u - v)
//! g_l(u,v) = u g(u,v),   g_r(u,v) = v g(u,v)
//! ```
//!
//! and products thereof over parameter sets: `prod_f(A, B)` is the double
//! product of `f(a, b)` over all pairs, and any product over an empty set
//! equals 1. A coincidence `u = v` is always a hard pole error.

use crate::error::{Error, Result};
use crate::scalar::{QParam, Scalar};

/// f(u,v) = (q u - q^{-1} v)/(u - v).
pub fn f<S: Scalar>(q: &QParam<S>, u: &S, v: &S) -> Result<S> {
    let den = u.sub(v);
    if den.is_zero() {
        return Err(Error::Pole { context: "f(u,v)" });
    }
    let num = q.q().mul(u).sub(&q.q_inv().mul(v));
    Ok(num.div(&den))
}

/// g(u,v) = (q - q^{-1})/(u - v).
pub fn g<S: Scalar>(q: &QParam<S>, u: &S, v: &S) -> Result<S> {
    let den = u.sub(v);
    if den.is_zero() {
        return Err(Error::Pole { context: "g(u,v)" });
    }
    Ok(q.q_minus_qinv().div(&den))
}

/// g^{(l)}(u,v) = u g(u,v).
pub fn g_l<S: Scalar>(q: &QParam<S>, u: &S, v: &S) -> Result<S> {
    Ok(u.mul(&g(q, u, v)?))
}

/// g^{(r)}(u,v) = v g(u,v).
pub fn g_r<S: Scalar>(q: &QParam<S>, u: &S, v: &S) -> Result<S> {
    Ok(v.mul(&g(q, u, v)?))
}

/// Double product of f over two sets; empty set gives 1.
pub fn prod_f<S: Scalar>(q: &QParam<S>, us: &[S], vs: &[S]) -> Result<S> {
    let mut acc = S::one();
    for u in us {
        for v in vs {
            acc = acc.mul(&f(q, u, v)?);
        }
    }
    Ok(acc)
}

/// Product of f(u, v) over u in `us`.
pub fn prod_f_left<S: Scalar>(q: &QParam<S>, us: &[S], v: &S) -> Result<S> {
    let mut acc = S::one();
    for u in us {
        acc = acc.mul(&f(q, u, v)?);
    }
    Ok(acc)
}

/// Product of f(u, v) over v in `vs`.
pub fn prod_f_right<S: Scalar>(q: &QParam<S>, u: &S, vs: &[S]) -> Result<S> {
    let mut acc = S::one();
    for v in vs {
        acc = acc.mul(&f(q, u, v)?);
    }
    Ok(acc)
}

/// Double product of g^{(l)} over two sets.
pub fn prod_g_l<S: Scalar>(q: &QParam<S>, us: &[S], vs: &[S]) -> Result<S> {
    let mut acc = S::one();
    for u in us {
        for v in vs {
            acc = acc.mul(&g_l(q, u, v)?);
        }
    }
    Ok(acc)
}

/// Double product of g^{(r)} over two sets.
pub fn prod_g_r<S: Scalar>(q: &QParam<S>, us: &[S], vs: &[S]) -> Result<S> {
    let mut acc = S::one();
    for u in us {
        for v in vs {
            acc = acc.mul(&g_r(q, u, v)?);
        }
    }
    Ok(acc)
}

/// Division that reports a resonance (vanishing denominator product) as a
/// pole error instead of panicking. An f-factor in a denominator vanishes
/// exactly at the coincidences u = q^2 v, which invalidate the formulas the
/// same way u = v does.
pub fn checked_div<S: Scalar>(num: &S, den: &S, context: &'static str) -> Result<S> {
    if den.is_zero() {
        return Err(Error::Pole { context });
    }
    Ok(num.div(den))
}

/// The set with one index removed: `values \ {values[skip]}`.
pub fn without<S: Scalar>(values: &[S], skip: usize) -> Vec<S> {
    values
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, v)| v.clone())
        .collect()
}

/// Select the sublist at `indices` (in the given order).
pub fn select<S: Scalar>(values: &[S], indices: &[usize]) -> Vec<S> {
    indices.iter().map(|&i| values[i].clone()).collect()
}
