//! Dense univariate polynomials and exact rational-function reconstruction.
//!
//! Residues of the highest coefficients are extracted without floating
//! limits: the function of one chosen variable is reconstructed exactly
//! from samples (Cauchy interpolation with degree bounds), reduced by the
//! polynomial gcd, and differentiated at the pole.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense polynomial, coefficients low to high, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&S::from_i64(k as i64)))
            .collect();
        Poly::new(coeffs)
    }

    fn scale(&self, factor: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(factor)).collect())
    }

    /// Euclidean remainder; the divisor must be nonzero.
    fn rem(&self, div: &Self) -> Self {
        assert!(!div.is_zero());
        let mut rem = self.coeffs.clone();
        let dd = div.coeffs.len();
        let lead = div.coeffs.last().unwrap();
        while rem.len() >= dd && !rem.is_empty() {
            if rem.last().unwrap().is_zero() {
                rem.pop();
                continue;
            }
            let factor = rem.last().unwrap().div(lead);
            let offset = rem.len() - dd;
            for (k, c) in div.coeffs.iter().enumerate() {
                let delta = factor.mul(c);
                rem[offset + k] = rem[offset + k].sub(&delta);
            }
            rem.pop();
        }
        Poly::new(rem)
    }

    /// Exact quotient, assuming divisibility.
    fn div_exact(&self, div: &Self) -> Self {
        assert!(!div.is_zero());
        if self.is_zero() {
            return Poly::zero();
        }
        let mut rem = self.coeffs.clone();
        let dd = div.coeffs.len();
        let lead = div.coeffs.last().unwrap();
        let mut quot = vec![S::zero(); rem.len() + 1 - dd];
        while rem.len() >= dd {
            if rem.last().unwrap().is_zero() {
                rem.pop();
                continue;
            }
            let factor = rem.last().unwrap().div(lead);
            let offset = rem.len() - dd;
            quot[offset] = factor.clone();
            for (k, c) in div.coeffs.iter().enumerate() {
                let delta = factor.mul(c);
                rem[offset + k] = rem[offset + k].sub(&delta);
            }
            rem.pop();
        }
        debug_assert!(Poly::new(rem).is_zero(), "inexact polynomial division");
        Poly::new(quot)
    }

    /// Monic gcd by the Euclidean algorithm.
    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.coeffs.last().unwrap().clone();
            a.scale(&lead.inv())
        }
    }
}

/// A reconstructed rational function in lowest terms.
#[derive(Clone, Debug)]
pub struct RationalFn<S> {
    pub num: Poly<S>,
    pub den: Poly<S>,
}

impl<S: Scalar> RationalFn<S> {
    pub fn eval(&self, x: &S) -> Option<S> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x).div(&d))
        }
    }

    /// Residue at a simple pole `x0`: num(x0) / den'(x0).
    pub fn residue_at_simple_pole(&self, x0: &S) -> Result<S> {
        if !self.den.eval(x0).is_zero() {
            return Err(Error::Reconstruction(
                "requested residue at a regular point".into(),
            ));
        }
        let dp = self.den.derivative().eval(x0);
        if dp.is_zero() {
            return Err(Error::Reconstruction(
                "pole is not simple after gcd reduction".into(),
            ));
        }
        Ok(self.num.eval(x0).div(&dp))
    }
}

/// One nontrivial kernel vector of a homogeneous system, by exact Gaussian
/// elimination. `rows[i]` has `cols` entries. Returns `None` when the
/// kernel is trivial.
fn kernel_vector<S: Scalar>(mut rows: Vec<Vec<S>>, cols: usize) -> Option<Vec<S>> {
    let mut pivot_col_of_row = Vec::new();
    let mut used_cols = vec![false; cols];
    let mut row_at = 0usize;
    for col in 0..cols {
        let mut pivot = None;
        for r in row_at..rows.len() {
            if !rows[r][col].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        rows.swap(row_at, pr);
        let p = rows[row_at][col].clone();
        for c in col..cols {
            rows[row_at][c] = rows[row_at][c].div(&p);
        }
        for r in 0..rows.len() {
            if r != row_at && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let delta = factor.mul(&rows[row_at][c]);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        used_cols[col] = true;
        pivot_col_of_row.push(col);
        row_at += 1;
        if row_at == rows.len() {
            break;
        }
    }
    let free_col = (0..cols).find(|&c| !used_cols[c])?;
    let mut kernel = vec![S::zero(); cols];
    kernel[free_col] = S::one();
    for (r, &pc) in pivot_col_of_row.iter().enumerate() {
        kernel[pc] = rows[r][free_col].neg();
    }
    Some(kernel)
}

/// Reconstruct a univariate rational function from an exact oracle.
///
/// `oracle(x)` returns the value or `None` where it cannot be evaluated
/// (a pole or other coincidence); such sample points are skipped. The
/// candidate degree bounds escalate until extra verification points agree.
pub fn reconstruct_rational<S: Scalar>(
    mut oracle: impl FnMut(&S) -> Option<S>,
    mut sample_stream: impl FnMut() -> S,
    max_degree: usize,
) -> Result<RationalFn<S>> {
    const VERIFY_POINTS: usize = 3;
    let mut samples: Vec<(S, S)> = Vec::new();
    let mut misses = 0usize;
    let mut take_samples = |samples: &mut Vec<(S, S)>, upto: usize| -> Result<()> {
        while samples.len() < upto {
            let x = sample_stream();
            if samples.iter().any(|(sx, _)| sx == &x) {
                continue;
            }
            match oracle(&x) {
                Some(y) => samples.push((x, y)),
                None => {
                    misses += 1;
                    if misses > 200 {
                        return Err(Error::Reconstruction(
                            "too many sample points hit poles".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    };

    let mut bound = 2usize;
    loop {
        let dn = bound;
        let dd = bound;
        let unknowns = dn + dd + 2;
        take_samples(&mut samples, unknowns - 1 + VERIFY_POINTS)?;
        let (fit, verify) = samples.split_at(unknowns - 1);

        // rows: p(x) - y q(x) = 0 in the unknown coefficients (p | q)
        let rows: Vec<Vec<S>> = fit
            .iter()
            .map(|(x, y)| {
                let mut row = Vec::with_capacity(unknowns);
                let mut xp = S::one();
                for _ in 0..=dn {
                    row.push(xp.clone());
                    xp = xp.mul(x);
                }
                let mut xp = S::one();
                for _ in 0..=dd {
                    row.push(y.neg().mul(&xp));
                    xp = xp.mul(x);
                }
                row
            })
            .collect();

        if let Some(kernel) = kernel_vector(rows, unknowns) {
            let num = Poly::new(kernel[..=dn].to_vec());
            let den = Poly::new(kernel[dn + 1..].to_vec());
            if !den.is_zero() {
                let gcd = num.gcd(&den);
                let (num, den) = if gcd.degree().unwrap_or(0) > 0 {
                    (num.div_exact(&gcd), den.div_exact(&gcd))
                } else {
                    (num, den)
                };
                let rf = RationalFn { num, den };
                let ok = verify
                    .iter()
                    .all(|(x, y)| rf.eval(x).as_ref() == Some(y));
                if ok {
                    return Ok(rf);
                }
            }
        }

        bound += 2;
        if bound > max_degree {
            return Err(Error::Reconstruction(format!(
                "no rational function of degree <= {max_degree} matches the samples"
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn poly(cs: &[i64]) -> Poly<Rat> {
        Poly::new(cs.iter().map(|&c| Rat::from_i64(c)).collect())
    }

    #[test]
    fn eval_derivative_gcd() {
        // (x^2 - 1) and (x - 1): gcd is x - 1 (monic)
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
        assert_eq!(a.derivative(), poly(&[0, 2]));
        assert_eq!(a.eval(&Rat::from_i64(3)), Rat::from_i64(8));
        assert_eq!(a.div_exact(&b), poly(&[1, 1]));
    }

    #[test]
    fn reconstructs_a_rational_function() {
        // h(x) = (3x + 1) / (x^2 - 4)
        let target = |x: &Rat| {
            let den = x.mul(x).sub(&Rat::from_i64(4));
            if den.is_zero() {
                None
            } else {
                Some(Rat::from_i64(3).mul(x).add(&Rat::one()).div(&den))
            }
        };
        let mut k = 0i64;
        let rf = reconstruct_rational(
            target,
            move || {
                k += 1;
                Rat::new(k, 1)
            },
            8,
        )
        .unwrap();
        // pole at x = 2 with residue (3*2+1)/(2*2) = 7/4
        let res = rf.residue_at_simple_pole(&Rat::from_i64(2)).unwrap();
        assert_eq!(res, Rat::new(7, 4));
        // regular point raises an error
        assert!(rf.residue_at_simple_pole(&Rat::from_i64(3)).is_err());
    }

    #[test]
    fn reconstruction_skips_poles_in_sampling() {
        // 1/(x-1) sampled on a stream that passes through x = 1
        let target = |x: &Rat| {
            let den = x.sub(&Rat::one());
            if den.is_zero() {
                None
            } else {
                Some(Rat::one().div(&den))
            }
        };
        let mut k = 0i64;
        let rf = reconstruct_rational(
            target,
            move || {
                k += 1;
                Rat::new(k, 1)
            },
            6,
        )
        .unwrap();
        assert_eq!(
            rf.residue_at_simple_pole(&Rat::from_i64(1)).unwrap(),
            Rat::one()
        );
    }
}
