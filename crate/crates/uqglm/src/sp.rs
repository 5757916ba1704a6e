//! Highest coefficients, the scalar-product sum formula, brute-force scalar
//! products, and the HC identity and residue suites.
//!
//! The highest coefficient `Z(s|t)` is computed by recursion over the first
//! s-color (fixing one element of `s^1`, summing over singleton chains and
//! one-element t-choices), memoized by the canonical multiset key. An
//! independent second route recurses over the last t-color; the two must
//! agree exactly. The conjugated coefficient is never computed by its own
//! recursion: it is obtained by inverting all parameters, swapping the two
//! families and flipping the orientation of q.

use crate::bethe::{build_bethe, build_dual, BetheParams};
use crate::chain::Monodromy;
use crate::combin::{multiset_key, recursion_partitions, MultisetKey};
use crate::error::{Error, Result};
use crate::funcs::{self, checked_div};
use crate::poly::reconstruct_rational;
use crate::scalar::{invert_all, Orientation, QParam, Rat, Scalar};
use itertools::Itertools;
use std::collections::HashMap;
use std::sync::Mutex;

/// Which recursion produced a cached value; the two routes never share
/// cache entries, so their agreement stays a real check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Route {
    FirstColor,
    LastColor,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CacheKey {
    route: Route,
    key: MultisetKey,
}

/// Evaluation context: the deformation parameter plus a concurrent-safe
/// memo cache for HC values.
pub struct HcContext<S: Scalar> {
    q: QParam<S>,
    memo: Mutex<HashMap<CacheKey, S>>,
}

impl<S: Scalar> HcContext<S> {
    pub fn new(q: QParam<S>) -> Self {
        HcContext {
            q,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn q(&self) -> &QParam<S> {
        &self.q
    }

    pub fn cache_len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    /// The memoized HC values gathered so far, as a deterministic table
    /// keyed by the canonical multiset strings (first-route entries).
    pub fn table(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .memo
            .lock()
            .unwrap()
            .iter()
            .filter(|(k, _)| k.route == Route::FirstColor)
            .map(|(k, v)| (k.key.canonical_string(), v.serialize()))
            .collect();
        out.sort();
        out
    }

    fn lookup(&self, key: &CacheKey) -> Option<S> {
        self.memo.lock().unwrap().get(key).cloned()
    }

    fn store(&self, key: CacheKey, value: S) {
        self.memo.lock().unwrap().insert(key, value);
    }
}

/// A request for one highest coefficient.
#[derive(Clone, Debug)]
pub struct HcRequest<S: Scalar> {
    pub level: usize,
    pub s: Vec<Vec<S>>,
    pub t: Vec<Vec<S>>,
    pub orientation: Orientation,
}

impl<S: Scalar> HcRequest<S> {
    pub fn new(s: Vec<Vec<S>>, t: Vec<Vec<S>>, orientation: Orientation) -> Self {
        HcRequest {
            level: 1,
            s,
            t,
            orientation,
        }
    }
}

fn check_cardinalities<S: Scalar>(s: &[Vec<S>], t: &[Vec<S>]) -> Result<()> {
    if s.len() != t.len() {
        return Err(Error::Cardinality(format!(
            "{} s-colors vs {} t-colors",
            s.len(),
            t.len()
        )));
    }
    for (k, (a, b)) in s.iter().zip(t).enumerate() {
        if a.len() != b.len() {
            return Err(Error::Cardinality(format!(
                "color {}: #s = {}, #t = {}",
                k + 1,
                a.len(),
                b.len()
            )));
        }
    }
    Ok(())
}

/// Drop leading empty colors (each drop raises the level: the value equals
/// the HC of the lower-rank algebra) and trailing empty colors.
fn trim<S: Scalar>(mut level: usize, s: &[Vec<S>], t: &[Vec<S>]) -> (usize, Vec<Vec<S>>, Vec<Vec<S>>) {
    let mut lo = 0;
    while lo < s.len() && s[lo].is_empty() && t[lo].is_empty() {
        lo += 1;
        level += 1;
    }
    let mut hi = s.len();
    while hi > lo && s[hi - 1].is_empty() && t[hi - 1].is_empty() {
        hi -= 1;
    }
    (level, s[lo..hi].to_vec(), t[lo..hi].to_vec())
}

/// Highest coefficient `Z(s|t)`, memoized, by recursion over the first
/// s-color.
pub fn hc_z<S: Scalar>(ctx: &HcContext<S>, req: &HcRequest<S>) -> Result<S> {
    check_cardinalities(&req.s, &req.t)?;
    hc_first_color(ctx, req.orientation, req.level, &req.s, &req.t)
}

/// The same coefficient by the independent recursion over the last t-color.
pub fn hc_z_alt<S: Scalar>(ctx: &HcContext<S>, req: &HcRequest<S>) -> Result<S> {
    check_cardinalities(&req.s, &req.t)?;
    hc_last_color(ctx, req.orientation, req.level, &req.s, &req.t)
}

/// Conjugated HC: invert every parameter, swap the families, flip q.
pub fn hc_zbar<S: Scalar>(ctx: &HcContext<S>, req: &HcRequest<S>) -> Result<S> {
    check_cardinalities(&req.s, &req.t)?;
    let s_inv = req.s.iter().map(|v| invert_all(v)).collect::<Result<Vec<_>>>()?;
    let t_inv = req.t.iter().map(|v| invert_all(v)).collect::<Result<Vec<_>>>()?;
    hc_first_color(
        ctx,
        req.orientation.flip(),
        req.level,
        &t_inv,
        &s_inv,
    )
}

fn hc_first_color<S: Scalar>(
    ctx: &HcContext<S>,
    o: Orientation,
    level: usize,
    s: &[Vec<S>],
    t: &[Vec<S>],
) -> Result<S> {
    let (level, s, t) = trim(level, s, t);
    if s.is_empty() {
        return Ok(S::one());
    }
    let joined: Vec<Vec<S>> = s.iter().chain(t.iter()).cloned().collect();
    let key = CacheKey {
        route: Route::FirstColor,
        key: multiset_key(level, &joined, o),
    };
    if let Some(v) = ctx.lookup(&key) {
        return Ok(v);
    }
    let q = ctx.q.oriented(o);
    let n = s.len();
    let anchor = s[0][0].clone();
    let s0_rest = s[0][1..].to_vec();

    // chains pick one element per color 2..p-1 on BOTH families; the sizes
    // are equal per color, so enumerate joint picks
    let chain_sizes: Vec<usize> = (1..n).map(|c| s[c].len()).collect();
    let mut total = S::zero();
    for chain in recursion_partitions(&chain_sizes) {
        let p = chain.depth;
        // every color in the chain contributes an (s-pick, t-pick) pair;
        // enumerate the t-side picks for the same depth independently
        let t_pick_space: Vec<Vec<usize>> = (1..p - 1)
            .map(|c| (0..t[c].len()).collect())
            .collect();
        let t_chains: Vec<Vec<usize>> = if t_pick_space.is_empty() {
            vec![Vec::new()]
        } else {
            t_pick_space.into_iter().multi_cartesian_product().collect()
        };
        for t0_pick in 0..t[0].len() {
            let xt0 = t[0][t0_pick].clone();
            let t0_rest = funcs::without(&t[0], t0_pick);
            let head = funcs::g_l(&q, &xt0, &anchor)?
                .mul(&funcs::prod_f_right(&q, &xt0, &t0_rest)?)
                .mul(&funcs::prod_f_left(&q, &t0_rest, &anchor)?);
            for t_chain in &t_chains {
                // chosen values along both chains; index 0 is color 1
                let xs: Vec<S> = std::iter::once(anchor.clone())
                    .chain(
                        chain
                            .choices
                            .iter()
                            .enumerate()
                            .map(|(i, &pk)| s[1 + i][pk].clone()),
                    )
                    .collect();
                let xt: Vec<S> = std::iter::once(xt0.clone())
                    .chain(
                        t_chain
                            .iter()
                            .enumerate()
                            .map(|(i, &pk)| t[1 + i][pk].clone()),
                    )
                    .collect();

                let mut coeff = head.clone();
                // last-denominator: f(s^p, chosen s at color p-1)
                if p - 1 < n {
                    let den = funcs::prod_f_left(&q, &s[p - 1], &xs[p - 2])?;
                    coeff = checked_div(&coeff, &den, "hc recursion denominator")?;
                }
                for i in 0..p - 2 {
                    let c = 1 + i;
                    let s_rest = funcs::without(&s[c], chain.choices[i]);
                    let t_rest = funcs::without(&t[c], t_chain[i]);
                    let num = funcs::g_r(&q, &xs[i + 1], &xs[i])?
                        .mul(&funcs::g_l(&q, &xt[i + 1], &xt[i])?)
                        .mul(&funcs::prod_f_left(&q, &s_rest, &xs[i + 1])?)
                        .mul(&funcs::prod_f_right(&q, &xt[i + 1], &t_rest)?);
                    let den = funcs::prod_f_left(&q, &s[c], &xs[i])?
                        .mul(&funcs::prod_f_right(&q, &xt[i + 1], &t[c - 1])?);
                    coeff = checked_div(&coeff.mul(&num), &den, "hc recursion denominator")?;
                }

                // reduced families
                let mut rs: Vec<Vec<S>> = s.to_vec();
                let mut rt: Vec<Vec<S>> = t.to_vec();
                rs[0] = s0_rest.clone();
                rt[0] = t0_rest.clone();
                for (i, &pk) in chain.choices.iter().enumerate() {
                    rs[1 + i].remove(pk);
                }
                for (i, &pk) in t_chain.iter().enumerate() {
                    rt[1 + i].remove(pk);
                }
                let sub = hc_first_color(ctx, o, level, &rs, &rt)?;
                total = total.add(&coeff.mul(&sub));
            }
        }
    }
    ctx.store(key, total.clone());
    Ok(total)
}

fn hc_last_color<S: Scalar>(
    ctx: &HcContext<S>,
    o: Orientation,
    level: usize,
    s: &[Vec<S>],
    t: &[Vec<S>],
) -> Result<S> {
    let (level, s, t) = trim(level, s, t);
    if s.is_empty() {
        return Ok(S::one());
    }
    let joined: Vec<Vec<S>> = s.iter().chain(t.iter()).cloned().collect();
    let key = CacheKey {
        route: Route::LastColor,
        key: multiset_key(level, &joined, o),
    };
    if let Some(v) = ctx.lookup(&key) {
        return Ok(v);
    }
    let q = ctx.q.oriented(o);
    let n = s.len();
    let last = n - 1;
    let anchor = t[last][0].clone();
    let t_last_rest = t[last][1..].to_vec();

    // chains run downward from color n-2; the s-side also picks one element
    // of the last color
    let chain_sizes: Vec<usize> = (0..last).rev().map(|c| t[c].len()).collect();
    let mut total = S::zero();
    for chain in recursion_partitions(&chain_sizes) {
        let d = chain.depth;
        let p = last + 3 - d; // 1-based starting color of the partitioned range
        let s_pick_space: Vec<Vec<usize>> = (p - 1..last)
            .rev()
            .map(|c| (0..s[c].len()).collect())
            .collect();
        let s_chains: Vec<Vec<usize>> = if s_pick_space.is_empty() {
            vec![Vec::new()]
        } else {
            s_pick_space.into_iter().multi_cartesian_product().collect()
        };
        for s_last_pick in 0..s[last].len() {
            let xs_last = s[last][s_last_pick].clone();
            let s_last_rest = funcs::without(&s[last], s_last_pick);
            let head = funcs::g_l(&q, &anchor, &xs_last)?
                .mul(&funcs::prod_f_left(&q, &s_last_rest, &xs_last)?)
                .mul(&funcs::prod_f_right(&q, &anchor, &s_last_rest)?);
            for s_chain in &s_chains {
                // chosen values downward; index i sits at color last - i
                let xt: Vec<S> = std::iter::once(anchor.clone())
                    .chain(
                        chain
                            .choices
                            .iter()
                            .enumerate()
                            .map(|(i, &pk)| t[last - 1 - i][pk].clone()),
                    )
                    .collect();
                let xs: Vec<S> = std::iter::once(xs_last.clone())
                    .chain(
                        s_chain
                            .iter()
                            .enumerate()
                            .map(|(i, &pk)| s[last - 1 - i][pk].clone()),
                    )
                    .collect();

                let mut coeff = head.clone();
                // head denominator: f(chosen t at color p, full t^{p-1})
                if p >= 2 {
                    let den = funcs::prod_f_right(&q, &xt[d - 2], &t[p - 2])?;
                    coeff = checked_div(&coeff, &den, "hc recursion denominator")?;
                }
                for i in 0..d - 2 {
                    let c = last - 1 - i;
                    let s_rest = funcs::without(&s[c], s_chain[i]);
                    let t_rest = funcs::without(&t[c], chain.choices[i]);
                    let num = funcs::g_l(&q, &xs[i], &xs[i + 1])?
                        .mul(&funcs::g_r(&q, &xt[i], &xt[i + 1])?)
                        .mul(&funcs::prod_f_left(&q, &s_rest, &xs[i + 1])?)
                        .mul(&funcs::prod_f_right(&q, &xt[i + 1], &t_rest)?);
                    let den = funcs::prod_f_left(&q, &s[c + 1], &xs[i + 1])?
                        .mul(&funcs::prod_f_right(&q, &xt[i], &t[c])?);
                    coeff = checked_div(&coeff.mul(&num), &den, "hc recursion denominator")?;
                }

                let mut rs: Vec<Vec<S>> = s.to_vec();
                let mut rt: Vec<Vec<S>> = t.to_vec();
                rs[last] = s_last_rest.clone();
                rt[last] = t_last_rest.clone();
                for (i, &pk) in s_chain.iter().enumerate() {
                    rs[last - 1 - i].remove(pk);
                }
                for (i, &pk) in chain.choices.iter().enumerate() {
                    rt[last - 1 - i].remove(pk);
                }
                let sub = hc_last_color(ctx, o, level, &rs, &rt)?;
                total = total.add(&coeff.mul(&sub));
            }
        }
    }
    ctx.store(key, total.clone());
    Ok(total)
}

/// Scalar product by direct contraction of the constructed vectors.
/// Mismatched per-color cardinalities give exactly zero.
pub fn brute_force_sp<S: Scalar>(
    model: &dyn Monodromy<S>,
    s: &BetheParams<S>,
    t: &BetheParams<S>,
) -> Result<S> {
    if s.cardinalities() != t.cardinalities() {
        return Ok(S::zero());
    }
    let bra = build_dual(model, s)?;
    let ket = build_bethe(model, t)?;
    Ok(bra.vec.dot(&ket.vec))
}

/// Scalar product by the sum over partitions with HC weights.
pub fn sum_formula_sp<S: Scalar>(
    model: &dyn Monodromy<S>,
    ctx: &HcContext<S>,
    s: &BetheParams<S>,
    t: &BetheParams<S>,
) -> Result<S> {
    if s.cardinalities() != t.cardinalities() {
        return Ok(S::zero());
    }
    if ctx.q() != model.q() {
        return Err(Error::Invalid(
            "HC context and model disagree on the deformation parameter".into(),
        ));
    }
    let q = ctx.q();
    let n = s.n_colors();
    let r = s.cardinalities();

    let mut total = S::zero();
    for split in crate::combin::sum_partitions(&r) {
        let mut s_first = Vec::with_capacity(n);
        let mut s_second = Vec::with_capacity(n);
        let mut t_first = Vec::with_capacity(n);
        let mut t_second = Vec::with_capacity(n);
        for c in 0..n {
            s_first.push(funcs::select(s.set(c), &split[c].s.first));
            s_second.push(funcs::select(s.set(c), &split[c].s.second));
            t_first.push(funcs::select(t.set(c), &split[c].t.first));
            t_second.push(funcs::select(t.set(c), &split[c].t.second));
        }

        let z = hc_z(
            ctx,
            &HcRequest::new(s_first.clone(), t_first.clone(), Orientation::Direct),
        )?;
        let zbar = hc_zbar(
            ctx,
            &HcRequest::new(s_second.clone(), t_second.clone(), Orientation::Direct),
        )?;

        let mut w = z.mul(&zbar);
        for c in 0..n {
            w = w
                .mul(&funcs::prod_f(q, &s_second[c], &s_first[c])?)
                .mul(&funcs::prod_f(q, &t_first[c], &t_second[c])?);
        }
        for c in 0..n - 1 {
            let den = funcs::prod_f(q, &s_second[c + 1], &s_first[c])?
                .mul(&funcs::prod_f(q, &t_first[c + 1], &t_second[c])?);
            w = checked_div(&w, &den, "sum formula denominator")?;
        }

        let mut alphas = S::one();
        for c in 0..n {
            for v in &s_first[c] {
                alphas = alphas.mul(&model.alpha(c + 1, v)?);
            }
            for v in &t_second[c] {
                alphas = alphas.mul(&model.alpha(c + 1, v)?);
            }
        }
        total = total.add(&w.mul(&alphas));
    }
    Ok(total)
}

/// The q <-> q^{-1} reflection: `Z_q(s|t)` against the conjugated HC of the
/// opposite orientation on color-reversed families.
pub fn hc_reflection_check<S: Scalar>(
    ctx: &HcContext<S>,
    s: &[Vec<S>],
    t: &[Vec<S>],
) -> Result<bool> {
    let lhs = hc_z(ctx, &HcRequest::new(s.to_vec(), t.to_vec(), Orientation::Direct))?;
    let mut s_rev = s.to_vec();
    let mut t_rev = t.to_vec();
    s_rev.reverse();
    t_rev.reverse();
    let rhs = hc_zbar(ctx, &HcRequest::new(s_rev, t_rev, Orientation::Inverted))?;
    Ok(lhs == rhs)
}

/// The inversion symmetry of the HC itself:
/// `Z_q(s|t) = Z_q(reversed t^{-1} | reversed s^{-1})`.
pub fn hc_symmetry_check<S: Scalar>(
    ctx: &HcContext<S>,
    s: &[Vec<S>],
    t: &[Vec<S>],
) -> Result<bool> {
    let lhs = hc_z(ctx, &HcRequest::new(s.to_vec(), t.to_vec(), Orientation::Direct))?;
    let inv_rev = |fam: &[Vec<S>]| -> Result<Vec<Vec<S>>> {
        let mut out = fam
            .iter()
            .map(|v| invert_all(v))
            .collect::<Result<Vec<_>>>()?;
        out.reverse();
        Ok(out)
    };
    let rhs = hc_z(
        ctx,
        &HcRequest::new(inv_rev(t)?, inv_rev(s)?, Orientation::Direct),
    )?;
    Ok(lhs == rhs)
}

/// Outcome of one residue verification.
#[derive(Clone, Debug)]
pub struct ResidueReport {
    pub extracted: Rat,
    pub predicted: Rat,
    pub ok: bool,
}

/// Verify the pole structure of the HC in the variable `s^mu_j`: the
/// residue at `s^mu_j = t^mu_j`, extracted by exact rational-function
/// reconstruction, must match the product formula built from the reduced
/// HC. Colors and indices are 0-based here.
pub fn hc_residue_check(
    ctx: &HcContext<Rat>,
    s: &[Vec<Rat>],
    t: &[Vec<Rat>],
    mu: usize,
    j: usize,
) -> Result<ResidueReport> {
    check_cardinalities(s, t)?;
    let q = ctx.q();
    let x0 = t[mu][j].clone();

    // oracle in the chosen variable
    let oracle = |x: &Rat| -> Option<Rat> {
        let mut s_var = s.to_vec();
        s_var[mu][j] = x.clone();
        hc_z(
            ctx,
            &HcRequest::new(s_var, t.to_vec(), Orientation::Direct),
        )
        .ok()
    };
    // deterministic off-pole sample stream
    let mut k = 0i64;
    let stream = move || {
        k += 1;
        Rat::new(2 * k + 1, 2)
    };
    let total: usize = s.iter().map(|v| v.len()).sum();
    let rf = reconstruct_rational(oracle, stream, 2 * total + 8)?;
    let extracted = rf.residue_at_simple_pole(&x0)?;

    // predicted residue: -t (q - q^{-1}) f(t-rest, t) f(t, s-rest) Z(reduced)
    //                    / ( f(t^{mu+1}, t) f(t, s^{mu-1}) )
    let s_rest = funcs::without(&s[mu], j);
    let t_rest = funcs::without(&t[mu], j);
    let mut rs = s.to_vec();
    let mut rt = t.to_vec();
    rs[mu].remove(j);
    rt[mu].remove(j);
    let reduced = hc_z(ctx, &HcRequest::new(rs, rt, Orientation::Direct))?;
    let mut predicted = x0
        .neg()
        .mul(&q.q_minus_qinv())
        .mul(&funcs::prod_f_left(q, &t_rest, &x0)?)
        .mul(&funcs::prod_f_right(q, &x0, &s_rest)?)
        .mul(&reduced);
    if mu + 1 < t.len() {
        let den = funcs::prod_f_left(q, &t[mu + 1], &x0)?;
        predicted = checked_div(&predicted, &den, "residue denominator")?;
    }
    if mu >= 1 {
        let den = funcs::prod_f_right(q, &x0, &s[mu - 1])?;
        predicted = checked_div(&predicted, &den, "residue denominator")?;
    }
    let ok = extracted == predicted;
    Ok(ResidueReport {
        extracted,
        predicted,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx3() -> HcContext<Rat> {
        HcContext::new(QParam::new(Rat::from_i64(3)).unwrap())
    }

    fn rats(vals: &[(i64, i64)]) -> Vec<Rat> {
        vals.iter().map(|&(n, d)| Rat::new(n, d)).collect()
    }

    #[test]
    fn empty_hc_is_one() {
        let ctx = ctx3();
        let req = HcRequest::new(vec![vec![]], vec![vec![]], Orientation::Direct);
        assert_eq!(hc_z(&ctx, &req).unwrap(), Rat::one());
        assert_eq!(hc_z_alt(&ctx, &req).unwrap(), Rat::one());
        assert_eq!(hc_zbar(&ctx, &req).unwrap(), Rat::one());
    }

    #[test]
    fn single_pair_hc_is_g_l() {
        let ctx = ctx3();
        // Z({s}|{t}) = g_l(t, s); with q=3, t=2, s=1 this is 16/3
        let req = HcRequest::new(
            vec![vec![Rat::from_i64(1)]],
            vec![vec![Rat::from_i64(2)]],
            Orientation::Direct,
        );
        assert_eq!(hc_z(&ctx, &req).unwrap(), Rat::new(16, 3));
        assert_eq!(hc_z_alt(&ctx, &req).unwrap(), Rat::new(16, 3));
    }

    #[test]
    fn rank_one_two_pairs_matches_hand_unrolling() {
        let ctx = ctx3();
        let q = ctx.q().clone();
        let s = rats(&[(1, 1), (5, 1)]);
        let t = rats(&[(2, 1), (7, 1)]);
        // two unrollings of the first-color recursion
        let mut expect = Rat::zero();
        for jt in 0..2 {
            let other = 1 - jt;
            let term = funcs::g_l(&q, &t[jt], &s[0])
                .unwrap()
                .mul(&funcs::f(&q, &t[jt], &t[other]).unwrap())
                .mul(&funcs::f(&q, &t[other], &s[0]).unwrap())
                .mul(&funcs::g_l(&q, &t[other], &s[1]).unwrap());
            expect = expect.add(&term);
        }
        let req = HcRequest::new(vec![s], vec![t], Orientation::Direct);
        assert_eq!(hc_z(&ctx, &req).unwrap(), expect);
        assert_eq!(hc_z_alt(&ctx, &req).unwrap(), expect);
    }

    #[test]
    fn memoization_is_transparent() {
        let warm = ctx3();
        let req = HcRequest::new(
            vec![rats(&[(1, 1), (5, 1)]), rats(&[(3, 1)])],
            vec![rats(&[(2, 1), (7, 1)]), rats(&[(4, 1)])],
            Orientation::Direct,
        );
        let first = hc_z(&warm, &req).unwrap();
        assert!(warm.cache_len() > 0);
        let second = hc_z(&warm, &req).unwrap();
        let cold = hc_z(&ctx3(), &req).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, cold);
    }

    #[test]
    fn single_pair_residue_is_minus_t_times_bracket() {
        // residue of g_l(t,s) at s = t in the variable s is -t(q - q^{-1})
        let ctx = ctx3();
        let s = vec![rats(&[(1, 1)])];
        let t = vec![rats(&[(2, 1)])];
        let report = hc_residue_check(&ctx, &s, &t, 0, 0).unwrap();
        assert!(report.ok);
        let expect = Rat::from_i64(2)
            .neg()
            .mul(&Rat::from_i64(3).sub(&Rat::new(1, 3)));
        assert_eq!(report.extracted, expect);
    }
}
