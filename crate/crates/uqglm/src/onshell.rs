//! Bethe-equation solving, eigenvector verification, the Gaudin matrix,
//! the norm identity, and the Korepin-criteria property tests.
//!
//! The Bethe system is written multiplicatively as `Phi_j^nu = 1`. Roots
//! are found by damped Newton iteration from many random starts on the
//! complex backend; the Jacobian comes from the closed-form entries of the
//! Gaudin matrix, which are valid off-shell. Vetted roots are then fed to
//! two independent verifications: the transfer-matrix eigenvector residual
//! and the Gaudin-determinant form of the squared norm against a
//! brute-force scalar product.

use crate::bethe::{build_bethe, BetheParams};
use crate::chain::{transfer_matrix, ChainConfig, Monodromy};
use crate::error::{Error, Result};
use crate::funcs;
use crate::linalg::{DenseMat, DenseVec};
use crate::scalar::{MpC, MpReal, QParam, Rat, Scalar};
use crate::sp::brute_force_sp;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

/// `K(x,y) = (q+q^{-1})(q-q^{-1})^2 xy / ((qx - q^{-1}y)(q^{-1}x - qy))`.
/// Regular at x = y, where it equals `-(q+q^{-1})`.
pub fn kappa_fn<S: Scalar>(q: &QParam<S>, x: &S, y: &S) -> Result<S> {
    let d1 = q.q().mul(x).sub(&q.q_inv().mul(y));
    let d2 = q.q_inv().mul(x).sub(&q.q().mul(y));
    let den = d1.mul(&d2);
    if den.is_zero() {
        return Err(Error::Pole { context: "K(x,y)" });
    }
    let w = q.q_minus_qinv();
    Ok(q.q_plus_qinv().mul(&w).mul(&w).mul(x).mul(y).div(&den))
}

/// `J(x,y) = (q-q^{-1})^2 xy / ((qx - q^{-1}y)(x - y))`.
pub fn j_fn<S: Scalar>(q: &QParam<S>, x: &S, y: &S) -> Result<S> {
    let d1 = q.q().mul(x).sub(&q.q_inv().mul(y));
    let d2 = x.sub(y);
    let den = d1.mul(&d2);
    if den.is_zero() {
        return Err(Error::Pole { context: "J(x,y)" });
    }
    let w = q.q_minus_qinv();
    Ok(w.mul(&w).mul(x).mul(y).div(&den))
}

/// The Bethe-equation function `Phi_j^nu` (0-based color and index):
/// `alpha_nu(t) f(rest, t)/f(t, rest) * f(t, lower color)/f(upper color, t)`.
/// On-shell roots satisfy `Phi = 1`.
pub fn phi<S: Scalar>(
    model: &dyn Monodromy<S>,
    t: &BetheParams<S>,
    nu: usize,
    j: usize,
) -> Result<S> {
    let q = model.q();
    let x = &t.set(nu)[j];
    let rest = funcs::without(t.set(nu), j);
    let mut value = model.alpha(nu + 1, x)?;
    let up = funcs::prod_f_left(q, &rest, x)?;
    let down = funcs::prod_f_right(q, x, &rest)?;
    value = funcs::checked_div(&value.mul(&up), &down, "phi ratio")?;
    if nu >= 1 {
        value = value.mul(&funcs::prod_f_right(q, x, t.set(nu - 1))?);
    }
    if nu + 1 < t.n_colors() {
        let den = funcs::prod_f_left(q, t.set(nu + 1), x)?;
        value = funcs::checked_div(&value, &den, "phi ratio")?;
    }
    Ok(value)
}

/// Per-slot values `X_j^mu` of the logarithmic alpha-derivatives for the
/// twisted chain, in closed form: `X = sum_k J(t, xi_k)` on the first
/// color, zero on the others (the twist contributes constants only).
pub fn x_from_alpha<S: Scalar>(cfg: &ChainConfig<S>, mu: usize, t: &S) -> Result<S> {
    if mu == 0 {
        let mut acc = S::zero();
        for xi in cfg.xi() {
            acc = acc.add(&j_fn(cfg.q(), t, xi)?);
        }
        Ok(acc)
    } else {
        Ok(S::zero())
    }
}

/// All `X_j^mu` values for a parameter family on the twisted chain.
pub fn x_table_from_alpha<S: Scalar>(
    cfg: &ChainConfig<S>,
    t: &BetheParams<S>,
) -> Result<Vec<Vec<S>>> {
    t.sets()
        .iter()
        .enumerate()
        .map(|(mu, set)| set.iter().map(|v| x_from_alpha(cfg, mu, v)).collect())
        .collect()
}

/// The Gaudin matrix for parameters `t` and free values `X`, as a dense
/// block matrix flattened color-major. Blocks couple only adjacent colors.
pub fn gaudin_matrix<S: Scalar>(
    q: &QParam<S>,
    t: &[Vec<S>],
    x: &[Vec<S>],
) -> Result<DenseMat<S>> {
    let r: Vec<usize> = t.iter().map(|v| v.len()).collect();
    let offsets: Vec<usize> = r
        .iter()
        .scan(0usize, |acc, &n| {
            let o = *acc;
            *acc += n;
            Some(o)
        })
        .collect();
    let total: usize = r.iter().sum();
    let mut g = DenseMat::zeros(total);

    for mu in 0..t.len() {
        for jj in 0..r[mu] {
            let tj = &t[mu][jj];
            let row = offsets[mu] + jj;
            // diagonal block
            for kk in 0..r[mu] {
                let mut entry = kappa_fn(q, tj, &t[mu][kk])?;
                if kk == jj {
                    let mut diag = x[mu][jj].clone();
                    for tp in &t[mu] {
                        diag = diag.sub(&kappa_fn(q, tj, tp)?);
                    }
                    if mu >= 1 {
                        for tq in &t[mu - 1] {
                            diag = diag.add(&j_fn(q, tj, tq)?);
                        }
                    }
                    if mu + 1 < t.len() {
                        for tr in &t[mu + 1] {
                            diag = diag.add(&j_fn(q, tr, tj)?);
                        }
                    }
                    entry = entry.add(&diag);
                }
                g.set(row, offsets[mu] + kk, entry);
            }
            // adjacent blocks
            if mu >= 1 {
                for kk in 0..r[mu - 1] {
                    let entry = j_fn(q, tj, &t[mu - 1][kk])?.neg();
                    g.set(row, offsets[mu - 1] + kk, entry);
                }
            }
            if mu + 1 < t.len() {
                for kk in 0..r[mu + 1] {
                    let entry = j_fn(q, &t[mu + 1][kk], tj)?.neg();
                    g.set(row, offsets[mu + 1] + kk, entry);
                }
            }
        }
    }
    Ok(g)
}

/// Modified X-values entering the reduced system when the pair
/// `(X_j^mu, t_j^mu)` is removed.
fn modified_x<S: Scalar>(
    q: &QParam<S>,
    t: &[Vec<S>],
    x: &[Vec<S>],
    mu: usize,
    j: usize,
) -> Result<Vec<Vec<S>>> {
    let tj = &t[mu][j];
    let mut out = x.to_vec();
    for (nu, set) in out.iter_mut().enumerate() {
        for (k, xv) in set.iter_mut().enumerate() {
            if nu == mu && k != j {
                *xv = xv.sub(&kappa_fn(q, tj, &t[mu][k])?);
            } else if nu == mu + 1 {
                *xv = xv.add(&j_fn(q, &t[nu][k], tj)?);
            } else if nu + 1 == mu {
                *xv = xv.add(&j_fn(q, tj, &t[nu][k])?);
            }
        }
    }
    out[mu].remove(j);
    Ok(out)
}

/// Outcome of the five Korepin-criteria checks on `det G` with free X.
#[derive(Clone, Debug)]
pub struct KorepinReport {
    pub pair_symmetry: bool,
    pub x_linearity: bool,
    pub single_pair_value: bool,
    pub derivative_identity: bool,
    pub zero_at_zero_x: bool,
}

impl KorepinReport {
    pub fn all_pass(&self) -> bool {
        self.pair_symmetry
            && self.x_linearity
            && self.single_pair_value
            && self.derivative_identity
            && self.zero_at_zero_x
    }
}

/// Run the Korepin criteria on `det G` treating the `X_j^mu` as free
/// rational values independent of the parameters. All checks are exact.
pub fn korepin_suite(q: &QParam<Rat>, t: &[Vec<Rat>], x: &[Vec<Rat>]) -> Result<KorepinReport> {
    let det_of = |t_: &[Vec<Rat>], x_: &[Vec<Rat>]| -> Result<Rat> {
        Ok(gaudin_matrix(q, t_, x_)?.det())
    };
    let base = det_of(t, x)?;

    // (i) symmetry under swapping pairs within a color
    let mut pair_symmetry = true;
    for mu in 0..t.len() {
        for a in 0..t[mu].len() {
            for b in a + 1..t[mu].len() {
                let mut ts = t.to_vec();
                let mut xs = x.to_vec();
                ts[mu].swap(a, b);
                xs[mu].swap(a, b);
                if det_of(&ts, &xs)? != base {
                    pair_symmetry = false;
                }
            }
        }
    }

    // (ii) linearity in each X: the second difference vanishes
    let mut x_linearity = true;
    for mu in 0..x.len() {
        for j in 0..x[mu].len() {
            let shift = |delta: i64| -> Result<Rat> {
                let mut xs = x.to_vec();
                xs[mu][j] = xs[mu][j].add(&Rat::from_i64(delta));
                det_of(t, &xs)
            };
            let second_diff = shift(2)?.sub(&shift(1)?).sub(&shift(1)?).add(&base);
            if !second_diff.is_zero() {
                x_linearity = false;
            }
        }
    }

    // (iii) the one-pair system is X itself
    let t1 = vec![vec![t[0][0].clone()]];
    let x1 = vec![vec![x[0][0].clone()]];
    let single_pair_value = det_of(&t1, &x1)? == x1[0][0];

    // (iv) the X-derivative equals the principal minor and equals the
    // reduced determinant with modified X
    let mut derivative_identity = true;
    let offsets: Vec<usize> = t
        .iter()
        .scan(0usize, |acc, set| {
            let o = *acc;
            *acc += set.len();
            Some(o)
        })
        .collect();
    for mu in 0..t.len() {
        for j in 0..t[mu].len() {
            let mut xs = x.to_vec();
            xs[mu][j] = xs[mu][j].add(&Rat::one());
            let derivative = det_of(t, &xs)?.sub(&base);
            let flat = offsets[mu] + j;
            let minor = gaudin_matrix(q, t, x)?.minor(flat, flat).det();
            let mut tr = t.to_vec();
            tr[mu].remove(j);
            let xr = modified_x(q, t, x, mu, j)?;
            let reduced = det_of(&tr, &xr)?;
            if derivative != minor || derivative != reduced {
                derivative_identity = false;
            }
        }
    }

    // (v) vanishing at X = 0
    let zeros: Vec<Vec<Rat>> = x.iter().map(|s| vec![Rat::zero(); s.len()]).collect();
    let zero_at_zero_x = det_of(t, &zeros)?.is_zero();

    Ok(KorepinReport {
        pair_symmetry,
        x_linearity,
        single_pair_value,
        derivative_identity,
        zero_at_zero_x,
    })
}

/// Options for the Bethe-equation solver.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub prec: usize,
    pub seeds: usize,
    pub max_iter: usize,
    /// Decimal literal for the residual tolerance, e.g. "1e-25".
    pub tol: String,
    /// Decimal literal for the root-separation threshold.
    pub separation: String,
    pub rng_seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            prec: 256,
            seeds: 200,
            max_iter: 80,
            tol: "1e-25".into(),
            separation: "1e-20".into(),
            rng_seed: 1,
        }
    }
}

/// A vetted solution of the Bethe system.
#[derive(Clone, Debug)]
pub struct BetheRoots {
    pub params: BetheParams<MpC>,
    /// Per-root residuals `|Phi_j^nu - 1|` (1-norm bound).
    pub residuals: Vec<MpReal>,
}

impl BetheRoots {
    pub fn max_residual(&self) -> MpReal {
        self.residuals
            .iter()
            .fold(MpReal::from_i64(0, 128), |acc, r| acc.max(r))
    }

    /// Re-round all roots to a higher precision (extension is exact).
    pub fn with_prec(&self, prec: usize) -> BetheRoots {
        BetheRoots {
            params: BetheParams::new(
                self.params
                    .sets()
                    .iter()
                    .map(|s| s.iter().map(|v| v.with_prec(prec)).collect())
                    .collect(),
            ),
            residuals: self.residuals.clone(),
        }
    }
}

fn unflatten(flat: &[MpC], r: &[usize]) -> BetheParams<MpC> {
    let mut sets = Vec::with_capacity(r.len());
    let mut at = 0;
    for &n in r {
        sets.push(flat[at..at + n].to_vec());
        at += n;
    }
    BetheParams::new(sets)
}

fn residual_vec(model: &ChainConfig<MpC>, params: &BetheParams<MpC>) -> Result<Vec<MpC>> {
    let mut out = Vec::new();
    for nu in 0..params.n_colors() {
        for j in 0..params.set(nu).len() {
            out.push(phi(model, params, nu, j)?.sub(&MpC::one()));
        }
    }
    Ok(out)
}

fn norm1(values: &[MpC]) -> MpReal {
    values
        .iter()
        .fold(MpReal::from_i64(0, 128), |acc, v| acc.add(&v.abs1()))
}

/// Jacobian of `Phi - 1` from the closed-form Gaudin entries, which encode
/// `-(q - q^{-1}) t_k d log Phi_j / d t_k` and hold off-shell.
fn bethe_jacobian(
    model: &ChainConfig<MpC>,
    params: &BetheParams<MpC>,
    phis: &[MpC],
) -> Result<DenseMat<MpC>> {
    let x = x_table_from_alpha(model, params)?;
    let g = gaudin_matrix(model.q(), params.sets(), &x)?;
    let flat_t: Vec<MpC> = params.flatten();
    if flat_t.iter().any(|v| v.is_zero()) {
        return Err(Error::ZeroParameter);
    }
    let w = model.q().q_minus_qinv();
    let n = flat_t.len();
    let mut jac = DenseMat::zeros(n);
    for row in 0..n {
        for col in 0..n {
            let denom = w.mul(&flat_t[col]).neg();
            let entry = phis[row].mul(g.get(row, col)).div(&denom);
            jac.set(row, col, entry);
        }
    }
    Ok(jac)
}

/// Solver result: vetted solutions plus per-seed convergence accounting.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solutions: Vec<BetheRoots>,
    pub converged_seeds: usize,
    pub failed_seeds: usize,
}

/// Solve the Bethe system for the requested cardinalities by damped Newton
/// iteration from seeded random starts. Returns deduplicated, vetted
/// solutions in a deterministic order; seeds that do not converge (or land
/// on inadmissible configurations) are counted, never returned.
pub fn solve_bethe(
    cfg: &ChainConfig<Rat>,
    r: &[usize],
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    if r.len() != cfg.m() - 1 {
        return Err(Error::Invalid(format!(
            "expected {} cardinalities, got {}",
            cfg.m() - 1,
            r.len()
        )));
    }
    let prec = opts.prec;
    let model = cfg.to_mpc(prec);
    let tol = MpReal::try_parse_dec(&opts.tol, prec)?;
    let sep = MpReal::try_parse_dec(&opts.separation, prec)?;
    let total: usize = r.iter().sum();
    if total == 0 {
        return Ok(SolveOutcome {
            solutions: vec![BetheRoots {
                params: BetheParams::empty(r.len()),
                residuals: Vec::new(),
            }],
            converged_seeds: 0,
            failed_seeds: 0,
        });
    }

    // seeding box scaled to the inhomogeneities and the deformation
    let xi_mag = cfg
        .xi()
        .iter()
        .map(|x| x.to_f64_lossy().abs())
        .fold(0.0f64, f64::max);
    let q_mag = cfg.q().q().to_f64_lossy().abs();
    let box_r = 2.0 * (1.0 + xi_mag) * (1.0 + q_mag + 1.0 / q_mag);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    let mut found: Vec<(Vec<MpC>, Vec<MpReal>)> = Vec::new();
    let mut converged_seeds = 0usize;
    let mut failed_seeds = 0usize;

    for _ in 0..opts.seeds {
        let start: Vec<MpC> = (0..total)
            .map(|_| {
                MpC::from_f64_pair(
                    rng.gen_range(-box_r..box_r),
                    rng.gen_range(-box_r..box_r),
                    prec,
                )
            })
            .collect();
        let Some(root) = newton_run(&model, r, start, &tol, opts.max_iter) else {
            failed_seeds += 1;
            continue;
        };
        converged_seeds += 1;
        // vet: separation from zero, from the inhomogeneities, and among roots
        let params = unflatten(&root, r);
        if !vet_separation(&model, &params, &sep) {
            continue;
        }
        // canonical within-color order
        let mut canonical = params.sets().to_vec();
        for set in &mut canonical {
            set.sort_by(|a, b| match a.re.cmp(&b.re) {
                Ordering::Equal => a.im.cmp(&b.im),
                other => other,
            });
        }
        let flat: Vec<MpC> = canonical.iter().flatten().cloned().collect();
        let is_new = found.iter().all(|(existing, _)| {
            existing
                .iter()
                .zip(&flat)
                .any(|(a, b)| a.sub(b).abs1().cmp(&sep) == Ordering::Greater)
        });
        if !is_new {
            continue;
        }
        let params = unflatten(&flat, r);
        let residuals: Vec<MpReal> = residual_vec(&model, &params)
            .map_err(|_| Error::NoConvergence("root evaluation failed after vetting".into()))?
            .iter()
            .map(|v| v.abs1())
            .collect();
        if residuals.iter().any(|rv| rv.cmp(&tol) != Ordering::Less) {
            continue;
        }
        found.push((flat, residuals));
    }

    // deterministic ordering by serialized roots
    found.sort_by_key(|(flat, _)| {
        flat.iter()
            .map(|v| v.serialize())
            .collect::<Vec<_>>()
            .join(";")
    });
    Ok(SolveOutcome {
        solutions: found
            .into_iter()
            .map(|(flat, residuals)| BetheRoots {
                params: unflatten(&flat, r),
                residuals,
            })
            .collect(),
        converged_seeds,
        failed_seeds,
    })
}

fn vet_separation(model: &ChainConfig<MpC>, params: &BetheParams<MpC>, sep: &MpReal) -> bool {
    let flat = params.flatten();
    for (i, a) in flat.iter().enumerate() {
        if a.abs1().cmp(sep) != Ordering::Greater {
            return false;
        }
        for b in &flat[i + 1..] {
            if a.sub(b).abs1().cmp(sep) != Ordering::Greater {
                return false;
            }
        }
        for xi in model.xi() {
            if a.sub(xi).abs1().cmp(sep) != Ordering::Greater {
                return false;
            }
        }
    }
    true
}

fn newton_run(
    model: &ChainConfig<MpC>,
    r: &[usize],
    mut state: Vec<MpC>,
    tol: &MpReal,
    max_iter: usize,
) -> Option<Vec<MpC>> {
    let mut f = residual_vec(model, &unflatten(&state, r)).ok()?;
    let mut err = norm1(&f);
    for _ in 0..max_iter {
        if err.cmp(tol) == Ordering::Less {
            return Some(state);
        }
        let params = unflatten(&state, r);
        let phis: Vec<MpC> = f.iter().map(|v| v.add(&MpC::one())).collect();
        let jac = bethe_jacobian(model, &params, &phis).ok()?;
        let rhs = DenseVec {
            data: f.iter().map(|v| v.neg()).collect(),
        };
        let step = jac.solve(&rhs).ok()?;
        // backtracking damping
        let mut lambda = MpReal::from_i64(1, state[0].prec());
        let half = MpReal::from_i64(1, 64).div(&MpReal::from_i64(2, 64));
        let mut accepted = false;
        for _ in 0..48 {
            let trial: Vec<MpC> = state
                .iter()
                .zip(&step.data)
                .map(|(x, d)| x.add(&MpC::new(d.re.mul(&lambda), d.im.mul(&lambda))))
                .collect();
            if let Ok(tf) = residual_vec(model, &unflatten(&trial, r)) {
                let terr = norm1(&tf);
                if terr.cmp(&err) == Ordering::Less {
                    state = trial;
                    f = tf;
                    err = terr;
                    accepted = true;
                    break;
                }
            }
            lambda = lambda.mul(&half);
        }
        if !accepted {
            return None;
        }
    }
    if err.cmp(tol) == Ordering::Less {
        Some(state)
    } else {
        None
    }
}

/// Result of the eigenvector verification at one spectral point.
#[derive(Clone, Debug)]
pub struct EigenSample {
    pub u: String,
    pub eigenvalue: String,
    /// `||T(u) v - Lambda v||^2 / ||v||^2`.
    pub residual_sq: MpReal,
    pub pass: bool,
    /// Agreement of the eigenvalue with a recomputation at twice the
    /// precision.
    pub eigenvalue_stable: bool,
}

/// Check that the Bethe vector at the given roots is a transfer-matrix
/// eigenvector at every sample point, with the Rayleigh quotient as the
/// eigenvalue, and that the eigenvalue survives a precision doubling.
pub fn eigenvector_check(
    cfg: &ChainConfig<Rat>,
    roots: &BetheRoots,
    u_samples: &[Rat],
    tol: &str,
    prec: usize,
) -> Result<Vec<EigenSample>> {
    let tol_lo = MpReal::try_parse_dec(tol, prec)?;
    let model = cfg.to_mpc(prec);
    let model_hi = cfg.to_mpc(2 * prec);
    let v = build_bethe(&model, &roots.params)?.vec;
    let v_hi = build_bethe(&model_hi, &roots.with_prec(2 * prec).params)?.vec;
    let vv = v.dot_conj(&v);
    let vv_hi = v_hi.dot_conj(&v_hi);
    if vv.is_zero() {
        return Err(Error::Invalid("vanishing Bethe vector".into()));
    }
    let mut out = Vec::new();
    for u in u_samples {
        let u_mp = MpC::from_rat(u, prec);
        let t_op = transfer_matrix(&model, &u_mp)?;
        let w = t_op.apply(&v);
        let lambda = v.dot_conj(&w).div(&vv);
        let diff = w.sub(&v.scale(&lambda));
        let residual_sq = diff.dot_conj(&diff).re.div(&vv.re);
        let pass = residual_sq.cmp(&tol_lo.mul(&tol_lo)) == Ordering::Less;

        let u_hi = MpC::from_rat(u, 2 * prec);
        let t_hi = transfer_matrix(&model_hi, &u_hi)?;
        let w_hi = t_hi.apply(&v_hi);
        let lambda_hi = v_hi.dot_conj(&w_hi).div(&vv_hi);
        let lam_scale = MpReal::from_i64(1, prec).add(&lambda.abs1());
        let eigenvalue_stable = lambda_hi
            .with_prec(prec)
            .sub(&lambda)
            .abs1()
            .cmp(&tol_lo.mul(&lam_scale))
            == Ordering::Less;

        out.push(EigenSample {
            u: u.serialize(),
            eigenvalue: lambda.serialize(),
            residual_sq,
            pass,
            eigenvalue_stable,
        });
    }
    Ok(out)
}

/// Result of the norm verification.
#[derive(Clone, Debug)]
pub struct NormReport {
    pub lhs: MpC,
    pub rhs: MpC,
    pub rel_err: MpReal,
    pub pass: bool,
}

/// Verify the Gaudin-determinant form of the squared norm: the contraction
/// `C(t) B(t)` against the product prefactor times `det G`, built from the
/// closed-form `X` of the chain.
pub fn norm_check(
    cfg: &ChainConfig<Rat>,
    roots: &BetheRoots,
    tol: &str,
    prec: usize,
) -> Result<NormReport> {
    let tol = MpReal::try_parse_dec(tol, prec)?;
    let model = cfg.to_mpc(prec);
    let t = &roots.params;
    let lhs = brute_force_sp(&model, t, t)?;

    let q = model.q();
    let mut prefactor = MpC::one();
    for k in 0..t.n_colors() {
        if k + 1 < t.n_colors() {
            let den = funcs::prod_f(q, t.set(k + 1), t.set(k))?;
            prefactor = funcs::checked_div(&prefactor, &den, "norm prefactor")?;
        }
        let set = t.set(k);
        for p in 0..set.len() {
            for s in 0..set.len() {
                if p != s {
                    prefactor = prefactor.mul(&funcs::f(q, &set[p], &set[s])?);
                }
            }
        }
    }
    let x = x_table_from_alpha(&model, t)?;
    let det = gaudin_matrix(q, t.sets(), &x)?.det();
    let rhs = prefactor.mul(&det);

    let diff = lhs.sub(&rhs).abs1();
    let scale = lhs.abs1().max(&rhs.abs1());
    let rel_err = if scale.is_zero() {
        diff.clone()
    } else {
        diff.div(&scale)
    };
    let pass = rel_err.cmp(&tol) == Ordering::Less;
    Ok(NormReport {
        lhs,
        rhs,
        rel_err,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q3() -> QParam<Rat> {
        QParam::new(Rat::from_i64(3)).unwrap()
    }

    #[test]
    fn kappa_is_regular_at_coincidence() {
        let q = q3();
        let t = Rat::new(5, 2);
        let k = kappa_fn(&q, &t, &t).unwrap();
        assert_eq!(k, q.q_plus_qinv().neg());
    }

    #[test]
    fn single_pair_gaudin_is_x() {
        // the kappa terms cancel between the diagonal sum and the additive
        // kappa, leaving G = [X]
        let q = q3();
        let t = vec![vec![Rat::new(5, 2)]];
        let x = vec![vec![Rat::new(7, 3)]];
        let g = gaudin_matrix(&q, &t, &x).unwrap();
        assert_eq!(g.det(), Rat::new(7, 3));
    }

    #[test]
    fn distant_blocks_vanish() {
        let q = q3();
        let t = vec![
            vec![Rat::from_i64(2)],
            vec![Rat::from_i64(5)],
            vec![Rat::from_i64(11)],
        ];
        let x = vec![
            vec![Rat::from_i64(1)],
            vec![Rat::from_i64(1)],
            vec![Rat::from_i64(1)],
        ];
        let g = gaudin_matrix(&q, &t, &x).unwrap();
        assert!(g.get(0, 2).is_zero());
        assert!(g.get(2, 0).is_zero());
        assert!(!g.get(0, 1).is_zero());
    }

    #[test]
    fn korepin_criteria_on_small_instance() {
        let q = q3();
        let t = vec![
            vec![Rat::from_i64(2), Rat::from_i64(7)],
            vec![Rat::from_i64(5)],
        ];
        let x = vec![
            vec![Rat::new(3, 2), Rat::new(-4, 7)],
            vec![Rat::new(9, 5)],
        ];
        let report = korepin_suite(&q, &t, &x).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }
}
