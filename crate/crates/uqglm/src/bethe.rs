//! Construction of Bethe vectors and dual Bethe vectors by recursion.
//!
//! A Bethe vector with parameter sets `t^1, ..., t^N` (N = m-1 colors) is
//! built by stripping one parameter of the lowest nonempty color at a time:
//! the vector with `{z, t^1}; t^2; ...` expands into applications of the
//! creation operators `T_{1,j}(z)` to vectors with fewer parameters, summed
//! over singleton chains through the intermediate colors. Once a leading
//! color is exhausted the construction descends to the algebra spanned by
//! the lower-right corner of the monodromy matrix, acting on the same
//! pseudovacuum; this only shifts all operator and eigenvalue indices.
//!
//! A second, independent route strips the highest nonempty color using the
//! operators `T_{j,N+1}(z)` and descends through the upper-left corner.
//! Both routes must produce the identical vector; dual vectors follow the
//! mirrored recursions with the operators acting from the right.

use crate::chain::{color_charges, Composite, Monodromy};
use crate::combin::{recursion_partitions, subset_partitions};
use crate::error::{Error, Result};
use crate::funcs::{self, checked_div};
use crate::linalg::{DenseVec, SparseOp};
use crate::scalar::{MpC, Rat, Scalar};

/// Ordered family of per-color spectral parameter sets.
#[derive(Clone, Debug, PartialEq)]
pub struct BetheParams<S> {
    sets: Vec<Vec<S>>,
}

impl<S: Scalar> BetheParams<S> {
    pub fn new(sets: Vec<Vec<S>>) -> Self {
        BetheParams { sets }
    }

    pub fn empty(n_colors: usize) -> Self {
        BetheParams {
            sets: vec![Vec::new(); n_colors],
        }
    }

    pub fn sets(&self) -> &[Vec<S>] {
        &self.sets
    }

    pub fn set(&self, color: usize) -> &[S] {
        &self.sets[color]
    }

    pub fn n_colors(&self) -> usize {
        self.sets.len()
    }

    pub fn cardinalities(&self) -> Vec<usize> {
        self.sets.iter().map(|s| s.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.sets.iter().map(|s| s.len()).sum()
    }

    /// All parameters of all colors, flattened.
    pub fn flatten(&self) -> Vec<S> {
        self.sets.iter().flatten().cloned().collect()
    }

    /// Every parameter distinct from every other one, across colors too.
    pub fn all_distinct(&self) -> bool {
        crate::scalar::all_distinct(&self.flatten())
    }

    /// Color order reversed (within-color order kept).
    pub fn reversed(&self) -> Self {
        let mut sets = self.sets.clone();
        sets.reverse();
        BetheParams { sets }
    }

    /// Elementwise inverses of all parameters.
    pub fn inverted(&self) -> Result<Self> {
        let sets = self
            .sets
            .iter()
            .map(|s| crate::scalar::invert_all(s))
            .collect::<Result<_>>()?;
        Ok(BetheParams { sets })
    }

    pub fn to_json(&self) -> String {
        let raw: Vec<Vec<String>> = self
            .sets
            .iter()
            .map(|s| s.iter().map(|v| v.serialize()).collect())
            .collect();
        serde_json::to_string(&serde_json::json!({ "t": raw })).expect("params serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Raw {
            t: Vec<Vec<String>>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("parameters: {e}")))?;
        let sets = raw
            .t
            .iter()
            .map(|s| s.iter().map(|v| S::parse(v)).collect::<Result<Vec<S>>>())
            .collect::<Result<_>>()?;
        Ok(BetheParams { sets })
    }

    /// Check the invariants required of Bethe parameters for a model with
    /// the given inhomogeneities: pairwise distinct (cross-color included)
    /// and distinct from every inhomogeneity.
    pub fn validate(&self, xi: &[S]) -> Result<()> {
        if !self.all_distinct() {
            return Err(Error::Invalid(
                "Bethe parameters must be pairwise distinct (cross-color included)".into(),
            ));
        }
        for v in self.flatten() {
            if xi.contains(&v) {
                return Err(Error::Invalid(
                    "Bethe parameters must avoid the inhomogeneities".into(),
                ));
            }
        }
        Ok(())
    }
}

impl BetheParams<Rat> {
    pub fn to_mpc(&self, prec: usize) -> BetheParams<MpC> {
        BetheParams {
            sets: self
                .sets
                .iter()
                .map(|s| s.iter().map(|v| MpC::from_rat(v, prec)).collect())
                .collect(),
        }
    }
}

/// Which side of the pairing a constructed vector lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Ket,
    Bra,
}

/// A constructed (dual) Bethe vector together with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct BetheVector<S: Scalar> {
    pub params: BetheParams<S>,
    pub vec: DenseVec<S>,
    pub side: Side,
}

fn check_shape<S: Scalar>(model: &dyn Monodromy<S>, t: &BetheParams<S>) -> Result<()> {
    if t.n_colors() != model.rank() - 1 {
        return Err(Error::Invalid(format!(
            "expected {} colors, got {}",
            model.rank() - 1,
            t.n_colors()
        )));
    }
    if !t.all_distinct() {
        return Err(Error::Invalid(
            "Bethe parameters must be pairwise distinct (cross-color included)".into(),
        ));
    }
    Ok(())
}

/// Bethe vector via the recursion that strips the lowest nonempty color.
pub fn build_bethe<S: Scalar>(
    model: &dyn Monodromy<S>,
    t: &BetheParams<S>,
) -> Result<BetheVector<S>> {
    check_shape(model, t)?;
    let vec = ket_low(model, t.sets().to_vec())?;
    Ok(BetheVector {
        params: t.clone(),
        vec,
        side: Side::Ket,
    })
}

/// The same vector via the independent recursion that strips the highest
/// nonempty color. Must agree with [`build_bethe`] exactly.
pub fn build_bethe_alt<S: Scalar>(
    model: &dyn Monodromy<S>,
    t: &BetheParams<S>,
) -> Result<BetheVector<S>> {
    check_shape(model, t)?;
    let vec = ket_high(model, t.sets().to_vec())?;
    Ok(BetheVector {
        params: t.clone(),
        vec,
        side: Side::Ket,
    })
}

/// Dual Bethe vector via the recursion over the lowest nonempty color.
pub fn build_dual<S: Scalar>(
    model: &dyn Monodromy<S>,
    s: &BetheParams<S>,
) -> Result<BetheVector<S>> {
    check_shape(model, s)?;
    let vec = bra_low(model, s.sets().to_vec())?;
    Ok(BetheVector {
        params: s.clone(),
        vec,
        side: Side::Bra,
    })
}

/// Dual Bethe vector via the recursion over the highest nonempty color.
pub fn build_dual_alt<S: Scalar>(
    model: &dyn Monodromy<S>,
    s: &BetheParams<S>,
) -> Result<BetheVector<S>> {
    check_shape(model, s)?;
    let vec = bra_high(model, s.sets().to_vec())?;
    Ok(BetheVector {
        params: s.clone(),
        vec,
        side: Side::Bra,
    })
}

fn low_recursion<S: Scalar>(
    model: &dyn Monodromy<S>,
    sets: Vec<Vec<S>>,
    side: Side,
) -> Result<DenseVec<S>> {
    let n = sets.len();
    let Some(c0) = sets.iter().position(|s| !s.is_empty()) else {
        return Ok(model.vacuum());
    };
    let z = sets[c0][0].clone();
    let t_of_z = model.entries(&z)?;
    let lambda = model.lambda(c0 + 2, &z)?;
    if lambda.is_zero() {
        return Err(Error::Invalid("vanishing vacuum eigenvalue".into()));
    }

    // remaining parameters of the stripped color
    let mut base = sets.clone();
    base[c0].remove(0);

    // sizes of the colors the singleton chains run through
    let chain_sizes: Vec<usize> = (c0 + 1..n).map(|c| sets[c].len()).collect();

    let mut acc = DenseVec::zeros(model.dim());
    for chain in recursion_partitions(&chain_sizes) {
        let j = chain.depth; // effective depth, 2..=n-c0+1
                             // chosen element per effective color; effective color 1 holds z
        let chosen: Vec<S> = std::iter::once(z.clone())
            .chain(
                chain
                    .choices
                    .iter()
                    .enumerate()
                    .map(|(i, &pick)| sets[c0 + 1 + i][pick].clone()),
            )
            .collect();

        let mut coeff = S::one();
        for (i, &pick) in chain.choices.iter().enumerate() {
            let c = c0 + 1 + i;
            let x = &chosen[i + 1];
            let rest = funcs::without(&sets[c], pick);
            let alpha = model.alpha(c + 1, x)?;
            let gfun = match side {
                Side::Ket => funcs::g_l(model.q(), x, &chosen[i])?,
                Side::Bra => funcs::g_r(model.q(), x, &chosen[i])?,
            };
            let f_rest = funcs::prod_f_left(model.q(), &rest, x)?;
            coeff = coeff.mul(&alpha).mul(&gfun).mul(&f_rest);
        }
        // denominator: f(full next color, chosen at this color)
        for (i, x) in chosen.iter().enumerate() {
            let next = c0 + i + 1;
            if next < n {
                let den = funcs::prod_f_left(model.q(), &sets[next], x)?;
                coeff = checked_div(&coeff, &den, "recursion denominator")?;
            }
        }

        // reduced parameter family
        let mut reduced = base.clone();
        for (i, &pick) in chain.choices.iter().enumerate() {
            reduced[c0 + 1 + i].remove(pick);
        }
        let sub = low_recursion(model, reduced, side)?;

        // operator T_{l, l+j-1} for kets, T_{l+j-1, l} for bras (1-based)
        let op: &SparseOp<S> = match side {
            Side::Ket => &t_of_z[c0][c0 + j - 1],
            Side::Bra => &t_of_z[c0 + j - 1][c0],
        };
        let applied = match side {
            Side::Ket => op.apply(&sub),
            Side::Bra => op.apply_bra(&sub),
        };
        acc.axpy(&coeff.div(&lambda), &applied);
    }
    Ok(acc)
}

fn high_recursion<S: Scalar>(
    model: &dyn Monodromy<S>,
    sets: Vec<Vec<S>>,
    side: Side,
) -> Result<DenseVec<S>> {
    let Some(c1) = sets.iter().rposition(|s| !s.is_empty()) else {
        return Ok(model.vacuum());
    };
    let z = sets[c1][0].clone();
    let t_of_z = model.entries(&z)?;
    let lambda = model.lambda(c1 + 2, &z)?;
    if lambda.is_zero() {
        return Err(Error::Invalid("vanishing vacuum eigenvalue".into()));
    }

    let mut base = sets.clone();
    base[c1].remove(0);

    // chains run downward from color c1-1; reuse the prefix enumerator on
    // the reversed color order
    let chain_sizes: Vec<usize> = (0..c1).rev().map(|c| sets[c].len()).collect();

    let mut acc = DenseVec::zeros(model.dim());
    for chain in recursion_partitions(&chain_sizes) {
        // depth d covers colors c1-1 .. c1-(d-2); the operator's first
        // index is j = c1+3-d (1-based)
        let d = chain.depth;
        let j = c1 + 3 - d;
        // chosen[i] sits at color c1 - i; chosen[0] = z
        let chosen: Vec<S> = std::iter::once(z.clone())
            .chain(
                chain
                    .choices
                    .iter()
                    .enumerate()
                    .map(|(i, &pick)| sets[c1 - 1 - i][pick].clone()),
            )
            .collect();

        let mut coeff = S::one();
        for (i, &pick) in chain.choices.iter().enumerate() {
            let c = c1 - 1 - i;
            let x = &chosen[i + 1];
            let rest = funcs::without(&sets[c], pick);
            let gfun = match side {
                Side::Ket => funcs::g_r(model.q(), &chosen[i], x)?,
                Side::Bra => funcs::g_l(model.q(), &chosen[i], x)?,
            };
            let f_rest = funcs::prod_f_right(model.q(), x, &rest)?;
            coeff = coeff.mul(&gfun).mul(&f_rest);
        }
        // denominator: f(chosen at this color, full color below)
        for (i, x) in chosen.iter().enumerate() {
            let c = c1 - i;
            if c >= 1 {
                let den = funcs::prod_f_right(model.q(), x, &sets[c - 1])?;
                coeff = checked_div(&coeff, &den, "recursion denominator")?;
            }
        }

        let mut reduced = base.clone();
        for (i, &pick) in chain.choices.iter().enumerate() {
            reduced[c1 - 1 - i].remove(pick);
        }
        let sub = high_recursion(model, reduced, side)?;

        // operator T_{j, N_eff+1} for kets, T_{N_eff+1, j} for bras, where
        // N_eff + 1 = c1 + 2 (1-based)
        let op: &SparseOp<S> = match side {
            Side::Ket => &t_of_z[j - 1][c1 + 1],
            Side::Bra => &t_of_z[c1 + 1][j - 1],
        };
        let applied = match side {
            Side::Ket => op.apply(&sub),
            Side::Bra => op.apply_bra(&sub),
        };
        acc.axpy(&coeff.div(&lambda), &applied);
    }
    Ok(acc)
}

fn ket_low<S: Scalar>(model: &dyn Monodromy<S>, sets: Vec<Vec<S>>) -> Result<DenseVec<S>> {
    low_recursion(model, sets, Side::Ket)
}

fn ket_high<S: Scalar>(model: &dyn Monodromy<S>, sets: Vec<Vec<S>>) -> Result<DenseVec<S>> {
    high_recursion(model, sets, Side::Ket)
}

fn bra_low<S: Scalar>(model: &dyn Monodromy<S>, sets: Vec<Vec<S>>) -> Result<DenseVec<S>> {
    low_recursion(model, sets, Side::Bra)
}

fn bra_high<S: Scalar>(model: &dyn Monodromy<S>, sets: Vec<Vec<S>>) -> Result<DenseVec<S>> {
    high_recursion(model, sets, Side::Bra)
}

/// True if the vector is supported on the single color-charge class fixed
/// by the cardinalities `r`.
pub fn is_content_homogeneous<S: Scalar>(
    vec: &DenseVec<S>,
    r: &[usize],
    m: usize,
    sites: usize,
) -> bool {
    vec.support()
        .into_iter()
        .all(|idx| color_charges(idx, m, sites) == r)
}

/// Verify the coproduct expansion of a Bethe vector over a two-factor
/// composite model: the combined vector must equal the partition sum of
/// tensor products of partial vectors, exactly.
pub fn coproduct_check_ket<S: Scalar>(
    part1: &dyn Monodromy<S>,
    part2: &dyn Monodromy<S>,
    t: &BetheParams<S>,
) -> Result<bool> {
    let composite = Composite::new(part1, part2)?;
    let lhs = build_bethe(&composite, t)?.vec;
    let q = part1.q();
    let n = t.n_colors();

    let mut rhs = DenseVec::zeros(composite.dim());
    for split in subset_partitions(&t.cardinalities()) {
        let first: Vec<Vec<S>> = (0..n)
            .map(|c| funcs::select(t.set(c), &split[c].first))
            .collect();
        let second: Vec<Vec<S>> = (0..n)
            .map(|c| funcs::select(t.set(c), &split[c].second))
            .collect();
        let mut coeff = S::one();
        for c in 0..n {
            for x in &first[c] {
                coeff = coeff.mul(&part2.alpha(c + 1, x)?);
            }
            coeff = coeff.mul(&funcs::prod_f(q, &second[c], &first[c])?);
            if c + 1 < n {
                let den = funcs::prod_f(q, &second[c + 1], &first[c])?;
                coeff = checked_div(&coeff, &den, "coproduct denominator")?;
            }
        }
        let b1 = build_bethe(part1, &BetheParams::new(first))?.vec;
        let b2 = build_bethe(part2, &BetheParams::new(second))?.vec;
        rhs.axpy(&coeff, &b1.kron(&b2));
    }
    Ok(lhs == rhs)
}

/// The dual analogue of [`coproduct_check_ket`].
pub fn coproduct_check_bra<S: Scalar>(
    part1: &dyn Monodromy<S>,
    part2: &dyn Monodromy<S>,
    s: &BetheParams<S>,
) -> Result<bool> {
    let composite = Composite::new(part1, part2)?;
    let lhs = build_dual(&composite, s)?.vec;
    let q = part1.q();
    let n = s.n_colors();

    let mut rhs = DenseVec::zeros(composite.dim());
    for split in subset_partitions(&s.cardinalities()) {
        let first: Vec<Vec<S>> = (0..n)
            .map(|c| funcs::select(s.set(c), &split[c].first))
            .collect();
        let second: Vec<Vec<S>> = (0..n)
            .map(|c| funcs::select(s.set(c), &split[c].second))
            .collect();
        let mut coeff = S::one();
        for c in 0..n {
            for x in &second[c] {
                coeff = coeff.mul(&part1.alpha(c + 1, x)?);
            }
            coeff = coeff.mul(&funcs::prod_f(q, &first[c], &second[c])?);
            if c + 1 < n {
                let den = funcs::prod_f(q, &first[c + 1], &second[c])?;
                coeff = checked_div(&coeff, &den, "dual coproduct denominator")?;
            }
        }
        let c1 = build_dual(part1, &BetheParams::new(first))?.vec;
        let c2 = build_dual(part2, &BetheParams::new(second))?.vec;
        rhs.axpy(&coeff, &c1.kron(&c2));
    }
    Ok(lhs == rhs)
}
