//! Concrete model realization: trigonometric R-matrix, inhomogeneous
//! twisted fundamental monodromy matrix, vacuum eigenvalues, transfer
//! matrix, and the RTT / Yang-Baxter validators.
//!
//! The chain acts on `(C^m)^{tensor L}` with basis words `(c_1,...,c_L)`,
//! `c_i in {1..m}`, site 1 most significant in the index. The monodromy is
//! `T(u) = kappa * R_{0,L}(u, xi_L) ... R_{0,1}(u, xi_1)` with a diagonal
//! twist `kappa` in the auxiliary space. The twist commutes with the
//! R-matrix structure (checked by `rtt_check`), and only enriches the
//! vacuum-eigenvalue ratios by constants.

use crate::error::{Error, Result};
use crate::funcs;
use crate::linalg::{DenseVec, SparseOp};
use crate::scalar::{all_distinct, MpC, QParam, Rat, Scalar};
use serde::{Deserialize, Serialize};

/// A concrete inhomogeneous twisted chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainConfig<S: Scalar> {
    m: usize,
    q: QParam<S>,
    xi: Vec<S>,
    kappa: Vec<S>,
}

#[derive(Serialize, Deserialize)]
struct ChainConfigJson {
    m: usize,
    #[serde(rename = "L")]
    l: usize,
    q: String,
    xi: Vec<String>,
    kappa: Vec<String>,
}

impl<S: Scalar> ChainConfig<S> {
    pub fn new(m: usize, q: QParam<S>, xi: Vec<S>, kappa: Vec<S>) -> Result<Self> {
        if m < 2 {
            return Err(Error::Invalid("rank m must be at least 2".into()));
        }
        if xi.is_empty() {
            return Err(Error::Invalid("chain needs at least one site".into()));
        }
        if !all_distinct(&xi) {
            return Err(Error::Invalid("inhomogeneities must be distinct".into()));
        }
        if kappa.len() != m {
            return Err(Error::Invalid(format!(
                "twist needs {m} entries, got {}",
                kappa.len()
            )));
        }
        if kappa.iter().any(|k| k.is_zero()) {
            return Err(Error::Invalid("twist entries must be nonzero".into()));
        }
        Ok(ChainConfig { m, q, xi, kappa })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sites(&self) -> usize {
        self.xi.len()
    }

    pub fn xi(&self) -> &[S] {
        &self.xi
    }

    pub fn kappa(&self) -> &[S] {
        &self.kappa
    }

    pub fn to_json(&self) -> String {
        let raw = ChainConfigJson {
            m: self.m,
            l: self.sites(),
            q: self.q.q().serialize(),
            xi: self.xi.iter().map(|x| x.serialize()).collect(),
            kappa: self.kappa.iter().map(|x| x.serialize()).collect(),
        };
        serde_json::to_string(&raw).expect("config serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ChainConfigJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        if raw.l != raw.xi.len() {
            return Err(Error::Invalid(format!(
                "L = {} but {} inhomogeneities given",
                raw.l,
                raw.xi.len()
            )));
        }
        let q = QParam::new(S::parse(&raw.q)?)?;
        let xi = raw.xi.iter().map(|s| S::parse(s)).collect::<Result<_>>()?;
        let kappa = raw
            .kappa
            .iter()
            .map(|s| S::parse(s))
            .collect::<Result<_>>()?;
        ChainConfig::new(raw.m, q, xi, kappa)
    }

    /// The R-matrix block acting on the auxiliary space and site `k`,
    /// with every entry embedded into the full chain space.
    fn r_block(&self, u: &S, k: usize) -> Result<Vec<Vec<SparseOp<S>>>> {
        let m = self.m;
        let sites = self.sites();
        let xi = &self.xi[k];
        let fv = funcs::f(&self.q, u, xi)?;
        let gv = funcs::g(&self.q, u, xi)?;
        let gu = u.mul(&gv);
        let gxi = xi.mul(&gv);
        let mut blocks = Vec::with_capacity(m);
        for a in 0..m {
            let mut row = Vec::with_capacity(m);
            for b in 0..m {
                let site_op: SparseOp<S> = if a == b {
                    SparseOp::from_entries(
                        m,
                        (0..m).map(|j| (j, j, if j == a { fv.clone() } else { S::one() })),
                    )
                } else {
                    let coef = if a < b { gu.clone() } else { gxi.clone() };
                    SparseOp::from_entries(m, [(b, a, coef)])
                };
                row.push(embed_site_op(&site_op, m, sites, k));
            }
            blocks.push(row);
        }
        Ok(blocks)
    }
}

impl ChainConfig<Rat> {
    /// The same model over the complex backend at `prec` bits.
    pub fn to_mpc(&self, prec: usize) -> ChainConfig<MpC> {
        ChainConfig {
            m: self.m,
            q: QParam::new(MpC::from_rat(self.q.q(), prec)).expect("valid q survives promotion"),
            xi: self.xi.iter().map(|x| MpC::from_rat(x, prec)).collect(),
            kappa: self.kappa.iter().map(|x| MpC::from_rat(x, prec)).collect(),
        }
    }
}

/// Embed an operator on site `k` (0-based) into the chain space.
fn embed_site_op<S: Scalar>(op: &SparseOp<S>, m: usize, sites: usize, k: usize) -> SparseOp<S> {
    let left = m.pow(k as u32);
    let right = m.pow((sites - 1 - k) as u32);
    SparseOp::identity(left)
        .kron(op)
        .kron(&SparseOp::identity(right))
}

/// Any model presented through its monodromy-matrix entries and vacuum
/// eigenvalues. The chain implements it directly; composite (two-factor)
/// models implement it through the entry convolution of their factors.
pub trait Monodromy<S: Scalar>: Sync {
    /// Rank m of the underlying algebra.
    fn rank(&self) -> usize;

    /// Dimension of the quantum space.
    fn dim(&self) -> usize;

    fn q(&self) -> &QParam<S>;

    /// All blocks `T_{i,j}(u)` as an m x m matrix of operators (0-based).
    fn entries(&self, u: &S) -> Result<Vec<Vec<SparseOp<S>>>>;

    /// Vacuum eigenvalue `lambda_i(u)` (1-based `i`), in closed form.
    fn lambda(&self, i: usize, u: &S) -> Result<S>;

    fn vacuum(&self) -> DenseVec<S>;

    /// Ratio `alpha_i(u) = lambda_i(u) / lambda_{i+1}(u)`.
    fn alpha(&self, i: usize, u: &S) -> Result<S> {
        Ok(self.lambda(i, u)?.div(&self.lambda(i + 1, u)?))
    }
}

impl<S: Scalar> Monodromy<S> for ChainConfig<S> {
    fn rank(&self) -> usize {
        self.m
    }

    fn dim(&self) -> usize {
        self.m.pow(self.sites() as u32)
    }

    fn q(&self) -> &QParam<S> {
        &self.q
    }

    fn entries(&self, u: &S) -> Result<Vec<Vec<SparseOp<S>>>> {
        let m = self.m;
        let dim = self.dim();
        // start from the twist, then multiply the site R-matrices from the left chain end
        let mut acc: Vec<Vec<SparseOp<S>>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            SparseOp::identity(dim).scale(&self.kappa[i])
                        } else {
                            SparseOp::zeros(dim)
                        }
                    })
                    .collect()
            })
            .collect();
        for k in (0..self.sites()).rev() {
            let rb = self.r_block(u, k)?;
            acc = block_matmul(&acc, &rb);
        }
        Ok(acc)
    }

    fn lambda(&self, i: usize, u: &S) -> Result<S> {
        debug_assert!(i >= 1 && i <= self.m);
        if i == 1 {
            let mut acc = self.kappa[0].clone();
            for xi in &self.xi {
                acc = acc.mul(&funcs::f(&self.q, u, xi)?);
            }
            Ok(acc)
        } else {
            Ok(self.kappa[i - 1].clone())
        }
    }

    fn vacuum(&self) -> DenseVec<S> {
        DenseVec::basis(self.dim(), 0)
    }
}

fn block_matmul<S: Scalar>(
    a: &[Vec<SparseOp<S>>],
    b: &[Vec<SparseOp<S>>],
) -> Vec<Vec<SparseOp<S>>> {
    let m = a.len();
    let dim = a[0][0].dim();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = SparseOp::zeros(dim);
                    for k in 0..m {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc = acc.add(&a[i][k].matmul(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Composite model `T(u) = T2(u) T1(u)`: factor 1 occupies the first
/// (most significant) slot of the combined quantum space.
pub struct Composite<'a, S: Scalar> {
    part1: &'a dyn Monodromy<S>,
    part2: &'a dyn Monodromy<S>,
}

impl<'a, S: Scalar> Composite<'a, S> {
    pub fn new(part1: &'a dyn Monodromy<S>, part2: &'a dyn Monodromy<S>) -> Result<Self> {
        if part1.rank() != part2.rank() {
            return Err(Error::Invalid("composite factors must share rank".into()));
        }
        if part1.q() != part2.q() {
            return Err(Error::Invalid(
                "composite factors must share the deformation parameter".into(),
            ));
        }
        Ok(Composite { part1, part2 })
    }
}

impl<S: Scalar> Monodromy<S> for Composite<'_, S> {
    fn rank(&self) -> usize {
        self.part1.rank()
    }

    fn dim(&self) -> usize {
        self.part1.dim() * self.part2.dim()
    }

    fn q(&self) -> &QParam<S> {
        self.part1.q()
    }

    fn entries(&self, u: &S) -> Result<Vec<Vec<SparseOp<S>>>> {
        let m = self.rank();
        let t1 = self.part1.entries(u)?;
        let t2 = self.part2.entries(u)?;
        let dim = self.dim();
        let mut out = vec![vec![SparseOp::zeros(dim); m]; m];
        for i in 0..m {
            for j in 0..m {
                let mut acc = SparseOp::zeros(dim);
                for k in 0..m {
                    if t1[k][j].is_zero() || t2[i][k].is_zero() {
                        continue;
                    }
                    acc = acc.add(&t1[k][j].kron(&t2[i][k]));
                }
                out[i][j] = acc;
            }
        }
        Ok(out)
    }

    fn lambda(&self, i: usize, u: &S) -> Result<S> {
        Ok(self.part1.lambda(i, u)?.mul(&self.part2.lambda(i, u)?))
    }

    fn vacuum(&self) -> DenseVec<S> {
        self.part1.vacuum().kron(&self.part2.vacuum())
    }
}

/// One monodromy block `T_{i,j}(u)` (1-based indices).
pub fn monodromy_entry<S: Scalar>(
    model: &dyn Monodromy<S>,
    i: usize,
    j: usize,
    u: &S,
) -> Result<SparseOp<S>> {
    let t = model.entries(u)?;
    Ok(t[i - 1][j - 1].clone())
}

/// The R-matrix on `C^m (x) C^m`.
pub fn r_matrix<S: Scalar>(q: &QParam<S>, m: usize, u: &S, v: &S) -> Result<SparseOp<S>> {
    let fv = funcs::f(q, u, v)?;
    let gv = funcs::g(q, u, v)?;
    let mut entries = Vec::new();
    let idx = |a: usize, b: usize| a * m + b;
    for i in 0..m {
        entries.push((idx(i, i), idx(i, i), fv.clone()));
    }
    for i in 0..m {
        for j in 0..m {
            if i != j {
                entries.push((idx(i, j), idx(i, j), S::one()));
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            entries.push((idx(i, j), idx(j, i), u.mul(&gv)));
            entries.push((idx(j, i), idx(i, j), v.mul(&gv)));
        }
    }
    Ok(SparseOp::from_entries(m * m, entries))
}

/// Transfer matrix: the trace of the monodromy matrix over the auxiliary
/// space.
pub fn transfer_matrix<S: Scalar>(model: &dyn Monodromy<S>, u: &S) -> Result<SparseOp<S>> {
    let t = model.entries(u)?;
    let mut acc = SparseOp::zeros(model.dim());
    for (i, row) in t.iter().enumerate() {
        acc = acc.add(&row[i]);
    }
    Ok(acc)
}

/// Embed an operator on two chosen slots of an n-fold tensor power of C^m.
fn embed_two_slots<S: Scalar>(
    op: &SparseOp<S>,
    m: usize,
    slots: (usize, usize),
    n_slots: usize,
) -> SparseOp<S> {
    let dim = m.pow(n_slots as u32);
    let mut out = SparseOp::zeros(dim);
    let strides: Vec<usize> = (0..n_slots).map(|s| m.pow((n_slots - 1 - s) as u32)).collect();
    // enumerate bystander configurations
    let bystanders: Vec<usize> = (0..n_slots).filter(|s| *s != slots.0 && *s != slots.1).collect();
    let n_by = bystanders.len();
    let mut config = vec![0usize; n_by];
    loop {
        let base: usize = config
            .iter()
            .zip(&bystanders)
            .map(|(c, s)| c * strides[*s])
            .sum();
        for (r, row) in op.rows().iter().enumerate() {
            let (r1, r2) = (r / m, r % m);
            let row_idx = base + r1 * strides[slots.0] + r2 * strides[slots.1];
            for (c, v) in row {
                let (c1, c2) = (c / m, c % m);
                let col_idx = base + c1 * strides[slots.0] + c2 * strides[slots.1];
                out.add_entry(row_idx, col_idx, v.clone());
            }
        }
        // advance the bystander configuration
        let mut carry = true;
        for slot in (0..n_by).rev() {
            if carry {
                config[slot] += 1;
                if config[slot] == m {
                    config[slot] = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry || n_by == 0 {
            break;
        }
    }
    out
}

/// Yang-Baxter equation on `C^m (x) C^m (x) C^m`:
/// `R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)`, exactly.
pub fn yang_baxter_check<S: Scalar>(
    q: &QParam<S>,
    m: usize,
    u: &S,
    v: &S,
    w: &S,
) -> Result<bool> {
    let r12 = embed_two_slots(&r_matrix(q, m, u, v)?, m, (0, 1), 3);
    let r13 = embed_two_slots(&r_matrix(q, m, u, w)?, m, (0, 2), 3);
    let r23 = embed_two_slots(&r_matrix(q, m, v, w)?, m, (1, 2), 3);
    let lhs = r12.matmul(&r13).matmul(&r23);
    let rhs = r23.matmul(&r13).matmul(&r12);
    Ok(lhs == rhs)
}

/// RTT relation on `C^m (x) C^m (x) H`, as an exact matrix identity.
pub fn rtt_check<S: Scalar>(model: &dyn Monodromy<S>, u: &S, v: &S) -> Result<bool> {
    if u == v {
        return Err(Error::Pole {
            context: "rtt_check",
        });
    }
    let m = model.rank();
    let dim = model.dim();
    let tu = model.entries(u)?;
    let tv = model.entries(v)?;
    let id_m = SparseOp::identity(m);
    let mut t_u_outer = SparseOp::zeros(m * m * dim);
    let mut t_v_inner = SparseOp::zeros(m * m * dim);
    for i in 0..m {
        for j in 0..m {
            if !tu[i][j].is_zero() {
                let e = SparseOp::from_entries(m, [(i, j, S::one())]);
                t_u_outer = t_u_outer.add(&e.kron(&id_m).kron(&tu[i][j]));
            }
            if !tv[i][j].is_zero() {
                let e = SparseOp::from_entries(m, [(i, j, S::one())]);
                t_v_inner = t_v_inner.add(&id_m.kron(&e).kron(&tv[i][j]));
            }
        }
    }
    let r = r_matrix(model.q(), m, u, v)?.kron(&SparseOp::identity(dim));
    let lhs = r.matmul(&t_u_outer).matmul(&t_v_inner);
    let rhs = t_v_inner.matmul(&t_u_outer).matmul(&r);
    Ok(lhs == rhs)
}

/// Letter counts of a basis word.
pub fn content_of(index: usize, m: usize, sites: usize) -> Vec<usize> {
    let mut counts = vec![0usize; m];
    let mut rest = index;
    for _ in 0..sites {
        counts[rest % m] += 1;
        rest /= m;
    }
    counts
}

/// Color charges of a basis word: the number of sites whose letter exceeds
/// k, for k = 1..m-1. The transfer matrix preserves these charges; a Bethe
/// vector with cardinalities `r` is supported on the class `charges == r`.
pub fn color_charges(index: usize, m: usize, sites: usize) -> Vec<usize> {
    let counts = content_of(index, m, sites);
    (1..m)
        .map(|k| counts[k..].iter().sum::<usize>())
        .collect()
}

/// True if the operator is block diagonal with respect to color charges.
pub fn preserves_color_charges<S: Scalar>(op: &SparseOp<S>, m: usize, sites: usize) -> bool {
    op.rows().iter().enumerate().all(|(r, row)| {
        let cr = color_charges(r, m, sites);
        row.iter().all(|(c, _)| color_charges(*c, m, sites) == cr)
    })
}
