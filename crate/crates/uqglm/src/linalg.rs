//! Minimal linear algebra over a generic scalar field.
//!
//! Operators on the chain space are stored sparse (sorted row lists) while
//! state vectors are dense. Dimensions stay at desk scale (at most a few
//! thousand), so the emphasis is on exactness and determinism, not on
//! asymptotics. Zero entries are pruned eagerly, which makes structural
//! equality of sparse operators coincide with mathematical equality.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::cmp::Ordering;

/// Sparse square operator with sorted rows of `(column, value)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOp<S> {
    dim: usize,
    rows: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseOp<S> {
    pub fn zeros(dim: usize) -> Self {
        SparseOp {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim).map(|i| vec![(i, S::one())]).collect();
        SparseOp { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn rows(&self) -> &[Vec<(usize, S)>] {
        &self.rows
    }

    /// Add `value` to entry `(row, col)`, pruning a zero result.
    pub fn add_entry(&mut self, row: usize, col: usize, value: S) {
        if value.is_zero() {
            return;
        }
        let r = &mut self.rows[row];
        match r.binary_search_by(|(c, _)| c.cmp(&col)) {
            Ok(pos) => {
                let updated = r[pos].1.add(&value);
                if updated.is_zero() {
                    r.remove(pos);
                } else {
                    r[pos].1 = updated;
                }
            }
            Err(pos) => r.insert(pos, (col, value)),
        }
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut op = Self::zeros(dim);
        for (r, c, v) in entries {
            op.add_entry(r, c, v);
        }
        op
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        match self.rows[row].binary_search_by(|(c, _)| c.cmp(&col)) {
            Ok(pos) => self.rows[row][pos].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Self::zeros(self.dim);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, v.mul(factor))).collect())
            .collect();
        SparseOp {
            dim: self.dim,
            rows,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (r, row) in rhs.rows.iter().enumerate() {
            for (c, v) in row {
                out.add_entry(r, *c, v.clone());
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&S::one().neg()))
    }

    /// Operator composition `self * rhs` (gather-scatter over rows).
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut rows = Vec::with_capacity(self.dim);
        let mut scratch: Vec<Option<S>> = vec![None; self.dim];
        let mut touched: Vec<usize> = Vec::new();
        for row in &self.rows {
            for (k, a) in row {
                for (c, b) in &rhs.rows[*k] {
                    let prod = a.mul(b);
                    match &mut scratch[*c] {
                        Some(acc) => *acc = acc.add(&prod),
                        slot @ None => {
                            *slot = Some(prod);
                            touched.push(*c);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out_row = Vec::with_capacity(touched.len());
            for &c in &touched {
                let v = scratch[c].take().unwrap();
                if !v.is_zero() {
                    out_row.push((c, v));
                }
            }
            touched.clear();
            rows.push(out_row);
        }
        SparseOp {
            dim: self.dim,
            rows,
        }
    }

    /// Kronecker product; row index is `self`-major.
    pub fn kron(&self, rhs: &Self) -> Self {
        let dim = self.dim * rhs.dim;
        let mut rows = vec![Vec::new(); dim];
        for (ra, rowa) in self.rows.iter().enumerate() {
            for (rb, rowb) in rhs.rows.iter().enumerate() {
                let row = &mut rows[ra * rhs.dim + rb];
                for (ca, va) in rowa {
                    for (cb, vb) in rowb {
                        let v = va.mul(vb);
                        if !v.is_zero() {
                            row.push((ca * rhs.dim + cb, v));
                        }
                    }
                }
                row.sort_unstable_by_key(|(c, _)| *c);
            }
        }
        SparseOp { dim, rows }
    }

    /// Apply to a column vector.
    pub fn apply(&self, x: &DenseVec<S>) -> DenseVec<S> {
        assert_eq!(self.dim, x.len());
        let mut out = DenseVec::zeros(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = S::zero();
            for (c, v) in row {
                acc = acc.add(&v.mul(&x.data[*c]));
            }
            out.data[r] = acc;
        }
        out
    }

    /// Apply a row vector from the left: returns `x^T * self`.
    pub fn apply_bra(&self, x: &DenseVec<S>) -> DenseVec<S> {
        assert_eq!(self.dim, x.len());
        let mut out: DenseVec<S> = DenseVec::zeros(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            if x.data[r].is_zero() {
                continue;
            }
            for (c, v) in row {
                out.data[*c] = out.data[*c].add(&x.data[r].mul(v));
            }
        }
        out
    }

    /// Commutator `self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }
}

/// Dense vector over the scalar field; used for kets and bras alike.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseVec<S> {
    pub data: Vec<S>,
}

impl<S: Scalar> DenseVec<S> {
    pub fn zeros(len: usize) -> Self {
        DenseVec {
            data: vec![S::zero(); len],
        }
    }

    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.data[index] = S::one();
        v
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.len(), rhs.len());
        DenseVec {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.len(), rhs.len());
        DenseVec {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        DenseVec {
            data: self.data.iter().map(|v| v.mul(factor)).collect(),
        }
    }

    /// Accumulate `factor * rhs` into `self`.
    pub fn axpy(&mut self, factor: &S, rhs: &Self) {
        assert_eq!(self.len(), rhs.len());
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a = a.add(&factor.mul(b));
        }
    }

    /// Bilinear pairing (no conjugation): the algebraic bra-ket contraction.
    pub fn dot(&self, rhs: &Self) -> S {
        assert_eq!(self.len(), rhs.len());
        self.data
            .iter()
            .zip(&rhs.data)
            .fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    /// Hermitian inner product `<self, rhs> = sum conj(self_i) rhs_i`.
    pub fn dot_conj(&self, rhs: &Self) -> S {
        assert_eq!(self.len(), rhs.len());
        self.data
            .iter()
            .zip(&rhs.data)
            .fold(S::zero(), |acc, (a, b)| acc.add(&a.conj().mul(b)))
    }

    /// Kronecker product (self-major indexing).
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut data = Vec::with_capacity(self.len() * rhs.len());
        for a in &self.data {
            for b in &rhs.data {
                data.push(a.mul(b));
            }
        }
        DenseVec { data }
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Dense square matrix, row-major; used for Gaudin matrices and small
/// exact linear solves.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMat<S> {
    pub n: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> DenseMat<S> {
    pub fn zeros(n: usize) -> Self {
        DenseMat {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.n + c] = v;
    }

    /// Matrix with row `dr` and column `dc` deleted.
    pub fn minor(&self, dr: usize, dc: usize) -> Self {
        let mut out = Self::zeros(self.n - 1);
        let mut ri = 0;
        for r in 0..self.n {
            if r == dr {
                continue;
            }
            let mut ci = 0;
            for c in 0..self.n {
                if c == dc {
                    continue;
                }
                out.set(ri, ci, self.get(r, c).clone());
                ci += 1;
            }
            ri += 1;
        }
        out
    }

    /// Determinant by Gaussian elimination with magnitude pivoting.
    /// Exact on the rational backend.
    pub fn det(&self) -> S {
        let n = self.n;
        if n == 0 {
            return S::one();
        }
        let mut a = self.data.clone();
        let mut det = S::one();
        for col in 0..n {
            // pick the largest-magnitude pivot in this column
            let mut pivot = col;
            for r in col + 1..n {
                if a[r * n + col].mag_cmp(&a[pivot * n + col]) == Ordering::Greater {
                    pivot = r;
                }
            }
            if a[pivot * n + col].is_zero() {
                return S::zero();
            }
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                }
                det = det.neg();
            }
            let p = a[col * n + col].clone();
            det = det.mul(&p);
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].div(&p);
                for c in col..n {
                    let delta = factor.mul(&a[col * n + c]);
                    a[r * n + c] = a[r * n + c].sub(&delta);
                }
            }
        }
        det
    }

    /// Solve `self * x = b` by LU with partial pivoting.
    pub fn solve(&self, b: &DenseVec<S>) -> Result<DenseVec<S>> {
        let n = self.n;
        assert_eq!(b.len(), n);
        let mut a = self.data.clone();
        let mut x = b.data.clone();
        for col in 0..n {
            let mut pivot = col;
            for r in col + 1..n {
                if a[r * n + col].mag_cmp(&a[pivot * n + col]) == Ordering::Greater {
                    pivot = r;
                }
            }
            if a[pivot * n + col].is_zero() {
                return Err(Error::Singular("zero pivot in solve".into()));
            }
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                }
                x.swap(pivot, col);
            }
            let p = a[col * n + col].clone();
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].div(&p);
                for c in col..n {
                    let delta = factor.mul(&a[col * n + c]);
                    a[r * n + c] = a[r * n + c].sub(&delta);
                }
                let delta = factor.mul(&x[col]);
                x[r] = x[r].sub(&delta);
            }
        }
        for col in (0..n).rev() {
            let mut acc = x[col].clone();
            for c in col + 1..n {
                acc = acc.sub(&a[col * n + c].mul(&x[c]));
            }
            x[col] = acc.div(&a[col * n + col]);
        }
        Ok(DenseVec { data: x })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn mat(entries: &[&[i64]]) -> DenseMat<Rat> {
        let n = entries.len();
        let mut m = DenseMat::zeros(n);
        for (r, row) in entries.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, Rat::from_i64(*v));
            }
        }
        m
    }

    #[test]
    fn sparse_matmul_and_pruning() {
        let a = SparseOp::from_entries(
            3,
            [
                (0, 1, Rat::from_i64(2)),
                (1, 2, Rat::from_i64(-1)),
                (2, 0, Rat::from_i64(1)),
            ],
        );
        let b = a.matmul(&a);
        assert_eq!(b.get(0, 2), Rat::from_i64(-2));
        assert_eq!(b.get(1, 0), Rat::from_i64(-1));
        // a - a is structurally empty after pruning
        assert!(a.sub(&a).is_zero());
        // identities compose
        let id = SparseOp::<Rat>::identity(3);
        assert_eq!(a.matmul(&id), a);
        assert_eq!(id.matmul(&a), a);
    }

    #[test]
    fn kron_indexing_is_left_major() {
        let a = SparseOp::from_entries(2, [(0, 1, Rat::from_i64(3))]);
        let b = SparseOp::<Rat>::identity(2);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 2), Rat::from_i64(3));
        assert_eq!(k.get(1, 3), Rat::from_i64(3));
        assert_eq!(k.get(0, 1), Rat::from_i64(0));
    }

    #[test]
    fn bra_application_matches_transpose() {
        let a = SparseOp::from_entries(2, [(0, 1, Rat::from_i64(5)), (1, 0, Rat::from_i64(7))]);
        let bra = DenseVec {
            data: vec![Rat::from_i64(1), Rat::from_i64(2)],
        };
        let out = a.apply_bra(&bra);
        assert_eq!(out.data, vec![Rat::from_i64(14), Rat::from_i64(5)]);
    }

    #[test]
    fn exact_determinants_and_solve() {
        let m = mat(&[&[2, 1, 1], &[1, 3, 2], &[1, 1, 1]]);
        assert_eq!(m.det(), Rat::from_i64(1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).det(), Rat::from_i64(0));
        let b = DenseVec {
            data: vec![Rat::from_i64(3), Rat::from_i64(6), Rat::from_i64(3)],
        };
        let x = m.solve(&b).unwrap();
        let back: Vec<Rat> = (0..3)
            .map(|r| {
                (0..3).fold(Rat::from_i64(0), |acc, c| {
                    acc.add(&m.get(r, c).mul(&x.data[c]))
                })
            })
            .collect();
        assert_eq!(back, b.data);
    }

    #[test]
    fn minor_deletes_row_and_column() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let mm = m.minor(1, 0);
        assert_eq!(mm.get(0, 0), &Rat::from_i64(2));
        assert_eq!(mm.get(1, 1), &Rat::from_i64(9));
    }
}
