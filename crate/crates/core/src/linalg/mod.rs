//! Sparse operator matrices with Kronecker structure, elimination-based
//! rank/kernel routines and tensor-slot application on dense vectors.

mod elim;
mod tensor;

use alloc::vec;
use alloc::vec::Vec;

pub use elim::{kernel_basis, rank, rank_exact, rank_probabilistic, ColumnSpace};
pub use tensor::{apply_one_slot, apply_two_slot, embed_two_slot, reverse_slots};

use crate::error::{Error, Result};
use crate::scalar::{Field, Fp, RatFunc};

/// Column-sparse matrix. Each column holds its nonzero entries sorted by row.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix<F> {
    rows: usize,
    cols: Vec<Vec<(usize, F)>>,
}

impl<F: Field> OpMatrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        OpMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        OpMatrix { rows: n, cols: (0..n).map(|i| vec![(i, F::one())]).collect() }
    }

    pub fn diagonal(diag: Vec<F>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            if !d.is_zero() {
                m.cols[i].push((i, d));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            m.cols[c].push((r, v));
        }
        for col in &mut m.cols {
            *col = compress(core::mem::take(col));
        }
        m
    }

    /// Builds column `c` from the dense vector `f(c)`.
    pub fn from_dense_columns(rows: usize, cols: usize, mut f: impl FnMut(usize) -> Vec<F>) -> Self {
        let data = (0..cols)
            .map(|c| {
                let v = f(c);
                assert_eq!(v.len(), rows);
                sparse_from_dense(v)
            })
            .collect();
        OpMatrix { rows, cols: data }
    }

    pub fn from_dense_rows(rows: &[Vec<F>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_dense_columns(rows.len(), ncols, |c| rows.iter().map(|r| r[c].clone()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, F)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        match self.cols[c].binary_search_by_key(&r, |e| e.0) {
            Ok(pos) => self.cols[c][pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, F)> {
        let mut out: Vec<(usize, usize, F)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    pub fn dense_column(&self, c: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.rows];
        for (r, x) in &self.cols[c] {
            v[*r] = x.clone();
        }
        v
    }

    pub fn map<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> OpMatrix<G> {
        OpMatrix {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .filter_map(|(r, v)| {
                            let w = f(v);
                            (!w.is_zero()).then_some((*r, w))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols(), self.rows);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                t.cols[*r].push((c, v.clone()));
            }
        }
        t
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.rows, self.cols());
        }
        self.map(|v| v.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map(F::neg)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| merge(a, b, |x, y| x.add(y), F::clone))
            .collect();
        Ok(OpMatrix { rows: self.rows, cols })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| merge(a, b, |x, y| x.sub(y), F::neg))
            .collect();
        Ok(OpMatrix { rows: self.rows, cols })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        if self.cols() != other.cols() {
            return Err(Error::DimensionMismatch { expected: self.cols(), found: other.cols() });
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols(), found: other.rows });
        }
        let mut acc = Accumulator::new(self.rows);
        let cols = other
            .cols
            .iter()
            .map(|bcol| {
                for (k, b) in bcol {
                    for (r, a) in &self.cols[*k] {
                        acc.add(*r, a.mul(b));
                    }
                }
                acc.drain()
            })
            .collect();
        Ok(OpMatrix { rows: self.rows, cols })
    }

    /// Product of a chain, applied right to left: `ms[0] * ms[1] * ...`.
    pub fn product(ms: &[&Self]) -> Result<Self> {
        let (last, rest) = ms.split_last().ok_or(Error::Structural("empty product".into()))?;
        rest.iter().rev().try_fold((*last).clone(), |acc, m| m.mul(&acc))
    }

    /// Kronecker product, with `self` as the most significant factor.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for acol in &self.cols {
            for bcol in &other.cols {
                let mut col = Vec::with_capacity(acol.len() * bcol.len());
                for (ra, a) in acol {
                    for (rb, b) in bcol {
                        col.push((ra * other.rows + rb, a.mul(b)));
                    }
                }
                cols.push(col);
            }
        }
        OpMatrix { rows, cols }
    }

    /// `self * v` for a dense vector.
    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols() {
            return Err(Error::DimensionMismatch { expected: self.cols(), found: v.len() });
        }
        let mut out = vec![F::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r] = out[*r].add(&a.mul(x));
            }
        }
        Ok(out)
    }

    /// Contracts the last tensor slot (of dimension `weights.len()`)
    /// diagonally against `weights`: the result has entries
    /// `sum_k w_k M[(I, k), (J, k)]`.
    pub fn weighted_partial_trace(&self, slot: usize, nslots: usize, weights: &[F]) -> Result<Self> {
        let d = weights.len();
        if nslots == 0 || slot != nslots - 1 {
            return Err(Error::IndexOutOfRange { index: slot, bound: nslots });
        }
        let total = d.checked_pow(nslots as u32).unwrap_or(usize::MAX);
        if self.rows != total || self.cols() != total {
            return Err(Error::DimensionMismatch { expected: total, found: self.rows });
        }
        let n = total / d;
        let mut triplets = Vec::new();
        for j in 0..n {
            for (k, w) in weights.iter().enumerate() {
                for (r, v) in &self.cols[j * d + k] {
                    if r % d == k {
                        triplets.push((r / d, j, w.mul(v)));
                    }
                }
            }
        }
        Ok(Self::from_triplets(n, n, triplets))
    }
}

impl OpMatrix<RatFunc> {
    /// Specialises every entry at `z = at`; `None` if a denominator vanishes.
    pub fn eval_fp(&self, at: Fp) -> Option<OpMatrix<Fp>> {
        let mut failed = false;
        let m = self.map(|v| match v.eval_fp(at) {
            Some(x) => x,
            None => {
                failed = true;
                Fp::ZERO
            }
        });
        (!failed).then_some(m)
    }
}

/// Sparse accumulator for building one column at a time.
pub(crate) struct Accumulator<F> {
    slots: Vec<Option<F>>,
    touched: Vec<usize>,
}

impl<F: Field> Accumulator<F> {
    pub(crate) fn new(len: usize) -> Self {
        Accumulator { slots: vec![None; len], touched: Vec::new() }
    }

    pub(crate) fn add(&mut self, idx: usize, v: F) {
        match &mut self.slots[idx] {
            Some(x) => *x = x.add(&v),
            slot @ None => {
                *slot = Some(v);
                self.touched.push(idx);
            }
        }
    }

    /// Sorted nonzero entries; resets the accumulator.
    pub(crate) fn drain(&mut self) -> Vec<(usize, F)> {
        self.touched.sort_unstable();
        let slots = &mut self.slots;
        self.touched
            .drain(..)
            .filter_map(|r| slots[r].take().filter(|v| !v.is_zero()).map(|v| (r, v)))
            .collect()
    }
}

impl<F> OpMatrix<F> {
    /// Assembles a matrix from already sorted, zero-free columns.
    pub(crate) fn from_sorted_columns(rows: usize, cols: Vec<Vec<(usize, F)>>) -> Self {
        OpMatrix { rows, cols }
    }
}

fn sparse_from_dense<F: Field>(v: Vec<F>) -> Vec<(usize, F)> {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// Sorts by row, sums duplicates, drops zeros.
fn compress<F: Field>(mut col: Vec<(usize, F)>) -> Vec<(usize, F)> {
    col.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, F)> = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = lv.add(&v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

fn merge<F: Field>(
    a: &[(usize, F)],
    b: &[(usize, F)],
    both: impl Fn(&F, &F) -> F,
    only_b: impl Fn(&F) -> F,
) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(usize::MAX, |e| e.0);
        let rb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i].clone());
            i += 1;
        } else if rb < ra {
            out.push((rb, only_b(&b[j].1)));
            j += 1;
        } else {
            let v = both(&a[i].1, &b[j].1);
            if !v.is_zero() {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
