use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::OpMatrix;
use crate::scalar::{Field, Fp, Poly, RatFunc, ResidueSampler};

/// Incrementally maintained column space.
///
/// Accepted vectors are kept in echelon form: every stored vector has a
/// pivot entry equal to one and vanishes at the pivots of all earlier
/// vectors. `transform` records each stored vector as a combination of the
/// originally inserted ones, so membership queries also yield coordinates.
#[derive(Clone, Debug)]
pub struct ColumnSpace<F> {
    dim: usize,
    echelon: Vec<(usize, Vec<F>)>,
    transform: Vec<Vec<F>>,
}

impl<F: Field> ColumnSpace<F> {
    pub fn new(dim: usize) -> Self {
        ColumnSpace { dim, echelon: Vec::new(), transform: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// Residual of `v` after elimination, with the echelon coefficients used.
    fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut r = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.echelon.len());
        for (p, b) in &self.echelon {
            let c = r[*p].clone();
            if !c.is_zero() {
                for (x, y) in r.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
            coeffs.push(c);
        }
        (r, coeffs)
    }

    /// Adds `v`; returns whether it was independent of the stored span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let (mut r, coeffs) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = x.mul(&inv);
        }
        let k = self.transform.len();
        let mut t = vec![F::zero(); k + 1];
        t[k] = inv.clone();
        for (c, tv) in coeffs.iter().zip(&self.transform) {
            if c.is_zero() {
                continue;
            }
            let s = c.mul(&inv);
            for (acc, x) in t.iter_mut().zip(tv) {
                *acc = acc.sub(&s.mul(x));
            }
        }
        for tv in &mut self.transform {
            tv.push(F::zero());
        }
        self.transform.push(t);
        self.echelon.push((p, r));
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(F::is_zero)
    }

    /// Coordinates of `v` with respect to the accepted vectors in insertion
    /// order, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let (r, coeffs) = self.reduce(v);
        if !r.iter().all(F::is_zero) {
            return None;
        }
        let mut out = vec![F::zero(); self.transform.len()];
        for (c, tv) in coeffs.iter().zip(&self.transform) {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in out.iter_mut().zip(tv) {
                *acc = acc.add(&c.mul(x));
            }
        }
        Some(out)
    }
}

/// Rank over the field of the entries, by Gaussian elimination.
pub fn rank<F: Field>(m: &OpMatrix<F>) -> usize {
    let mut space = ColumnSpace::new(m.rows());
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        if space.insert(&m.dense_column(c)) {
            r += 1;
        }
    }
    r
}

/// Exact rank over `Q(z)`.
///
/// Rows are cleared of denominators, then eliminated fraction-free over
/// `Z[z]`: a row update is `p * row - a * pivot_row`, after which the row is
/// divided by the gcd of its entries to keep the growth in check.
pub fn rank_exact(m: &OpMatrix<RatFunc>) -> usize {
    let dense = m.to_dense_rows();
    let mut rows: Vec<Vec<Poly>> = dense
        .into_iter()
        .map(|row| {
            let l = row
                .iter()
                .filter(|x| !x.is_zero())
                .fold(Poly::one(), |acc, x| lcm(&acc, x.denominator()));
            let prow = row
                .iter()
                .map(|x| {
                    if x.is_zero() {
                        Poly::zero()
                    } else {
                        x.numerator().mul(&l.div_exact(x.denominator()).expect("lcm is a multiple"))
                    }
                })
                .collect();
            make_primitive(prow)
        })
        .filter(|row: &Vec<Poly>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let ncols = m.cols();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].degree(), term_size(&rows[i][c])));
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = &prow[c];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let updated: Vec<Poly> = row
                .iter()
                .zip(prow)
                .map(|(x, y)| {
                    let left = if x.is_zero() { Poly::zero() } else { x.mul(p) };
                    if y.is_zero() {
                        left
                    } else {
                        left.sub(&y.mul(&a))
                    }
                })
                .collect();
            *row = make_primitive(updated);
        }
        rank += 1;
    }
    rank
}

fn term_size(p: &Poly) -> usize {
    p.coeffs().iter().map(|c| c.bits() as usize).sum()
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() || a == b {
        return a.clone();
    }
    // Primitive lcm times the lcm of the contents; by Gauss's lemma this is
    // a multiple of both over Z[z].
    let g = a.primitive_gcd(b);
    let ab = a.mul(b);
    let q = ab.div_exact(&g).expect("gcd divides product");
    q.primitive_part().scale(&a.content().lcm(&b.content()))
}

fn make_primitive(row: Vec<Poly>) -> Vec<Poly> {
    let mut g: Option<Poly> = None;
    let mut content = BigInt::zero();
    for x in row.iter().filter(|x| !x.is_zero()) {
        content = num_integer::Integer::gcd(&content, &x.content());
        g = Some(match g {
            None => x.primitive_part(),
            Some(g) if g.degree() == Some(0) => g,
            Some(g) => g.primitive_gcd(x),
        });
    }
    let Some(g) = g else { return row };
    let g = g.scale(&content);
    if g.is_one() {
        return row;
    }
    row.into_iter()
        .map(|x| if x.is_zero() { x } else { x.div_exact(&g).expect("row gcd divides entries") })
        .collect()
}

/// Rank after specialising `z` to random residues modulo `2^61 - 1`.
///
/// Two independent trials are run and the larger rank returned; a trial
/// whose point is a pole of some entry is redrawn. The result never exceeds
/// the true rank and falls short of it only if the point is a root of a
/// nonzero minor.
pub fn rank_probabilistic(m: &OpMatrix<RatFunc>, seed: u64) -> usize {
    let mut sampler = ResidueSampler::new(seed);
    let mut best = 0;
    for _ in 0..2 {
        let specialised = loop {
            if let Some(mf) = m.eval_fp(sampler.next_nonzero()) {
                break mf;
            }
        };
        best = best.max(rank::<Fp>(&specialised));
    }
    best
}

/// Basis of the right kernel, one vector per free column of the reduced
/// row echelon form.
pub fn kernel_basis<F: Field>(m: &OpMatrix<F>) -> Vec<Vec<F>> {
    let mut rows = m.to_dense_rows();
    let ncols = m.cols();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = x.sub(&a.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = rows[row][free].neg();
        }
        basis.push(v);
    }
    basis
}
