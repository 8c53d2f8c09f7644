//! The Laplace–Beltrami spectrum on `SL_q(N)`: eigenvalues `E_λ` indexed by
//! Young diagrams, their classical limit, Jucys–Murphy operators of the
//! Hecke algebra and the operator `L_m` by which the Laplacian acts on
//! words of length `m` in the generators.

mod young;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use young::{enumerate_diagrams, YoungDiagram};

use crate::bimodule::Sign;
use crate::error::{Error, Result};
use crate::linalg::{embed_two_slot, OpMatrix};
use crate::rmatrix::rhat;
use crate::scalar::{q_int, rf_eval, Field, QParams, RatFunc};

/// `E_λ = (z - z^{-1})^2 ([m]_z^2 [N]_q + [N]_z Σ_{(i,j)∈λ} [N^2 - 2m + 2N(j - i)]_z)`
/// with `m` the number of boxes and `q = z^N`.
pub fn eigenvalue(lambda: &YoungDiagram, n: usize) -> Result<RatFunc> {
    check_rows(lambda, n)?;
    let z = RatFunc::z();
    let q = z.pow(n as i64)?;
    let ni = n as i64;
    let m = lambda.boxes() as i64;
    let mut content = RatFunc::zero();
    for (i, j) in lambda.cells() {
        content = content.add(&q_int(ni * ni - 2 * m + 2 * ni * (j as i64 - i as i64), &z)?);
    }
    let mz = q_int(m, &z)?;
    let bracket = mz.mul(&mz).mul(&q_int(ni, &q)?).add(&q_int(ni, &z)?.mul(&content));
    let d = z.sub(&z.inv()?);
    Ok(d.mul(&d).mul(&bracket))
}

/// `2 (z - z^{-1})^2 [m]_z [m+2]_z`, the eigenvalue on `[m, 0]` for `N = 2`.
pub fn su2_eigenvalue(m: usize) -> Result<RatFunc> {
    let z = RatFunc::z();
    let d = z.sub(&z.inv()?);
    let m = m as i64;
    Ok(RatFunc::from_int(2).mul(&d).mul(&d).mul(&q_int(m, &z)?).mul(&q_int(m + 2, &z)?))
}

/// The eigenvalue of the classical Laplace–Beltrami operator on `SU(N)`:
/// `Σ_{i<N} (N-i) m_i / N · (i (m_i + N) + 2 Σ_{j<i} j m_j)` with `m_i` the
/// number of columns of length `i`.
pub fn classical_eigenvalue(lambda: &YoungDiagram, n: usize) -> Result<BigRational> {
    check_rows(lambda, n)?;
    let m = lambda.column_counts(n);
    let big = |v: usize| BigInt::from(v);
    let mut total = BigRational::zero();
    for i in 1..n {
        let mi = m[i - 1];
        let inner: usize = (1..i).map(|j| j * m[j - 1]).sum();
        let num = big((n - i) * mi) * big(i * (mi + n) + 2 * inner);
        total += BigRational::new(num, big(n));
    }
    Ok(total)
}

/// `(q - q^{-1})^{-2} E_λ` at `z = 1`, after cancellation.
pub fn classical_limit(lambda: &YoungDiagram, n: usize) -> Result<BigRational> {
    let e = eigenvalue(lambda, n)?;
    let q = RatFunc::z().pow(n as i64)?;
    let d = q.sub(&q.inv()?);
    rf_eval(&e.div(&d.mul(&d))?, &BigRational::one())
}

fn check_rows(lambda: &YoungDiagram, n: usize) -> Result<()> {
    if lambda.height() > n {
        return Err(Error::IndexOutOfRange { index: lambda.height(), bound: n + 1 });
    }
    Ok(())
}

/// `D^±_idx` on `(C^N)^{⊗slots}`: the identity for `idx = 1` and
/// `R̂_{idx-1,idx} ⋯ R̂_{12} R̂_{12} ⋯ R̂_{idx-1,idx}` otherwise, with
/// `R̂^-` the inverse of `R̂`.
pub fn jucys_murphy<F: Field>(p: &QParams<F>, slots: usize, idx: usize, sign: Sign) -> Result<OpMatrix<F>> {
    if idx == 0 || idx > slots {
        return Err(Error::IndexOutOfRange { index: idx, bound: slots + 1 });
    }
    let n = p.n;
    let r = rhat(p, sign);
    let mut out = OpMatrix::identity(n.pow(slots as u32));
    if idx == 1 {
        return Ok(out);
    }
    let layers: Vec<OpMatrix<F>> = (0..idx - 1).map(|pos| embed_two_slot(&r, n, slots, pos)).collect();
    for layer in layers.iter().rev() {
        out = out.mul(layer)?;
    }
    for layer in &layers {
        out = out.mul(layer)?;
    }
    Ok(out)
}

/// `Σ_k q^{2k} M^{…k}_{…k}`, `k = 1..N`, over the last slot.
pub fn q_partial_trace<F: Field>(p: &QParams<F>, m: &OpMatrix<F>, slots: usize) -> Result<OpMatrix<F>> {
    let weights: Vec<F> = (1..=p.n as i64).map(|k| p.qpow(2 * k)).collect();
    m.weighted_partial_trace(slots - 1, slots, &weights)
}

/// `L_m = q^{-N-1} Σ_k q^{2k} (z^{-2m} D^+_{m+1} + z^{2m} D^-_{m+1} - 2 id)^{…k}_{…k}`
/// on `(C^N)^{⊗m}`: the Laplacian on `u^{i_1}_{j_1} ⋯ u^{i_m}_{j_m}` acts
/// through this matrix on the upper indices.
pub fn word_laplace<F: Field>(p: &QParams<F>, m: usize) -> Result<OpMatrix<F>> {
    if m == 0 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 0 });
    }
    let slots = m + 1;
    let plus = jucys_murphy(p, slots, slots, Sign::Plus)?.scale(&p.zpow(-2 * m as i64));
    let minus = jucys_murphy(p, slots, slots, Sign::Minus)?.scale(&p.zpow(2 * m as i64));
    let id = OpMatrix::identity(p.n.pow(slots as u32)).scale(&F::from_i64(2));
    let inner = plus.add(&minus)?.sub(&id)?;
    Ok(q_partial_trace(p, &inner, slots)?.scale(&p.qpow(-(p.n as i64) - 1)))
}

/// The Hecke idempotents on `(C^N)^{⊗2}`: `(R̂ + q^{-1}) / (q + q^{-1})`
/// projecting onto `[2]` and `(q - R̂) / (q + q^{-1})` onto `[1,1]`.
pub fn hecke_projectors<F: Field>(p: &QParams<F>) -> Result<(OpMatrix<F>, OpMatrix<F>)> {
    let r = rhat(p, Sign::Plus);
    let id = OpMatrix::identity(p.n * p.n);
    let norm = p.q.add(&p.qinv).inv().ok_or(Error::DivisionByZero)?;
    let sym = r.add(&id.scale(&p.qinv))?.scale(&norm);
    let anti = id.scale(&p.q).sub(&r)?.scale(&norm);
    Ok((sym, anti))
}

/// A row of the spectrum table.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub diagram: YoungDiagram,
    pub eigenvalue: RatFunc,
    pub value: Option<BigRational>,
}

/// `E_λ` for every diagram with at most `max_boxes` boxes, evaluated at
/// `at` when given.
pub fn spectrum(n: usize, max_boxes: usize, at: Option<&BigRational>) -> Result<Vec<SpectrumEntry>> {
    enumerate_diagrams(n, max_boxes)
        .into_iter()
        .map(|diagram| {
            let eigenvalue = eigenvalue(&diagram, n)?;
            let value = at.map(|z| rf_eval(&eigenvalue, z)).transpose()?;
            Ok(SpectrumEntry { diagram, eigenvalue, value })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinPositive {
    pub diagram: YoungDiagram,
    pub value: BigRational,
    /// Whether the minimizer is `[1^k, 0^{N-k}]` with `0 < k < N`.
    pub column_shape: bool,
}

/// The smallest positive `E_λ(at)` over diagrams with at most `max_boxes`
/// boxes; ties go to the first diagram in enumeration order. A pole at
/// `at` is reported as [`Error::Pole`], meaning another point is needed.
pub fn min_positive(n: usize, max_boxes: usize, at: &BigRational) -> Result<Option<MinPositive>> {
    let mut best: Option<MinPositive> = None;
    for e in spectrum(n, max_boxes, Some(at))? {
        let v = e.value.expect("evaluated");
        if v.is_positive() && best.as_ref().is_none_or(|b| v < b.value) {
            let column_shape = e.diagram.is_column_shape(n);
            best = Some(MinPositive { diagram: e.diagram, value: v, column_shape });
        }
    }
    Ok(best)
}
