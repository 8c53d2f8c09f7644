use alloc::vec;
use alloc::vec::Vec;

use super::MetricData;
use crate::bimodule::{Calculus, Sign};
use crate::error::{Error, Result};
use crate::exterior::{antisymmetrizer_word, b_ij, WordProduct};
use crate::linalg::{apply_one_slot, reverse_slots, OpMatrix};
use crate::scalar::Field;

/// The iterated pairing `g̃(x, y)` of `x ∈ (Γ_τ)^{⊗k}` with
/// `y ∈ (Γ_{-τ})^{⊗l}`: the last slot of `x` meets the first slot of `y`,
/// and so on inwards. The result has `|k - l|` slots, left over from `x`
/// when `k ≥ l` and from `y` otherwise.
pub fn gtilde<F: Field>(metric: &MetricData<F>, tau: Sign, x: &[F], k: usize, y: &[F], l: usize) -> Result<Vec<F>> {
    let d = metric.n * metric.n;
    check_len(x, d, k)?;
    check_len(y, d, l)?;
    let g = metric.pairing(tau);
    if k >= l {
        let mut py = reverse_slots(y, d, l);
        for s in 0..l {
            py = apply_one_slot(g, d, l, s, &py);
        }
        let inner = py.len();
        Ok(x.chunks(inner).map(|row| dot(row, &py)).collect())
    } else {
        let gt = g.transpose();
        let mut qx = reverse_slots(x, d, k);
        for s in 0..k {
            qx = apply_one_slot(&gt, d, k, s, &qx);
        }
        let outer = d.pow((l - k) as u32);
        let mut out = vec![F::zero(); outer];
        for (c, a) in qx.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(&y[c * outer..(c + 1) * outer]) {
                if !b.is_zero() {
                    *o = o.add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }
}

/// `g̃` on `(Γ_τ)^{⊗k} × (Γ_{-τ})^{⊗k}` as the matrix of a bilinear form:
/// entry `(x, y)` is `g̃(e_x, e_y)`.
pub fn gtilde_form<F: Field>(metric: &MetricData<F>, tau: Sign, k: usize) -> OpMatrix<F> {
    let d = metric.n * metric.n;
    let g = metric.pairing(tau);
    let mut full = OpMatrix::identity(1);
    for _ in 0..k {
        full = full.kron(g);
    }
    let dim = full.cols();
    let rev: Vec<usize> = reverse_slots(&(0..dim).collect::<Vec<_>>(), d, k);
    OpMatrix::from_triplets(dim, dim, full.entries().into_iter().map(|(r, c, v)| (r, rev[c], v)))
}

/// The contraction `⌟^{sign}(x, y)` of `x ∈ (Γ_τ)^{⊗k}` with
/// `y ∈ (Γ_{-τ})^{⊗l}`: `g̃(B_{k-l,l} x, A_l y)` for `k ≥ l` and
/// `g̃(A_k x, B_{k,l-k} y)` otherwise. The result has type `τ` when
/// `k ≥ l` and `-τ` otherwise.
#[allow(clippy::too_many_arguments)]
pub fn contract<F: Field>(
    calc: &Calculus<F>,
    metric: &MetricData<F>,
    tau: Sign,
    sign: Sign,
    x: &[F],
    k: usize,
    y: &[F],
    l: usize,
) -> Result<Vec<F>> {
    let d = calc.slot_dim();
    check_len(x, d, k)?;
    check_len(y, d, l)?;
    let (wx, wy) = if k >= l {
        (WordProduct::single(b_ij(k - l, l)), antisymmetrizer_word(l))
    } else {
        (antisymmetrizer_word(k), WordProduct::single(b_ij(k, l - k)))
    };
    let xs = wx.apply(calc, sign, &mut vec![tau; k], x)?;
    let ys = wy.apply(calc, sign, &mut vec![tau.flip(); l], y)?;
    gtilde(metric, tau, &xs, k, &ys, l)
}

/// The contraction as a matrix from the `k + l`-slot space (first `k` slots
/// of type `τ`) to the `|k - l|`-slot space.
pub fn contract_matrix<F: Field>(calc: &Calculus<F>, metric: &MetricData<F>, tau: Sign, sign: Sign, k: usize, l: usize) -> Result<OpMatrix<F>> {
    let d = calc.slot_dim();
    let dk = d.pow(k as u32);
    let dl = d.pow(l as u32);
    let out = d.pow(k.abs_diff(l) as u32);
    let mut ex = vec![F::zero(); dk];
    let mut ey = vec![F::zero(); dl];
    let mut cols = Vec::with_capacity(dk * dl);
    for a in 0..dk {
        ex[a] = F::one();
        for b in 0..dl {
            ey[b] = F::one();
            cols.push(contract(calc, metric, tau, sign, &ex, k, &ey, l)?);
            ey[b] = F::zero();
        }
        ex[a] = F::zero();
    }
    Ok(OpMatrix::from_dense_columns(out, dk * dl, |c| core::mem::take(&mut cols[c])))
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

fn check_len<F>(v: &[F], d: usize, k: usize) -> Result<()> {
    let expected = d.pow(k as u32);
    if v.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: v.len() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QParams, RatFunc};

    #[test]
    fn single_slot_gtilde_is_the_pairing() {
        let m = MetricData::new(&QParams::symbolic(2));
        for tau in Sign::BOTH {
            assert_eq!(&gtilde_form(&m, tau, 1), m.pairing(tau));
        }
        assert!(gtilde_form(&m, Sign::Plus, 0).is_identity());
    }

    #[test]
    fn vector_gtilde_matches_the_form() {
        let m = MetricData::new(&QParams::symbolic(2));
        let form = gtilde_form(&m, Sign::Minus, 2);
        let mut ex = vec![RatFunc::zero(); 16];
        let mut ey = vec![RatFunc::zero(); 16];
        for a in 0..16 {
            ex[a] = RatFunc::one();
            for b in 0..16 {
                ey[b] = RatFunc::one();
                let v = gtilde(&m, Sign::Minus, &ex, 2, &ey, 2).unwrap();
                assert_eq!(v, vec![form.get(a, b)]);
                ey[b] = RatFunc::zero();
            }
            ex[a] = RatFunc::zero();
        }
    }

    #[test]
    fn leftover_slots() {
        let m = MetricData::new(&QParams::symbolic(2));
        let g = m.pairing(Sign::Plus);
        // x = e_1 ⊗ e_2, y = e_3: pairs slot 2 of x with y, leaving e_1.
        let mut x = vec![RatFunc::zero(); 16];
        x[4 + 2] = RatFunc::one();
        let mut y = vec![RatFunc::zero(); 4];
        y[1] = RatFunc::one();
        let r = gtilde(&m, Sign::Plus, &x, 2, &y, 1).unwrap();
        let mut expected = vec![RatFunc::zero(); 4];
        expected[1] = g.get(2, 1);
        assert_eq!(r, expected);
        // Swapped roles: x = e_2, y = e_1 ⊗ e_3 leaves e_3.
        let mut x1 = vec![RatFunc::zero(); 4];
        x1[2] = RatFunc::one();
        let mut y2 = vec![RatFunc::zero(); 16];
        y2[4 + 3] = RatFunc::one();
        let r = gtilde(&m, Sign::Plus, &x1, 1, &y2, 2).unwrap();
        let mut expected = vec![RatFunc::zero(); 4];
        expected[3] = g.get(2, 1);
        assert_eq!(r, expected);
    }
}
