use alloc::vec;
use alloc::vec::Vec;

use super::OpMatrix;
use crate::scalar::Field;

/// Applies a two-slot operator `m` (on `d^2` coordinates) to slots
/// `pos, pos + 1` of a dense vector on `nslots` slots of dimension `d`.
pub fn apply_two_slot<F: Field>(m: &OpMatrix<F>, d: usize, nslots: usize, pos: usize, v: &[F]) -> Vec<F> {
    assert!(pos + 1 < nslots, "slot pair {pos} out of range for {nslots} slots");
    assert_eq!(m.rows(), d * d);
    assert_eq!(m.cols(), d * d);
    let lo = d.pow((nslots - pos - 2) as u32);
    let block = d * d * lo;
    assert_eq!(v.len() % block, 0);
    let mut out = vec![F::zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let hi = idx / block;
        let ab = (idx % block) / lo;
        let l = idx % lo;
        for (cd, a) in m.column(ab) {
            let t = hi * block + cd * lo + l;
            out[t] = out[t].add(&a.mul(x));
        }
    }
    out
}

/// Applies a one-slot operator `m` (`d x d`) to slot `pos` of a dense vector
/// on `nslots` slots of dimension `d`.
pub fn apply_one_slot<F: Field>(m: &OpMatrix<F>, d: usize, nslots: usize, pos: usize, v: &[F]) -> Vec<F> {
    assert!(pos < nslots, "slot {pos} out of range for {nslots} slots");
    assert_eq!(m.rows(), d);
    assert_eq!(m.cols(), d);
    let lo = d.pow((nslots - pos - 1) as u32);
    let block = d * lo;
    let mut out = vec![F::zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let hi = idx / block;
        let a = (idx % block) / lo;
        let l = idx % lo;
        for (c, e) in m.column(a) {
            let t = hi * block + c * lo + l;
            out[t] = out[t].add(&e.mul(x));
        }
    }
    out
}

/// Reverses the order of the `nslots` slots of dimension `d`.
pub fn reverse_slots<F: Clone>(v: &[F], d: usize, nslots: usize) -> Vec<F> {
    (0..v.len())
        .map(|idx| {
            let mut src = 0;
            let mut rest = idx;
            for _ in 0..nslots {
                src = src * d + rest % d;
                rest /= d;
            }
            v[src].clone()
        })
        .collect()
}

/// `id^{pos} ⊗ m ⊗ id^{nslots - pos - 2}` as a matrix.
pub fn embed_two_slot<F: Field>(m: &OpMatrix<F>, d: usize, nslots: usize, pos: usize) -> OpMatrix<F> {
    assert!(pos + 1 < nslots, "slot pair {pos} out of range for {nslots} slots");
    let left = OpMatrix::identity(d.pow(pos as u32));
    let right = OpMatrix::identity(d.pow((nslots - pos - 2) as u32));
    left.kron(m).kron(&right)
}
