//! The SL_q(N) R̂-matrix and the universal r-form on generators.
//!
//! Generators `u^i_j` carry an antipode power: `S^2(u^i_j) = q^{2i-2j} u^i_j`
//! reduces every power to 0 or 1, and `r(Sa, Sb) = r(a, b)`.

use alloc::vec::Vec;

use crate::bimodule::Sign;
use crate::linalg::OpMatrix;
use crate::scalar::{Field, QParams};

/// `R̂^{ij}_{kl} = q^{δ_ij} δ^i_l δ^j_k + [i<j] (q - q^{-1}) δ^i_k δ^j_l`,
/// rows indexed by `(i, j)`, columns by `(k, l)`. The negative sign gives
/// the inverse `R̂ - (q - q^{-1}) id`.
pub fn rhat<F: Field>(p: &QParams<F>, sign: Sign) -> OpMatrix<F> {
    let n = p.n;
    let diff = p.qdiff();
    let mut t = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            let flip = j * n + i;
            t.push((row, flip, if i == j { p.q.clone() } else { F::one() }));
            if i < j {
                t.push((row, row, diff.clone()));
            }
            if sign == Sign::Minus {
                t.push((row, row, diff.neg()));
            }
        }
    }
    OpMatrix::from_triplets(n * n, n * n, t)
}

/// A generator `S^antipode(u^upper_lower)`, indices 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gen {
    pub antipode: u8,
    pub upper: usize,
    pub lower: usize,
}

impl Gen {
    pub fn u(upper: usize, lower: usize) -> Self {
        Gen { antipode: 0, upper, lower }
    }
    pub fn s(upper: usize, lower: usize) -> Self {
        Gen { antipode: 1, upper, lower }
    }
    pub fn s2(upper: usize, lower: usize) -> Self {
        Gen { antipode: 2, upper, lower }
    }
}

/// The r-form on pairs of generators and antipodes of generators.
///
/// Tables are indexed by `((i * N + j) * N + k) * N + l` for the pair
/// `(u^i_j, u^k_l)`:
/// `r(u^i_j, u^k_l) = z^{-1} R̂^{ki}_{jl}`,
/// `r(u^i_j, S u^k_l) = z q^{2k-2l} (R̂^{-1})^{ik}_{lj}`,
/// `r(S u^i_j, u^k_l) = z (R̂^{-1})^{ik}_{lj}`.
#[derive(Clone, Debug)]
pub struct RFormTable<F> {
    params: QParams<F>,
    r_uu: Vec<F>,
    r_u_su: Vec<F>,
    r_su_u: Vec<F>,
}

impl<F: Field> RFormTable<F> {
    pub fn new(params: QParams<F>) -> Self {
        let n = params.n;
        let rh = rhat(&params, Sign::Plus);
        let ri = rhat(&params, Sign::Minus);
        let mut r_uu = Vec::with_capacity(n.pow(4));
        let mut r_u_su = Vec::with_capacity(n.pow(4));
        let mut r_su_u = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        r_uu.push(rh.get(k * n + i, j * n + l).mul(&params.zinv));
                        let inv = ri.get(i * n + k, l * n + j).mul(&params.z);
                        r_u_su.push(inv.mul(&params.qpow(2 * k as i64 - 2 * l as i64)));
                        r_su_u.push(inv);
                    }
                }
            }
        }
        RFormTable { params, r_uu, r_u_su, r_su_u }
    }

    pub fn params(&self) -> &QParams<F> {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    fn index(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let n = self.params.n;
        ((i * n + j) * n + k) * n + l
    }

    pub fn r_uu(&self, i: usize, j: usize, k: usize, l: usize) -> &F {
        &self.r_uu[self.index(i, j, k, l)]
    }

    pub fn r_u_su(&self, i: usize, j: usize, k: usize, l: usize) -> &F {
        &self.r_u_su[self.index(i, j, k, l)]
    }

    pub fn r_su_u(&self, i: usize, j: usize, k: usize, l: usize) -> &F {
        &self.r_su_u[self.index(i, j, k, l)]
    }

    /// `r(a, b)` for generators with arbitrary antipode powers.
    pub fn eval(&self, a: Gen, b: Gen) -> F {
        let mut factor = F::one();
        let mut pa = a.antipode;
        let mut pb = b.antipode;
        while pa >= 2 {
            factor = factor.mul(&self.params.qpow(2 * a.upper as i64 - 2 * a.lower as i64));
            pa -= 2;
        }
        while pb >= 2 {
            factor = factor.mul(&self.params.qpow(2 * b.upper as i64 - 2 * b.lower as i64));
            pb -= 2;
        }
        let (i, j, k, l) = (a.upper, a.lower, b.upper, b.lower);
        let base = match (pa, pb) {
            (0, 0) | (1, 1) => self.r_uu(i, j, k, l),
            (0, 1) => self.r_u_su(i, j, k, l),
            _ => self.r_su_u(i, j, k, l),
        };
        if factor.is_one() {
            base.clone()
        } else {
            base.mul(&factor)
        }
    }

    /// `f(u^i_j) = Σ_k r(u^i_k, S u^k_j)`.
    pub fn f_u(&self, i: usize, j: usize) -> F {
        (0..self.n()).fold(F::zero(), |acc, k| acc.add(&self.eval(Gen::u(i, k), Gen::s(k, j))))
    }

    /// `f̄(u^i_j) = Σ_k r(S^2 u^i_k, u^k_j)`.
    pub fn fbar_u(&self, i: usize, j: usize) -> F {
        (0..self.n()).fold(F::zero(), |acc, k| acc.add(&self.eval(Gen::s2(i, k), Gen::u(k, j))))
    }

    /// `f(S u^i_j) = Σ_k r(S u^k_j, S^2 u^i_k)`.
    pub fn f_su(&self, i: usize, j: usize) -> F {
        (0..self.n()).fold(F::zero(), |acc, k| acc.add(&self.eval(Gen::s(k, j), Gen::s2(i, k))))
    }

    /// `(f(u^i_j), f̄(u^i_j))` as `N x N` matrices.
    pub fn f_functionals(&self) -> (OpMatrix<F>, OpMatrix<F>) {
        let n = self.n();
        let f = OpMatrix::from_dense_columns(n, n, |j| (0..n).map(|i| self.f_u(i, j)).collect());
        let fbar = OpMatrix::from_dense_columns(n, n, |j| (0..n).map(|i| self.fbar_u(i, j)).collect());
        (f, fbar)
    }

    /// `Σ_{k,c} r(u^i_k, u^a_c) r(S u^k_j, u^c_b) = δ^i_j δ^a_b` and its mirror
    /// `Σ_{k,c} r(u^c_b, u^i_k) r(u^a_c, S u^k_j) = δ^i_j δ^a_b`, i.e. the
    /// r-form turns `u S(u) = 1` into the identity pattern on both sides.
    pub fn antipode_duality_holds(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        let mut left = F::zero();
                        let mut right = F::zero();
                        for k in 0..n {
                            for c in 0..n {
                                left = left.add(&self.eval(Gen::u(i, k), Gen::u(a, c)).mul(&self.eval(Gen::s(k, j), Gen::u(c, b))));
                                right = right.add(&self.eval(Gen::u(c, b), Gen::u(i, k)).mul(&self.eval(Gen::u(a, c), Gen::s(k, j))));
                            }
                        }
                        let expected = if i == j && a == b { F::one() } else { F::zero() };
                        if left != expected || right != expected {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::embed_two_slot;
    use crate::scalar::RatFunc;

    #[test]
    fn rhat_small_cases() {
        let p1 = QParams::symbolic(1);
        let r1 = rhat(&p1, Sign::Plus);
        assert_eq!(r1.entries(), alloc::vec![(0, 0, RatFunc::z())]);
        let p = QParams::symbolic(2);
        let r = rhat(&p, Sign::Plus);
        let q = p.q.clone();
        assert_eq!(r.get(0, 0), q);
        assert_eq!(r.get(1, 2), RatFunc::one());
        assert_eq!(r.get(2, 1), RatFunc::one());
        assert_eq!(r.get(1, 1), p.qdiff());
        assert_eq!(r.get(3, 3), q);
        assert_eq!(r.nnz(), 5);
        assert!(r.mul(&rhat(&p, Sign::Minus)).unwrap().is_identity());
    }

    #[test]
    fn hecke_and_braid() {
        for n in 2..=3 {
            let p = QParams::symbolic(n);
            let r = rhat(&p, Sign::Plus);
            let id = OpMatrix::identity(n * n);
            let a = r.sub(&id.scale(&p.q)).unwrap();
            let b = r.add(&id.scale(&p.qinv)).unwrap();
            assert!(a.mul(&b).unwrap().is_zero());
            let r12 = embed_two_slot(&r, n, 3, 0);
            let r23 = embed_two_slot(&r, n, 3, 1);
            let lhs = OpMatrix::product(&[&r12, &r23, &r12]).unwrap();
            let rhs = OpMatrix::product(&[&r23, &r12, &r23]).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rform_values() {
        let t = RFormTable::new(QParams::symbolic(2));
        assert_eq!(*t.r_uu(0, 0, 0, 0), RatFunc::z());
        let t1 = RFormTable::new(QParams::symbolic(1));
        assert_eq!(*t1.r_su_u(0, 0, 0, 0), RatFunc::one());
        assert!(t.antipode_duality_holds());
    }

    #[test]
    fn f_and_fbar_are_inverse_diagonals() {
        for n in 1..=3 {
            let t = RFormTable::new(QParams::symbolic(n));
            let (f, fbar) = t.f_functionals();
            assert!(f.mul(&fbar).unwrap().is_identity());
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        assert!(f.get(i, j).is_zero());
                    }
                }
            }
        }
    }
}
