use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::contract::contract;
use super::MetricData;
use crate::bimodule::{Calculus, Sign};
use crate::error::{Error, Result};
use crate::exterior::{residue_pivot_columns, top_form, ExteriorPower};
use crate::linalg::OpMatrix;
use crate::scalar::{Field, RatFunc};

/// Which argument of the contraction the top form occupies: `*_L(ξ)` is
/// `⌟(ξ, ω0)`, `*_R(ξ)` is `⌟(ω0, ξ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Top forms `ω0^±` scaled so that all four contractions
/// `⌟^±(ω0^+, ω0^-)`, `⌟^±(ω0^-, ω0^+)` equal one.
#[derive(Clone, Debug)]
pub struct TopForms {
    pub n0: usize,
    pub plus: Vec<RatFunc>,
    pub minus: Vec<RatFunc>,
}

impl TopForms {
    pub fn get(&self, tau: Sign) -> &[RatFunc] {
        match tau {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

/// Finds both top forms, rescales `ω0^-` so that `⌟^+(ω0^+, ω0^-) = 1`
/// and fails with a structural error unless the other three contractions
/// come out as one as well.
pub fn normalized_top_forms(calc: &Calculus<RatFunc>, metric: &MetricData<RatFunc>, seed: u64, max_dim: usize) -> Result<TopForms> {
    let plus = top_form(calc, Sign::Plus, seed, max_dim)?;
    let minus = top_form(calc, Sign::Minus, seed, max_dim)?;
    if plus.n0 != minus.n0 {
        return Err(Error::Structural(format!("top degrees differ: {} and {}", plus.n0, minus.n0)));
    }
    let n0 = plus.n0;
    let pair = |tau: Sign, sign: Sign, x: &[RatFunc], y: &[RatFunc]| -> Result<RatFunc> {
        Ok(contract(calc, metric, tau, sign, x, n0, y, n0)?.remove(0))
    };
    let s = pair(Sign::Plus, Sign::Plus, &plus.vector, &minus.vector)?;
    let sinv = s.inv().map_err(|_| Error::Structural("top forms pair to zero".into()))?;
    let minus_vec: Vec<RatFunc> = minus.vector.iter().map(|v| v.mul(&sinv)).collect();
    for sign in Sign::BOTH {
        let a = pair(Sign::Plus, sign, &plus.vector, &minus_vec)?;
        let b = pair(Sign::Minus, sign, &minus_vec, &plus.vector)?;
        if !a.is_one() || !b.is_one() {
            return Err(Error::Structural(format!("unnormalized top form: pairings {a} and {b} under sign {sign}")));
        }
    }
    Ok(TopForms { n0, plus: plus.vector, minus: minus_vec })
}

/// `Λ^k_τ` with the classes found at a random residue as basis.
pub fn lambda_basis(calc: &Calculus<RatFunc>, k: usize, tau: Sign, seed: u64) -> Result<ExteriorPower<RatFunc>> {
    let pivots = residue_pivot_columns(calc.n(), k, tau, seed)?;
    ExteriorPower::build(calc, k, tau, Some(&pivots), None)
}

/// Left-invariant forms of both calculi with normalized top forms; the
/// Hodge operators and codifferentials are matrices in the bases of
/// [`lambda_basis`].
pub struct FormCalculus<'a> {
    pub calc: &'a Calculus<RatFunc>,
    pub metric: &'a MetricData<RatFunc>,
    pub tops: TopForms,
    seed: u64,
    bases: BTreeMap<(usize, Sign), ExteriorPower<RatFunc>>,
}

impl<'a> FormCalculus<'a> {
    pub fn new(calc: &'a Calculus<RatFunc>, metric: &'a MetricData<RatFunc>, seed: u64, max_dim: usize) -> Result<Self> {
        let tops = normalized_top_forms(calc, metric, seed, max_dim)?;
        Ok(FormCalculus { calc, metric, tops, seed, bases: BTreeMap::new() })
    }

    pub fn n0(&self) -> usize {
        self.tops.n0
    }

    pub fn basis(&mut self, k: usize, tau: Sign) -> Result<&ExteriorPower<RatFunc>> {
        if !self.bases.contains_key(&(k, tau)) {
            let b = lambda_basis(self.calc, k, tau, self.seed)?;
            self.bases.insert((k, tau), b);
        }
        Ok(&self.bases[&(k, tau)])
    }

    /// Matrix of a linear map `Λ^k_τ → Λ^m_σ` given on representatives.
    fn class_map(&mut self, k: usize, tau: Sign, m: usize, target: Sign, mut f: impl FnMut(&[RatFunc]) -> Result<Vec<RatFunc>>) -> Result<OpMatrix<RatFunc>> {
        let reps: Vec<Vec<RatFunc>> = {
            let src = self.basis(k, tau)?;
            (0..src.dim())
                .map(|i| {
                    let mut e = vec![RatFunc::zero(); src.dim()];
                    e[i] = RatFunc::one();
                    src.representative(&e)
                })
                .collect()
        };
        let images = reps.iter().map(|r| f(r)).collect::<Result<Vec<_>>>()?;
        let calc = self.calc;
        let dst = self.basis(m, target)?;
        let cols = images.iter().map(|t| dst.coords(calc, t)).collect::<Result<Vec<_>>>()?;
        Ok(OpMatrix::from_dense_columns(dst.dim(), cols.len(), |c| cols[c].clone()))
    }

    /// `*^{sign}_L(ξ) = ⌟(ξ, ω0^{-τ})` or `*^{sign}_R(ξ) = ⌟(ω0^{-τ}, ξ)`
    /// from `Λ^k_τ` to `Λ^{n0-k}_{-τ}`.
    pub fn hodge(&mut self, k: usize, tau: Sign, side: Side, sign: Sign) -> Result<OpMatrix<RatFunc>> {
        let n0 = self.n0();
        if k > n0 {
            return Err(Error::IndexOutOfRange { index: k, bound: n0 + 1 });
        }
        let (calc, metric) = (self.calc, self.metric);
        let top = self.tops.get(tau.flip()).to_vec();
        self.class_map(k, tau, n0 - k, tau.flip(), |x| match side {
            Side::Left => contract(calc, metric, tau, sign, x, k, &top, n0),
            Side::Right => contract(calc, metric, tau.flip(), sign, &top, n0, x, k),
        })
    }

    /// `κ^{sign} ρ = ⌟(ρ, η^{-τ}) + (-1)^k ⌟(η^{-τ}, ρ)` from `Λ^k_τ` to
    /// `Λ^{k-1}_τ`, with `η^+ = ω` and `η^- = θ` the biinvariant forms.
    /// On functions (`k = 0`) it is the map to the zero space.
    pub fn codifferential(&mut self, k: usize, tau: Sign, sign: Sign) -> Result<OpMatrix<RatFunc>> {
        if k == 0 {
            return Ok(OpMatrix::zero(0, 1));
        }
        let (calc, metric) = (self.calc, self.metric);
        let eta = calc.biinvariant(tau.flip());
        self.class_map(k, tau, k - 1, tau, |rho| {
            let a = contract(calc, metric, tau, sign, rho, k, &eta, 1)?;
            let b = contract(calc, metric, tau.flip(), sign, &eta, 1, rho, k)?;
            Ok(if k.is_multiple_of(2) { a.iter().zip(&b).map(|(x, y)| x.add(y)).collect() } else { a.iter().zip(&b).map(|(x, y)| x.sub(y)).collect() })
        })
    }
}

/// `Δ u^i_j = ⌟(η^+ u^i_j, η^-) + ⌟(η^- u^i_j, η^+) - 2 u^i_j ⌟(η^+, η^-)`
/// expanded with `η u^i_j = Σ_c u^i_c (η ◁ u^c_j)`, as a matrix on the
/// basis `u^i_j` (index `i * N + j`).
pub fn laplace_on_generators<F: Field>(calc: &Calculus<F>, metric: &MetricData<F>) -> OpMatrix<F> {
    let n = calc.n();
    let wp = calc.biinvariant(Sign::Plus);
    let wm = calc.biinvariant(Sign::Minus);
    let pair = |tau: Sign, a: &[F], b: &[F]| -> F {
        let g = metric.pairing(tau);
        g.entries().into_iter().fold(F::zero(), |acc, (r, c, v)| acc.add(&a[r].mul(&v).mul(&b[c])))
    };
    let base = pair(Sign::Plus, &wp, &wm);
    let two = F::from_i64(2);
    let mut x = vec![vec![F::zero(); n]; n];
    for (e, row) in x.iter_mut().enumerate() {
        for (d, slot) in row.iter_mut().enumerate() {
            let ap = calc.right_action_matrix(Sign::Plus, e, d).apply(&wp).expect("slot dimension");
            let am = calc.right_action_matrix(Sign::Minus, e, d).apply(&wm).expect("slot dimension");
            let mut v = pair(Sign::Plus, &ap, &wm).add(&pair(Sign::Minus, &am, &wp));
            if e == d {
                v = v.sub(&two.mul(&base));
            }
            *slot = v;
        }
    }
    OpMatrix::from_triplets(
        n * n,
        n * n,
        (0..n).flat_map(|i| (0..n).flat_map(move |c| (0..n).map(move |j| (i, c, j)))).map(|(i, c, j)| (i * n + c, i * n + j, x[c][j].clone())),
    )
}
