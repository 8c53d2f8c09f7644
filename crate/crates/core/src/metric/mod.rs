//! The σ-metric of the pair `(Γ+, Γ-)` built from diagonal morphisms
//! `F1, F2, G1, G2`, its verification suite, contractions, Hodge operators
//! and the codifferential on left-invariant forms.

mod contract;
mod forms;

use alloc::vec;
use alloc::vec::Vec;

pub use contract::{contract, contract_matrix, gtilde, gtilde_form};
pub use forms::{lambda_basis, laplace_on_generators, normalized_top_forms, FormCalculus, Side, TopForms};

use crate::bimodule::{Calculus, Sign};
use crate::linalg::{embed_two_slot, rank, OpMatrix};
use crate::report::Report;
use crate::scalar::{Field, QParams};

/// Diagonals of `F1, F2, G1, G2` and the two pairing matrices
/// `g'` on `Γ+ ⊗ Γ-` and `g''` on `Γ- ⊗ Γ+`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricData<F> {
    pub n: usize,
    pub f1: Vec<F>,
    pub f2: Vec<F>,
    pub g1: Vec<F>,
    pub g2: Vec<F>,
    pub g_plus_minus: OpMatrix<F>,
    pub g_minus_plus: OpMatrix<F>,
}

impl<F: Field> MetricData<F> {
    /// `F1 = z^{-1} q^{N-2i}`, `F2 = q^{2i}`, `G1 = z^{-1} q^N`, `G2 = 1`
    /// (`i` counted from one).
    pub fn new(p: &QParams<F>) -> Self {
        let n = p.n as i64;
        let f1 = (1..=n).map(|i| p.zinv.mul(&p.qpow(n - 2 * i))).collect();
        let f2 = (1..=n).map(|i| p.qpow(2 * i)).collect();
        let g1 = vec![p.zinv.mul(&p.qpow(n)); p.n];
        let g2 = vec![F::one(); p.n];
        Self::from_diagonals(f1, f2, g1, g2)
    }

    /// `g'(ω_ij ⊗ θ_kl) = F1^j_k F2^l_i` and
    /// `g''(θ_ij ⊗ ω_kl) = G1^j_k G2^l_i`.
    pub fn from_diagonals(f1: Vec<F>, f2: Vec<F>, g1: Vec<F>, g2: Vec<F>) -> Self {
        let n = f1.len();
        assert!(f2.len() == n && g1.len() == n && g2.len() == n, "diagonal lengths");
        let pairing = |a: &[F], b: &[F]| {
            OpMatrix::from_triplets(n * n, n * n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i * n + j, j * n + i, a[j].mul(&b[i]))))
        };
        let g_plus_minus = pairing(&f1, &f2);
        let g_minus_plus = pairing(&g1, &g2);
        MetricData { n, f1, f2, g1, g2, g_plus_minus, g_minus_plus }
    }

    /// The pairing of `Γ_τ ⊗ Γ_{-τ}`: entry `(a, b)` is `g(e_a ⊗ e_b)`.
    pub fn pairing(&self, tau: Sign) -> &OpMatrix<F> {
        match tau {
            Sign::Plus => &self.g_plus_minus,
            Sign::Minus => &self.g_minus_plus,
        }
    }

    /// The pairing of `Γ_τ ⊗ Γ_{-τ}` as a row vector on the two-slot space.
    pub fn pairing_row(&self, tau: Sign) -> OpMatrix<F> {
        let g = self.pairing(tau);
        let d = g.rows();
        OpMatrix::from_triplets(1, d * d, g.entries().into_iter().map(|(a, b, v)| (0, a * d + b, v)))
    }

    /// `g` applied to slots `pos, pos+1` of an `nslots`-fold tensor whose
    /// slot `pos` has type `tau`.
    pub fn pairing_on_slots(&self, tau: Sign, nslots: usize, pos: usize) -> OpMatrix<F> {
        let row = self.pairing_row(tau);
        let d = self.n * self.n;
        let left = OpMatrix::identity(d.pow(pos as u32));
        let right = OpMatrix::identity(d.pow((nslots - pos - 2) as u32));
        left.kron(&row).kron(&right)
    }
}

/// Decides every defining condition of a σ-metric on left-invariant parts:
/// invertibility, invariance under the right action on generators,
/// σ-symmetry, the exchange diagrams, and the scalar relations tying
/// `F1, F2, G1, G2` to the functionals `f` and `f̄`.
pub fn verify_metric<F: Field>(calc: &Calculus<F>, metric: &MetricData<F>) -> Report {
    use alloc::format;
    let n = calc.n();
    let d = n * n;
    let mut report = Report::new(n);
    let mut push = |name: alloc::string::String, anchor: &'static str, passed: bool| report.push(name, anchor, passed);

    for tau in Sign::BOTH {
        push(
            format!("nondegenerate[{tau}]"),
            "rank of the pairing of Γτ ⊗ Γ-τ equals N^2",
            metric.n == n && rank(metric.pairing(tau)) == d,
        );
    }

    for tau in Sign::BOTH {
        push(format!("bimodule[{tau}]"), "Σ_f g(ξ◁u^e_f ⊗ η◁u^f_d) = δ_ed g(ξ ⊗ η)", right_invariant(calc, metric, tau));
    }

    for tau in Sign::BOTH {
        for s in Sign::BOTH {
            let lhs = metric.pairing_row(tau.flip()).mul(calc.braiding(tau, tau.flip(), s));
            let ok = lhs.map(|m| m == metric.pairing_row(tau)).unwrap_or(false);
            push(format!("sigma-symmetry[{tau}{}, sigma{s}]", tau.flip()), "g ∘ σ^± = g", ok);
        }
    }

    for tau in Sign::BOTH {
        for tau2 in Sign::BOTH {
            for s in Sign::BOTH {
                let left = metric
                    .pairing_on_slots(tau, 3, 0)
                    .mul(&embed_two_slot(calc.braiding(tau2, tau.flip(), s), d, 3, 1));
                let right = metric
                    .pairing_on_slots(tau, 3, 1)
                    .mul(&embed_two_slot(calc.braiding(tau, tau2, s.flip()), d, 3, 0));
                let ok = matches!((left, right), (Ok(a), Ok(b)) if a == b);
                push(
                    format!("exchange[{tau}{tau2}{}, sigma{s}]", tau.flip()),
                    "g_12 σ^±_23 = g_23 σ^∓_12 on Γτ ⊗ Γτ' ⊗ Γ-τ",
                    ok,
                );
            }
        }
    }

    let (antipode_ok, morph_ok) = scalar_relations(calc, metric);
    push("f-antipode-ratio".into(), "f(S u^i_j) = c' f̄(u^i_j) with c' constant", antipode_ok);
    push("morphism-constants".into(), "F1 = c G2 f(u), F2 = c^{-1} f̄(u) G1 with c constant", morph_ok);
    report
}

/// `Σ_f M_τ(e,f)^T G M_{-τ}(f,d) = δ_ed G` for all generators `u^e_d`.
fn right_invariant<F: Field>(calc: &Calculus<F>, metric: &MetricData<F>, tau: Sign) -> bool {
    let n = calc.n();
    let g = metric.pairing(tau);
    let left: Vec<Vec<OpMatrix<F>>> = (0..n).map(|e| (0..n).map(|f| calc.right_action_matrix(tau, e, f).transpose()).collect()).collect();
    let right: Vec<Vec<OpMatrix<F>>> = (0..n).map(|f| (0..n).map(|d| calc.right_action_matrix(tau.flip(), f, d)).collect()).collect();
    for (e, left_e) in left.iter().enumerate() {
        for d in 0..n {
            let mut acc = OpMatrix::zero(g.rows(), g.cols());
            for (f, right_f) in right.iter().enumerate() {
                let Ok(term) = OpMatrix::product(&[&left_e[f], g, &right_f[d]]) else {
                    return false;
                };
                acc = acc.add(&term).expect("same shape");
            }
            let expected = if e == d { g.clone() } else { OpMatrix::zero(g.rows(), g.cols()) };
            if acc != expected {
                return false;
            }
        }
    }
    true
}

/// Returns whether `f(S u) = c' f̄(u)` holds for a single constant `c'`,
/// and whether `F1 = c G2 f(u)`, `F2 = c^{-1} f̄(u) G1` hold for a single
/// constant `c`.
fn scalar_relations<F: Field>(calc: &Calculus<F>, metric: &MetricData<F>) -> (bool, bool) {
    let n = calc.n();
    let t = calc.rform();
    let f = |i, j| t.f_u(i, j);
    let fbar = |i, j| t.fbar_u(i, j);
    let fs = |i, j| t.f_su(i, j);

    let ratio = common_ratio((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (fs(i, j), fbar(i, j))));

    let diag = |v: &[F], i: usize, j: usize| if i == j { v[i].clone() } else { F::zero() };
    let f1_pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
        let rhs = (0..n).fold(F::zero(), |acc, k| acc.add(&diag(&metric.g2, i, k).mul(&f(k, j))));
        (diag(&metric.f1, i, j), rhs)
    });
    let c = common_ratio(f1_pairs);
    let morph = c.is_some_and(|c| {
        let Some(cinv) = c.inv() else { return false };
        (0..n).all(|i| {
            (0..n).all(|j| {
                let rhs = (0..n).fold(F::zero(), |acc, k| acc.add(&fbar(i, k).mul(&diag(&metric.g1, k, j))));
                diag(&metric.f2, i, j) == cinv.mul(&rhs)
            })
        })
    });
    (ratio.is_some(), morph)
}

/// The constant `c` with `a = c b` for every pair, if one exists and is
/// nonzero.
fn common_ratio<F: Field>(pairs: impl IntoIterator<Item = (F, F)>) -> Option<F> {
    let pairs: Vec<(F, F)> = pairs.into_iter().collect();
    let (a0, b0) = pairs.iter().find(|(_, b)| !b.is_zero())?;
    let c = a0.mul(&b0.inv()?);
    if c.is_zero() {
        return None;
    }
    pairs.iter().all(|(a, b)| *a == c.mul(b)).then_some(c)
}
