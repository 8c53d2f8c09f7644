//! Woronowicz antisymmetrizers as signed sums of braid words, the
//! dimensions of left-invariant k-forms, and the top form.
//!
//! A braid word sum is field independent; it only becomes a matrix once a
//! [`Calculus`] supplies the braidings. `A^±` uses `σ^±` throughout, with
//! `σ^-` meaning `σ^{-1}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bimodule::{BraidWord, Calculus, Sign, SpaceSignature};
use crate::error::{Error, Result};
use crate::linalg::{rank, rank_exact, ColumnSpace, OpMatrix};
use crate::scalar::{Field, Fp, QParams, RatFunc, ResidueSampler};

/// `Σ ± word`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSum(pub Vec<(bool, BraidWord)>);

impl WordSum {
    pub fn identity() -> Self {
        WordSum(vec![(false, BraidWord::identity())])
    }

    pub fn shifted(&self, offset: usize) -> Self {
        WordSum(self.0.iter().map(|(neg, w)| (*neg, w.shifted(offset))).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.len() == 1 && !self.0[0].0 && self.0[0].1.is_identity()
    }

    fn apply<F: Field>(&self, calc: &Calculus<F>, sign: Sign, types: &mut Vec<Sign>, v: &[F]) -> Result<Vec<F>> {
        if self.is_identity() {
            return Ok(v.to_vec());
        }
        let mut out = vec![F::zero(); v.len()];
        let mut out_types: Option<Vec<Sign>> = None;
        for (neg, word) in &self.0 {
            let mut t = types.clone();
            let w = calc.apply_word(word, sign, &mut t, v)?;
            match &out_types {
                None => out_types = Some(t),
                Some(prev) if *prev != t => return Err(Error::TypeMismatch),
                _ => {}
            }
            for (o, x) in out.iter_mut().zip(&w) {
                if !x.is_zero() {
                    *o = if *neg { o.sub(x) } else { o.add(x) };
                }
            }
        }
        if let Some(t) = out_types {
            *types = t;
        }
        Ok(out)
    }
}

/// A product of word sums written left to right; the rightmost acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordProduct(pub Vec<WordSum>);

impl WordProduct {
    pub fn identity() -> Self {
        WordProduct(Vec::new())
    }

    pub fn single(s: WordSum) -> Self {
        WordProduct(vec![s])
    }

    /// `self · other`.
    pub fn then(&self, other: &WordProduct) -> WordProduct {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        WordProduct(v)
    }

    pub fn shifted(&self, offset: usize) -> WordProduct {
        WordProduct(self.0.iter().map(|s| s.shifted(offset)).collect())
    }

    /// `self ⊗ other`, where `self` acts on the first `slots` slots.
    pub fn tensor(&self, slots: usize, other: &WordProduct) -> WordProduct {
        self.then(&other.shifted(slots))
    }

    pub fn apply<F: Field>(&self, calc: &Calculus<F>, sign: Sign, types: &mut Vec<Sign>, v: &[F]) -> Result<Vec<F>> {
        let mut cur = v.to_vec();
        for factor in self.0.iter().rev() {
            cur = factor.apply(calc, sign, types, &cur)?;
            if cur.iter().all(F::is_zero) {
                break;
            }
        }
        Ok(cur)
    }

    /// The operator on `signature`, one column per basis vector.
    pub fn matrix<F: Field>(&self, calc: &Calculus<F>, signature: &SpaceSignature, sign: Sign) -> Result<OpMatrix<F>> {
        let dim = signature.dim();
        let mut e = vec![F::zero(); dim];
        let mut cols = Vec::with_capacity(dim);
        for c in 0..dim {
            e[c] = F::one();
            cols.push(self.apply(calc, sign, &mut signature.signs.clone(), &e)?);
            e[c] = F::zero();
        }
        Ok(OpMatrix::from_dense_columns(dim, dim, |c| core::mem::take(&mut cols[c])))
    }
}

/// Increasing sequences `s_1 < … < s_i` in `1..=total`.
fn subsets(i: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, left: usize, total: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..=total + 1 - left {
            cur.push(s);
            rec(s + 1, left - 1, total, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, i, total, &mut Vec::new(), &mut out);
    out
}

fn shuffle_sign(s: &[usize]) -> bool {
    s.iter().enumerate().map(|(m, &x)| x - (m + 1)).sum::<usize>() % 2 == 1
}

/// `A_{i,j} = Σ_S (-1)^{Σ(s_m - m)} σ_{←1..s_1} ⋯ σ_{←i..s_i}`.
pub fn a_ij(i: usize, j: usize) -> WordSum {
    let terms = subsets(i, i + j)
        .into_iter()
        .map(|s| {
            let word = s.iter().enumerate().fold(BraidWord::identity(), |w, (m, &sm)| {
                w.then(&BraidWord::lto(m + 1, sm).expect("s_m >= m"))
            });
            (shuffle_sign(&s), word)
        })
        .collect();
    WordSum(terms)
}

/// `B_{i,j} = Σ_S (-1)^{Σ(s_m - m)} σ_{→i..s_i} ⋯ σ_{→1..s_1}`.
pub fn b_ij(i: usize, j: usize) -> WordSum {
    let terms = subsets(i, i + j)
        .into_iter()
        .map(|s| {
            let word = s.iter().enumerate().rev().fold(BraidWord::identity(), |w, (m, &sm)| {
                w.then(&BraidWord::rto(m + 1, sm).expect("s_m >= m"))
            });
            (shuffle_sign(&s), word)
        })
        .collect();
    WordSum(terms)
}

/// `A_k = Π_{t=0}^{k-1} (A_{k-t-1,1} ⊗ id^{⊗t})`, the construction path.
pub fn antisymmetrizer_word(k: usize) -> WordProduct {
    WordProduct((0..k).map(|t| a_ij(k - t - 1, 1)).filter(|s| !s.is_identity()).collect())
}

/// `A_k = Π_{t=0}^{k-1} (id^{⊗t} ⊗ A_{1,k-t-1})`.
pub fn antisymmetrizer_word_right(k: usize) -> WordProduct {
    WordProduct((0..k).map(|t| a_ij(1, k - t - 1).shifted(t)).filter(|s| !s.is_identity()).collect())
}

/// `A_k = Π_{t=0}^{k-1} (B_{t,1} ⊗ id^{⊗(k-t-1)})`.
pub fn antisymmetrizer_word_via_b(k: usize) -> WordProduct {
    WordProduct((0..k).map(|t| b_ij(t, 1)).filter(|s| !s.is_identity()).collect())
}

/// The antisymmetrizer `A^{sign}_k` on `(Γ_τ)^{⊗k}`.
#[derive(Clone, Debug)]
pub struct Antisymmetrizer<F> {
    pub k: usize,
    pub tau: Sign,
    pub sign: Sign,
    pub matrix: OpMatrix<F>,
}

pub fn antisymmetrizer<F: Field>(calc: &Calculus<F>, k: usize, tau: Sign, sign: Sign) -> Result<Antisymmetrizer<F>> {
    let sig = SpaceSignature::homogeneous(calc.n(), tau, k);
    let matrix = antisymmetrizer_word(k).matrix(calc, &sig, sign)?;
    Ok(Antisymmetrizer { k, tau, sign, matrix })
}

/// How ranks of antisymmetrizers are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Elimination over `Q(z)`.
    Exact,
    /// Two specialisations of `z` to random residues modulo `2^61 - 1`.
    Probabilistic { seed: u64 },
    /// Exact up to [`EXACT_DIM_LIMIT`] coordinates, probabilistic beyond.
    Auto { seed: u64 },
}

/// Largest space on which [`RankMode::Auto`] still eliminates exactly.
pub const EXACT_DIM_LIMIT: usize = 64;

/// The calculus at a random residue of `z`.
pub fn residue_calculus(n: usize, sampler: &mut ResidueSampler) -> Calculus<Fp> {
    loop {
        if let Some(p) = QParams::from_z(n, sampler.next_nonzero()) {
            return Calculus::new(p);
        }
    }
}

/// Rank of `A^{sign}_k` over random residues: two trials, maximum taken.
pub fn rank_probabilistic_antisymmetrizer(n: usize, k: usize, tau: Sign, sign: Sign, seed: u64) -> Result<usize> {
    let mut sampler = ResidueSampler::new(seed);
    let mut best = 0;
    for _ in 0..2 {
        let calc = residue_calculus(n, &mut sampler);
        let a = antisymmetrizer(&calc, k, tau, sign)?;
        best = best.max(rank(&a.matrix));
    }
    Ok(best)
}

/// `dim Λ^k = rank A_k` for `k = 0..=max_k`; entries whose space exceeds
/// `max_dim` coordinates are `None`.
pub fn lambda_dims(n: usize, tau: Sign, max_k: usize, mode: RankMode, max_dim: usize) -> Result<Vec<Option<usize>>> {
    let mut exact_calc: Option<Calculus<RatFunc>> = None;
    let mut out = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let dim = (n * n).checked_pow(k as u32).filter(|&d| d <= max_dim);
        let Some(dim) = dim else {
            out.push(None);
            continue;
        };
        let exact = match mode {
            RankMode::Exact => true,
            RankMode::Probabilistic { .. } => false,
            RankMode::Auto { .. } => dim <= EXACT_DIM_LIMIT,
        };
        let r = if exact {
            let calc = exact_calc.get_or_insert_with(|| Calculus::new(QParams::symbolic(n)));
            rank_exact(&antisymmetrizer(calc, k, tau, Sign::Plus)?.matrix)
        } else {
            let seed = match mode {
                RankMode::Probabilistic { seed } | RankMode::Auto { seed } => seed,
                RankMode::Exact => unreachable!(),
            };
            rank_probabilistic_antisymmetrizer(n, k, tau, Sign::Plus, seed.wrapping_add(k as u64))?
        };
        out.push(Some(r));
    }
    Ok(out)
}

/// Whether `ker A^+_k = ker A^-_k`, decided exactly: both kernels agree iff
/// the stacked matrix has the rank of each block.
pub fn kernel_equality_check(calc: &Calculus<RatFunc>, k: usize, tau: Sign) -> Result<bool> {
    let plus = antisymmetrizer(calc, k, tau, Sign::Plus)?.matrix;
    let minus = antisymmetrizer(calc, k, tau, Sign::Minus)?.matrix;
    let rp = rank_exact(&plus);
    let rm = rank_exact(&minus);
    let stacked = OpMatrix::from_dense_columns(plus.rows() + minus.rows(), plus.cols(), |c| {
        let mut v = plus.dense_column(c);
        v.extend(minus.dense_column(c));
        v
    });
    let rs = rank_exact(&stacked);
    Ok(rp == rm && rs == rp)
}

/// Left-invariant k-forms `Λ^k_τ = T^k / ker A_k` with concrete
/// coordinates: the classes of the basis vectors `e_j`, `j` in `columns`,
/// form a basis, and a tensor `t` has the coordinates of `A^+_k t` in the
/// span of `A^+_k e_j`.
#[derive(Clone, Debug)]
pub struct ExteriorPower<F> {
    pub k: usize,
    pub tau: Sign,
    columns: Vec<usize>,
    images: ColumnSpace<F>,
    word: WordProduct,
}

impl<F: Field> ExteriorPower<F> {
    /// Scans basis vectors in order; stops early once `target` classes are
    /// found. Only the listed `candidates` are tried when given.
    pub fn build(calc: &Calculus<F>, k: usize, tau: Sign, candidates: Option<&[usize]>, target: Option<usize>) -> Result<Self> {
        let sig = SpaceSignature::homogeneous(calc.n(), tau, k);
        let dim = sig.dim();
        let word = antisymmetrizer_word(k);
        let mut images = ColumnSpace::new(dim);
        let mut columns = Vec::new();
        let all: Vec<usize>;
        let candidates = match candidates {
            Some(c) => c,
            None => {
                all = (0..dim).collect();
                &all
            }
        };
        let mut e = vec![F::zero(); dim];
        for &j in candidates {
            if target.is_some_and(|t| columns.len() >= t) {
                break;
            }
            e[j] = F::one();
            let img = word.apply(calc, Sign::Plus, &mut sig.signs.clone(), &e)?;
            e[j] = F::zero();
            if images.insert(&img) {
                columns.push(j);
            }
        }
        Ok(ExteriorPower { k, tau, columns, images, word })
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// Basis vectors `e_j` whose classes form the basis.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn tensor_dim(&self) -> usize {
        self.images.dim()
    }

    /// Coordinates of the class of `t`.
    pub fn coords(&self, calc: &Calculus<F>, t: &[F]) -> Result<Vec<F>> {
        if t.len() != self.tensor_dim() {
            return Err(Error::DimensionMismatch { expected: self.tensor_dim(), found: t.len() });
        }
        let mut types = vec![self.tau; self.k];
        let img = self.word.apply(calc, Sign::Plus, &mut types, t)?;
        self.images
            .coordinates(&img)
            .ok_or_else(|| Error::Structural(format!("image of a degree-{} tensor outside the scanned classes", self.k)))
    }

    /// The representative `Σ c_i e_{j_i}` of a class.
    pub fn representative(&self, c: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.tensor_dim()];
        for (x, &j) in c.iter().zip(&self.columns) {
            v[j] = x.clone();
        }
        v
    }
}

/// Basis vectors whose `A_k`-images are independent at a random residue of
/// `z`. Independence there implies independence over `Q(z)`.
pub fn residue_pivot_columns(n: usize, k: usize, tau: Sign, seed: u64) -> Result<Vec<usize>> {
    let mut sampler = ResidueSampler::new(seed);
    let calc = residue_calculus(n, &mut sampler);
    Ok(ExteriorPower::build(&calc, k, tau, None, None)?.columns)
}

/// The top degree `n0` with its spanning vector `ω_0 = A_{n0} e_j`.
#[derive(Clone, Debug)]
pub struct TopForm {
    pub n0: usize,
    pub tau: Sign,
    pub column: usize,
    pub vector: Vec<RatFunc>,
}

/// Finds `n0` by scanning `k = 1, 2, …` for `rank A_k = 1` (over a random
/// residue), confirms `rank A_{n0+1} = 0`, then builds the spanning vector
/// exactly. Fails with a resource error if a scanned space exceeds
/// `max_dim` coordinates, and with a structural error if the ranks do not
/// behave as a top degree requires.
pub fn top_form(calc: &Calculus<RatFunc>, tau: Sign, seed: u64, max_dim: usize) -> Result<TopForm> {
    let n = calc.n();
    let d = n * n;
    let mut k = 1;
    loop {
        let dim = d.checked_pow(k as u32 + 1).unwrap_or(usize::MAX);
        if dim > max_dim {
            return Err(Error::ResourceBound { dim, limit: max_dim });
        }
        let r = rank_probabilistic_antisymmetrizer(n, k, tau, Sign::Plus, seed)?;
        if r == 0 {
            return Err(Error::Structural(format!("rank A_{k} = 0 before a one-dimensional degree")));
        }
        if r == 1 {
            break;
        }
        k += 1;
    }
    let next = rank_probabilistic_antisymmetrizer(n, k + 1, tau, Sign::Plus, seed)?;
    if next != 0 {
        return Err(Error::Structural(format!("rank A_{} = {next} after rank A_{k} = 1", k + 1)));
    }
    let pivots = residue_pivot_columns(n, k, tau, seed)?;
    let column = *pivots.first().ok_or_else(|| Error::Structural("no top-degree class".into()))?;
    let sig = SpaceSignature::homogeneous(n, tau, k);
    let mut e = vec![RatFunc::zero(); sig.dim()];
    e[column] = RatFunc::one();
    let vector = antisymmetrizer_word(k).apply(calc, Sign::Plus, &mut sig.signs.clone(), &e)?;
    if vector.iter().all(RatFunc::is_zero) {
        return Err(Error::Structural("top form vanishes".into()));
    }
    Ok(TopForm { n0: k, tau, column, vector })
}

/// Whether `σ^{sign}_(n0) ω_0 = (-1)^{n0(n0-1)/2} ω_0` holds in `Λ^{n0}`.
pub fn top_form_sigma_eigenvalue_holds(calc: &Calculus<RatFunc>, top: &TopForm, sign: Sign) -> Result<bool> {
    let lam = ExteriorPower::build(calc, top.n0, top.tau, Some(&[top.column]), Some(1))?;
    let mut types = vec![top.tau; top.n0];
    let moved = calc.apply_word(&BraidWord::full(top.n0), sign, &mut types, &top.vector)?;
    let a = lam.coords(calc, &moved)?;
    let b = lam.coords(calc, &top.vector)?;
    let sgn = if (top.n0 * (top.n0.saturating_sub(1)) / 2).is_multiple_of(2) { RatFunc::one() } else { RatFunc::from_int(-1) };
    Ok(a.len() == 1 && a[0] == b[0].mul(&sgn))
}
