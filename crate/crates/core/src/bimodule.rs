//! The bicovariant bimodules `Γ+` (basis `ω_ij`) and `Γ-` (basis `θ_ij`):
//! right actions, biinvariant forms and the braidings between them.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{apply_two_slot, embed_two_slot, Accumulator, OpMatrix};
use crate::report::Report;
use crate::rmatrix::{rhat, Gen, RFormTable};
use crate::scalar::{Field, QParams};

/// A sign: selects a calculus (`Γ+`/`Γ-`) or a braiding (`σ`/`σ^{-1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn idx(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The tensor product `Γ_{τ1} ⊗ … ⊗ Γ_{τk}` at the left-invariant level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceSignature {
    pub n: usize,
    pub signs: Vec<Sign>,
}

impl SpaceSignature {
    pub fn new(n: usize, signs: Vec<Sign>) -> Self {
        SpaceSignature { n, signs }
    }

    /// `k` copies of `Γ_τ`.
    pub fn homogeneous(n: usize, tau: Sign, k: usize) -> Self {
        SpaceSignature { n, signs: vec![tau; k] }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// `(N^2)^k`.
    pub fn dim(&self) -> usize {
        (self.n * self.n).pow(self.signs.len() as u32)
    }
}

/// A braid word written left to right as in `σ_{12} σ_{23}`: the rightmost
/// letter acts first. Letter `p` is the transposition of slots `p, p+1`
/// (0-based).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BraidWord(pub Vec<usize>);

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord(Vec::new())
    }

    /// `σ_{j,j+1} σ_{j+1,j+2} … σ_{k-1,k}` (1-based slots, `j ≤ k`).
    pub fn rto(j: usize, k: usize) -> Result<Self> {
        check_range(j, k)?;
        Ok(BraidWord((j..k).map(|p| p - 1).collect()))
    }

    /// `σ_{k-1,k} … σ_{j+1,j+2} σ_{j,j+1}` (1-based slots, `j ≤ k`).
    pub fn lto(j: usize, k: usize) -> Result<Self> {
        check_range(j, k)?;
        Ok(BraidWord((j..k).rev().map(|p| p - 1).collect()))
    }

    /// `σ_(m)`, the braid lift of the order-reversing permutation, built by
    /// `σ_(k) = σ_{→1..k} (σ_(k-1) ⊗ id)`.
    pub fn full(m: usize) -> Self {
        let mut w = BraidWord::identity();
        for k in (2..=m).rev() {
            w = w.then(&BraidWord::rto(1, k).expect("valid range"));
        }
        w
    }

    /// `σ_(j,k) = σ_{→k..j+k} … σ_{→1..j+1}`: moves the first `j` slots
    /// past the following `k`.
    pub fn block(j: usize, k: usize) -> Self {
        if j == 0 {
            return BraidWord::identity();
        }
        let mut w = BraidWord::identity();
        for t in (1..=k).rev() {
            w = w.then(&BraidWord::rto(t, j + t).expect("valid range"));
        }
        w
    }

    /// Word concatenation `self · other` (so `other` acts first).
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    /// Shifts every letter by `offset` slots.
    pub fn shifted(&self, offset: usize) -> BraidWord {
        BraidWord(self.0.iter().map(|p| p + offset).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest slot touched, plus one (0 for the empty word).
    pub fn span(&self) -> usize {
        self.0.iter().map(|p| p + 2).max().unwrap_or(0)
    }
}

fn check_range(j: usize, k: usize) -> Result<()> {
    if j == 0 || j > k {
        return Err(Error::MalformedWord(alloc::format!("slot range {j}..{k}")));
    }
    Ok(())
}

/// Named braid words accepted by [`Calculus::sigma_word`]; slots 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordKind {
    Rto(usize, usize),
    Lto(usize, usize),
    Full(usize),
    Block(usize, usize),
}

impl WordKind {
    pub fn word(self) -> Result<BraidWord> {
        match self {
            WordKind::Rto(j, k) => BraidWord::rto(j, k),
            WordKind::Lto(j, k) => BraidWord::lto(j, k),
            WordKind::Full(m) => Ok(BraidWord::full(m)),
            WordKind::Block(j, k) => Ok(BraidWord::block(j, k)),
        }
    }
}

// Index variables of the braiding formulas. Input basis (i,j)⊗(k,l),
// output basis (m,n)⊗(r,s), internal summation indices t, y, x, w.
#[derive(Clone, Copy)]
enum V {
    I,
    J,
    K,
    L,
    M,
    N,
    R,
    S,
    T,
    Y,
    X,
    W,
}

type GenSpec = (u8, V, V);
type FactorSpec = (GenSpec, GenSpec);

// Every braiding is Σ_{t,y,x,w} r1 r2 r3 r4 with the factors depending on
// (r,t,y,n), (t,i,m,x), (l,y,w,s), (x,k,j,w) respectively.
const FACTOR_VARS: [[V; 4]; 4] = [[V::R, V::T, V::Y, V::N], [V::T, V::I, V::M, V::X], [V::L, V::Y, V::W, V::S], [V::X, V::K, V::J, V::W]];

const fn u(up: V, lo: V) -> GenSpec {
    (0, up, lo)
}
const fn s(up: V, lo: V) -> GenSpec {
    (1, up, lo)
}
const fn s2(up: V, lo: V) -> GenSpec {
    (2, up, lo)
}

/// Factors of σ and σ^{-1} indexed by (sign, left type, right type).
fn braiding_factors(left: Sign, right: Sign, sign: Sign) -> [FactorSpec; 4] {
    use Sign::{Minus as Mi, Plus as Pl};
    use V::*;
    match (sign, left, right) {
        (Pl, Pl, Pl) => [(u(R, T), s(Y, N)), (u(T, I), u(M, X)), (s(L, Y), u(W, S)), (u(X, K), u(J, W))],
        (Pl, Pl, Mi) => [(u(R, T), s(Y, N)), (u(T, I), s2(M, X)), (s(L, Y), u(W, S)), (s2(X, K), u(J, W))],
        (Pl, Mi, Pl) => [(u(Y, N), u(R, T)), (u(M, X), s(T, I)), (u(W, S), u(L, Y)), (s(J, W), u(X, K))],
        (Pl, Mi, Mi) => [(u(Y, N), u(R, T)), (s(M, X), u(T, I)), (u(W, S), u(L, Y)), (u(J, W), s(X, K))],
        (Mi, Pl, Pl) => [(u(R, T), s(Y, N)), (s(M, X), u(T, I)), (u(W, S), u(L, Y)), (u(X, K), u(J, W))],
        (Mi, Pl, Mi) => [(s2(Y, N), u(R, T)), (u(T, I), s2(M, X)), (s(L, Y), u(W, S)), (u(J, W), s(X, K))],
        (Mi, Mi, Pl) => [(s(R, T), u(Y, N)), (u(M, X), s(T, I)), (u(W, S), u(L, Y)), (u(X, K), u(J, W))],
        (Mi, Mi, Mi) => [(u(Y, N), u(R, T)), (u(T, I), u(M, X)), (s(L, Y), u(W, S)), (u(J, W), s(X, K))],
    }
}

/// Dense table of one factor over its four variables, in `FACTOR_VARS` order.
fn factor_table<F: Field>(table: &RFormTable<F>, vars: [V; 4], spec: FactorSpec) -> Vec<F> {
    let n = table.n();
    let mut out = Vec::with_capacity(n.pow(4));
    let mut val = [0usize; 12];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for (v, x) in vars.iter().zip([a, b, c, d]) {
                        val[*v as usize] = x;
                    }
                    let g = |(p, up, lo): GenSpec| Gen { antipode: p, upper: val[up as usize], lower: val[lo as usize] };
                    out.push(table.eval(g(spec.0), g(spec.1)));
                }
            }
        }
    }
    out
}

fn build_braiding<F: Field>(table: &RFormTable<F>, left: Sign, right: Sign, sign: Sign) -> OpMatrix<F> {
    let n = table.n();
    let d = n * n;
    let specs = braiding_factors(left, right, sign);
    let t: Vec<Vec<F>> = (0..4).map(|f| factor_table(table, FACTOR_VARS[f], specs[f])).collect();
    let at = |f: usize, a: usize, b: usize, c: usize, e: usize| &t[f][((a * n + b) * n + c) * n + e];

    // Nonzero patterns, keyed by the variables fixed at each loop depth.
    let mut nz2: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n]; // i -> (t, m, x)
    let mut nz4: Vec<Vec<usize>> = vec![Vec::new(); n * n * n]; // (x, k, j) -> w
    let mut nz3: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n * n]; // (l, w) -> (y, s)
    let mut nz1: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n * n]; // (t, y) -> (r, n)
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    if !at(1, a, b, c, e).is_zero() {
                        nz2[b].push((a, c, e));
                    }
                    if !at(3, a, b, c, e).is_zero() {
                        nz4[(a * n + b) * n + c].push(e);
                    }
                    if !at(2, a, b, c, e).is_zero() {
                        nz3[a * n + c].push((b, e));
                    }
                    if !at(0, a, b, c, e).is_zero() {
                        nz1[b * n + c].push((a, e));
                    }
                }
            }
        }
    }

    let mut acc = Accumulator::new(d * d);
    let mut cols = Vec::with_capacity(d * d);
    for (i, nz2_i) in nz2.iter().enumerate() {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for &(tt, m, x) in nz2_i {
                        let f2 = at(1, tt, i, m, x);
                        for &w in &nz4[(x * n + k) * n + j] {
                            let f24 = f2.mul(at(3, x, k, j, w));
                            for &(y, ss) in &nz3[l * n + w] {
                                let f243 = f24.mul(at(2, l, y, w, ss));
                                for &(r, nn) in &nz1[tt * n + y] {
                                    let v = f243.mul(at(0, r, tt, y, nn));
                                    acc.add((m * n + nn) * d + r * n + ss, v);
                                }
                            }
                        }
                    }
                    cols.push(acc.drain());
                }
            }
        }
    }
    OpMatrix::from_sorted_columns(d * d, cols)
}

/// The pair of calculi `Γ±` over a fixed field, with all eight braidings
/// built once.
#[derive(Clone, Debug)]
pub struct Calculus<F> {
    table: RFormTable<F>,
    braidings: [[[OpMatrix<F>; 2]; 2]; 2],
}

impl<F: Field> Calculus<F> {
    pub fn new(params: QParams<F>) -> Self {
        let table = RFormTable::new(params);
        let b = |l: Sign, r: Sign| [build_braiding(&table, l, r, Sign::Plus), build_braiding(&table, l, r, Sign::Minus)];
        let braidings = [
            [b(Sign::Plus, Sign::Plus), b(Sign::Plus, Sign::Minus)],
            [b(Sign::Minus, Sign::Plus), b(Sign::Minus, Sign::Minus)],
        ];
        Calculus { table, braidings }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    /// Dimension `N^2` of one slot.
    pub fn slot_dim(&self) -> usize {
        self.n() * self.n()
    }

    pub fn params(&self) -> &QParams<F> {
        self.table.params()
    }

    pub fn rform(&self) -> &RFormTable<F> {
        &self.table
    }

    /// `σ^{sign}` on `Γ_left ⊗ Γ_right`, landing in `Γ_right ⊗ Γ_left`.
    /// `braiding(l, r, -)` is the inverse of `braiding(r, l, +)`.
    pub fn braiding(&self, left: Sign, right: Sign, sign: Sign) -> &OpMatrix<F> {
        &self.braidings[left.idx()][right.idx()][sign.idx()]
    }

    /// Coefficients of the biinvariant form: `ω = Σ ω_ii` and
    /// `θ = Σ f(S u^i_j) θ_ij`.
    pub fn biinvariant(&self, tau: Sign) -> Vec<F> {
        let n = self.n();
        let mut v = vec![F::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                v[i * n + j] = match tau {
                    Sign::Plus if i == j => F::one(),
                    Sign::Plus => F::zero(),
                    Sign::Minus => self.table.f_su(i, j),
                };
            }
        }
        v
    }

    /// Matrix of `ξ ↦ ξ ◁ u^e_d` on left-invariant 1-forms of type `tau`:
    /// `ω_ij ◁ u^e_d = Σ_f r(u^k_i, u^e_f) r(u^f_d, u^j_l) ω_kl` and
    /// `θ_ij ◁ u^e_d = Σ_f r(u^e_f, S u^k_i) r(S u^j_l, u^f_d) θ_kl`.
    pub fn right_action_matrix(&self, tau: Sign, e: usize, d: usize) -> OpMatrix<F> {
        let n = self.n();
        let t = &self.table;
        OpMatrix::from_dense_columns(n * n, n * n, |col| {
            let (i, j) = (col / n, col % n);
            let mut v = vec![F::zero(); n * n];
            for k in 0..n {
                for l in 0..n {
                    let mut acc = F::zero();
                    for f in 0..n {
                        let term = match tau {
                            Sign::Plus => t.eval(Gen::u(k, i), Gen::u(e, f)).mul(&t.eval(Gen::u(f, d), Gen::u(j, l))),
                            Sign::Minus => t.eval(Gen::u(e, f), Gen::s(k, i)).mul(&t.eval(Gen::s(j, l), Gen::u(f, d))),
                        };
                        acc = acc.add(&term);
                    }
                    v[k * n + l] = acc;
                }
            }
            v
        })
    }

    /// Expansion of `ξ_p · u^a_b = Σ_c u^a_c (ξ_p ◁ u^c_b)` for every basis
    /// form `ξ_p`: entry `p` lists `(c, q, coeff)` meaning `coeff · u^a_c ξ_q`.
    pub fn right_action(&self, tau: Sign, a: usize, b: usize) -> Result<Vec<Vec<(usize, usize, F)>>> {
        let n = self.n();
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), bound: n });
        }
        let mats: Vec<OpMatrix<F>> = (0..n).map(|c| self.right_action_matrix(tau, c, b)).collect();
        Ok((0..n * n)
            .map(|p| {
                mats.iter()
                    .enumerate()
                    .flat_map(|(c, m)| m.column(p).iter().map(move |(q, v)| (c, *q, v.clone())))
                    .collect()
            })
            .collect())
    }

    /// Applies `σ^{sign}` to slots `pos, pos+1`, updating the slot types.
    pub fn apply_sigma(&self, pos: usize, sign: Sign, types: &mut [Sign], v: &[F]) -> Result<Vec<F>> {
        if pos + 1 >= types.len() {
            return Err(Error::MalformedWord(alloc::format!("transposition {} on {} slots", pos + 1, types.len())));
        }
        let m = self.braiding(types[pos], types[pos + 1], sign);
        let out = apply_two_slot(m, self.slot_dim(), types.len(), pos, v);
        types.swap(pos, pos + 1);
        Ok(out)
    }

    /// Applies a word of `σ^{sign}` letters to a vector on `types`.
    pub fn apply_word(&self, word: &BraidWord, sign: Sign, types: &mut [Sign], v: &[F]) -> Result<Vec<F>> {
        let mut cur = v.to_vec();
        for &p in word.0.iter().rev() {
            cur = self.apply_sigma(p, sign, types, &cur)?;
        }
        Ok(cur)
    }

    /// Materializes a word acting on `signature`.
    pub fn word_matrix(&self, word: &BraidWord, signature: &SpaceSignature, sign: Sign) -> Result<OpMatrix<F>> {
        if signature.n != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: signature.n });
        }
        if word.span() > signature.len() {
            return Err(Error::MalformedWord(alloc::format!("word reaches slot {} of {}", word.span(), signature.len())));
        }
        let dim = signature.dim();
        let mut e = vec![F::zero(); dim];
        let mut cols = Vec::with_capacity(dim);
        for c in 0..dim {
            e[c] = F::one();
            let mut types = signature.signs.clone();
            cols.push(self.apply_word(word, sign, &mut types, &e)?);
            e[c] = F::zero();
        }
        Ok(OpMatrix::from_dense_columns(dim, dim, |c| core::mem::take(&mut cols[c])))
    }

    /// `σ_{→j..k}`, `σ_{←j..k}`, `σ_(m)` or `σ_(j,k)` on `signature`.
    pub fn sigma_word(&self, kind: WordKind, signature: &SpaceSignature, sign: Sign) -> Result<OpMatrix<F>> {
        let word = kind.word()?;
        if let WordKind::Full(m) | WordKind::Block(m, _) = kind {
            let need = match kind {
                WordKind::Block(j, k) => j + k,
                _ => m,
            };
            if need > signature.len() {
                return Err(Error::MalformedWord(need.to_string()));
            }
        }
        self.word_matrix(&word, signature, sign)
    }
}

/// The braid and Hecke identities: the Hecke relation and braid relation
/// of `R̂`, `σ^+` and `σ^-` inverting each other on all four pairings, and
/// the braid relation on every triple of slot types.
pub fn verify_braidings<F: Field>(calc: &Calculus<F>) -> Report {
    let p = calc.params();
    let n = calc.n();
    let mut report = Report::new(n);

    let r = rhat(p, Sign::Plus);
    let id = OpMatrix::identity(n * n);
    let hecke = r.sub(&id.scale(&p.q)).and_then(|a| a.mul(&r.add(&id.scale(&p.qinv))?));
    report.push("hecke", "(R̂ - q)(R̂ + q^{-1}) = 0", hecke.is_ok_and(|m| m.is_zero()));
    let r12 = embed_two_slot(&r, n, 3, 0);
    let r23 = embed_two_slot(&r, n, 3, 1);
    let ybe = matches!((OpMatrix::product(&[&r12, &r23, &r12]), OpMatrix::product(&[&r23, &r12, &r23])), (Ok(a), Ok(b)) if a == b);
    report.push("rhat-braid", "R̂_12 R̂_23 R̂_12 = R̂_23 R̂_12 R̂_23", ybe);

    for l in Sign::BOTH {
        for rt in Sign::BOTH {
            let fwd = calc.braiding(l, rt, Sign::Plus);
            let back = calc.braiding(rt, l, Sign::Minus);
            let ok = back.mul(fwd).is_ok_and(|m| m.is_identity()) && fwd.mul(back).is_ok_and(|m| m.is_identity());
            report.push(alloc::format!("inverse[{l}{rt}]"), "σ^- σ^+ = id = σ^+ σ^-", ok);
        }
    }

    let left = BraidWord(vec![0, 1, 0]);
    let right = BraidWord(vec![1, 0, 1]);
    for a in Sign::BOTH {
        for b in Sign::BOTH {
            for c in Sign::BOTH {
                let sig = SpaceSignature::new(n, vec![a, b, c]);
                let ok = matches!(
                    (calc.word_matrix(&left, &sig, Sign::Plus), calc.word_matrix(&right, &sig, Sign::Plus)),
                    (Ok(x), Ok(y)) if x == y
                );
                report.push(alloc::format!("braid[{a}{b}{c}]"), "σ_12 σ_23 σ_12 = σ_23 σ_12 σ_23", ok);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;

    #[test]
    fn words() {
        assert_eq!(BraidWord::rto(1, 3).unwrap().0, vec![0, 1]);
        assert_eq!(BraidWord::lto(1, 3).unwrap().0, vec![1, 0]);
        assert_eq!(BraidWord::full(3).0, vec![0, 1, 0]);
        assert!(BraidWord::full(1).is_identity());
        assert!(BraidWord::block(0, 2).is_identity());
        assert!(BraidWord::block(2, 0).is_identity());
        assert_eq!(BraidWord::block(1, 1).0, vec![0]);
        assert_eq!(BraidWord::block(1, 2).0, vec![1, 0]);
        assert!(BraidWord::rto(0, 2).is_err());
        assert!(BraidWord::lto(3, 2).is_err());
    }

    #[test]
    fn one_dimensional_calculus() {
        let c = Calculus::new(QParams::symbolic(1));
        for l in Sign::BOTH {
            for r in Sign::BOTH {
                for s in Sign::BOTH {
                    assert_eq!(c.braiding(l, r, s).rows(), 1);
                }
            }
        }
        let m = c.braiding(Sign::Plus, Sign::Plus, Sign::Plus).get(0, 0);
        assert!(m.numerator().is_monomial() && m.denominator().is_monomial());
    }

    #[test]
    fn braidings_invert_each_other() {
        let c = Calculus::new(QParams::symbolic(2));
        for l in Sign::BOTH {
            for r in Sign::BOTH {
                let fwd = c.braiding(l, r, Sign::Plus);
                let back = c.braiding(r, l, Sign::Minus);
                assert!(back.mul(fwd).unwrap().is_identity());
                assert!(fwd.mul(back).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn single_transposition_word_is_the_braiding() {
        let c = Calculus::new(QParams::symbolic(2));
        let sig = SpaceSignature::homogeneous(2, Sign::Plus, 2);
        for s in Sign::BOTH {
            let m = c.sigma_word(WordKind::Full(2), &sig, s).unwrap();
            assert_eq!(&m, c.braiding(Sign::Plus, Sign::Plus, s));
        }
        assert!(c.sigma_word(WordKind::Full(3), &sig, Sign::Plus).is_err());
        let one = c.sigma_word(WordKind::Full(1), &sig, Sign::Plus).unwrap();
        assert!(one.is_identity());
        let _: &OpMatrix<RatFunc> = &one;
    }

    #[test]
    fn braid_suite_for_n2() {
        let r = verify_braidings(&Calculus::new(QParams::symbolic(2)));
        assert_eq!(r.checks.len(), 2 + 4 + 8);
        assert!(r.all_passed(), "{:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    }
}
