//! Scalars: the field `Q(z)`, prime-field residues, q-integers and the
//! `z`/`q` parameter bundle shared by every construction.

mod fp;
mod poly;
mod ratfunc;

use core::fmt::Debug;

pub use fp::{Fp, ResidueSampler, MODULUS};
pub use poly::Poly;
pub use ratfunc::{q_int, rf_eval, RatFunc};

/// The arithmetic every matrix construction needs.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn powi(&self, e: i64) -> Option<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Some(acc)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_int(v)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp::ZERO
    }
    fn one() -> Self {
        Fp::ONE
    }
    fn from_i64(v: i64) -> Self {
        Fp::from_i64(v)
    }
    fn is_zero(&self) -> bool {
        *self == Fp::ZERO
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn inv(&self) -> Option<Self> {
        Fp::inv(*self)
    }
}

/// `N` together with `z`, `q = z^N` and their inverses in a field.
#[derive(Clone, Debug, PartialEq)]
pub struct QParams<F> {
    pub n: usize,
    pub z: F,
    pub zinv: F,
    pub q: F,
    pub qinv: F,
}

impl<F: Field> QParams<F> {
    /// `None` when `z` is zero or `q = z^N` fails to be invertible.
    pub fn from_z(n: usize, z: F) -> Option<Self> {
        let zinv = z.inv()?;
        let q = z.powi(n as i64)?;
        let qinv = q.inv()?;
        Some(QParams { n, z, zinv, q, qinv })
    }

    pub fn zpow(&self, e: i64) -> F {
        if e < 0 { self.zinv.powi(-e) } else { self.z.powi(e) }.expect("nonnegative power")
    }

    pub fn qpow(&self, e: i64) -> F {
        if e < 0 { self.qinv.powi(-e) } else { self.q.powi(e) }.expect("nonnegative power")
    }

    /// `q - q^{-1}`.
    pub fn qdiff(&self) -> F {
        self.q.sub(&self.qinv)
    }
}

impl QParams<RatFunc> {
    /// The generic point: `z` is the indeterminate itself.
    pub fn symbolic(n: usize) -> Self {
        QParams::from_z(n, RatFunc::z()).expect("z is invertible")
    }
}
