use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial in `z` with integer coefficients, stored
/// lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Order of vanishing at `z = 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len(),
            None => false,
        }
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() {
            coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&other.coeffs) {
            *c -= s;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by `z^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact quotient `self / divisor` over `Z[z]`, `None` when the division
    /// leaves a remainder or a non-integral coefficient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let dn = self.degree().unwrap();
        if dn < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for shift in (0..=dn - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + i] -= &qc * d;
                }
            }
            quot[shift] = qc;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo-remainder by zero");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = rem.scale(&lead).sub(&divisor.scale(&top).shift_up(dr - dd));
        }
        rem
    }

    /// Primitive gcd over `Z[z]` (content ignored), positive leading coefficient.
    pub fn primitive_gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        // z-power factors are handled without a remainder sequence.
        let va = self.valuation().unwrap();
        let vb = other.valuation().unwrap();
        let zpow = va.min(vb);
        let mut a = self.shift_down(va).primitive_part();
        let mut b = other.shift_down(vb).primitive_part();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                a = Self::one();
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().shift_up(zpow)
    }

    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluation modulo `p` at the residue `at`.
    pub fn eval_mod(&self, at: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc: u128 = 0;
        for c in self.coeffs.iter().rev() {
            let r = c.mod_floor(&pb);
            let r: u64 = r.try_into().expect("residue fits in u64");
            acc = (acc * at as u128 + r as u128) % p as u128;
        }
        acc as u64
    }

    /// Descending-power text such as `2*z^3 - z + 1`.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            match deg {
                0 => {
                    let _ = write!(out, "{mag}");
                }
                _ => {
                    if !mag.is_one() {
                        let _ = write!(out, "{mag}*");
                    }
                    out.push('z');
                    if deg > 1 {
                        let _ = write!(out, "^{deg}");
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn arithmetic_basics() {
        // (z - 1)(z + 1) = z^2 - 1
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 2]).sub(&p(&[1, 2])), Poly::zero());
        assert_eq!(p(&[0, 0, 3]).valuation(), Some(2));
        assert!(p(&[0, 0, 3]).is_monomial());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]); // z^3 - 1
        let b = p(&[-1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[1, 1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn gcd_cases() {
        let a = p(&[-1, 0, 1]).mul(&p(&[0, 0, 1])); // (z^2-1) z^2
        let b = p(&[1, 1]).mul(&p(&[0, 1])); // (z+1) z
        assert_eq!(a.primitive_gcd(&b), p(&[0, 1, 1]));
        assert_eq!(p(&[2, 4]).primitive_gcd(&p(&[6])), Poly::one());
        assert_eq!(p(&[6, 6]).primitive_gcd(&p(&[-3, -3])), p(&[1, 1]));
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[-1, 0, 0, 0, 1]).to_text(), "z^4 - 1");
        assert_eq!(p(&[1, -1, 0, 2]).to_text(), "2*z^3 - z + 1");
        assert_eq!(p(&[0, -3]).to_text(), "-3*z");
        assert_eq!(Poly::zero().to_text(), "0");
    }

    #[test]
    fn modular_evaluation() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.eval_mod(3, 7), 1);
        assert_eq!(p(&[-5]).eval_mod(0, 7), 2);
    }
}
