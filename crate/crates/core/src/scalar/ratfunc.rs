use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fp::{Fp, MODULUS};
use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of `Q(z)` kept in canonical form: coprime numerator and
/// denominator, no common integer content, denominator with positive
/// leading coefficient. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn z() -> Self {
        RatFunc { num: Poly::z(), den: Poly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RatFunc { num: Poly::constant(c.into()), den: Poly::one() }
    }

    /// The constant `c`.
    pub fn from_rational(c: &BigRational) -> Self {
        Self::normalize(Poly::constant(c.numer().clone()), Poly::constant(c.denom().clone()))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// `c * z^e` for any integer `e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        if e >= 0 {
            RatFunc { num: Poly::monomial(c, e as usize), den: Poly::one() }
        } else {
            RatFunc { num: Poly::constant(c), den: Poly::monomial(BigInt::one(), (-e) as usize) }
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            // Laurent case: the only possible common factors are z-powers
            // and integers.
            let dv = den.degree().unwrap();
            let nv = num.valuation().unwrap();
            let k = dv.min(nv);
            if k > 0 {
                num = num.shift_down(k);
                den = den.shift_down(k);
            }
        } else if !num.is_one() {
            let g = num.primitive_gcd(&den);
            if g.degree() != Some(0) {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        RatFunc { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RatFunc::normalize(base.num.pow(e), base.den.pow(e)))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_rational(at);
        if d.is_zero() {
            return Err(Error::Pole { at: at.clone() });
        }
        Ok(self.num.eval_rational(at) / d)
    }

    /// Value at a residue modulo the Mersenne prime; `None` at a pole.
    pub fn eval_fp(&self, at: Fp) -> Option<Fp> {
        let d = Fp::new(self.den.eval_mod(at.value(), MODULUS));
        let n = Fp::new(self.num.eval_mod(at.value(), MODULUS));
        Some(n.mul(d.inv()?))
    }

    /// Canonical text `(<num>)/(<den>)`, with `/(1)` omitted.
    pub fn to_text(&self) -> String {
        let mut s = String::from("(");
        s.push_str(&self.num.to_text());
        s.push(')');
        if !self.den.is_one() {
            s.push_str("/(");
            s.push_str(&self.den.to_text());
            s.push(')');
        }
        s
    }
}

/// The q-integer `[n]_p = (p^n - p^{-n}) / (p - p^{-1})`.
pub fn q_int(n: i64, p: &RatFunc) -> Result<RatFunc> {
    if p.is_zero() || p.is_one() || p.neg().is_one() {
        return Err(Error::QIntDomain);
    }
    let pinv = p.inv()?;
    let num = p.pow(n)?.sub(&pinv.pow(n)?);
    num.div(&p.sub(&pinv))
}

/// Exact evaluation at a rational point; a vanishing denominator is a pole.
pub fn rf_eval(f: &RatFunc, at: &BigRational) -> Result<BigRational> {
    f.eval(at)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    /// Accepts the canonical text form, and more generally any
    /// `(<poly>)` or `(<poly>)/(<poly>)` with integer polynomials in `z`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = match split_fraction(s) {
            Some(parts) => parts,
            None => (s, "1"),
        };
        RatFunc::new(parse_poly(strip_parens(num))?, parse_poly(strip_parens(den))?)
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

fn split_fraction(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn parse_poly(s: &str) -> Result<Poly> {
    let bad = || Error::Parse(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let negative = rest.starts_with('-');
        if rest.starts_with('-') || rest.starts_with('+') {
            rest = &rest[1..];
        }
        let end = rest[1.min(rest.len())..]
            .find(['+', '-'])
            .map_or(rest.len(), |i| i + 1);
        let term = &rest[..end];
        rest = &rest[end..];
        let (coeff, degree) = match term.find('z') {
            None => (BigInt::from_str(term).map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let c = match &term[..pos] {
                    "" => BigInt::one(),
                    head => BigInt::from_str(head.strip_suffix('*').ok_or_else(bad)?)
                        .map_err(|_| bad())?,
                };
                let d = match &term[pos + 1..] {
                    "" => 1,
                    tail => tail
                        .strip_prefix('^')
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(bad)?,
                };
                (c, d)
            }
        };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += if negative { -coeff } else { coeff };
    }
    Ok(Poly::from_coeffs(coeffs))
}
