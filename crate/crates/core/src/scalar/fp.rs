use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

/// Residue modulo [`MODULUS`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(u64);

#[allow(clippy::should_implement_trait)]
impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn new(v: u64) -> Self {
        Fp(v % MODULUS)
    }

    pub fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(MODULUS as i64);
        Fp(r as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + MODULUS - o.0 })
    }

    pub fn neg(self) -> Fp {
        Fp::ZERO.sub(self)
    }

    pub fn mul(self, o: Fp) -> Fp {
        let p = self.0 as u128 * o.0 as u128;
        // Reduction modulo a Mersenne prime.
        let lo = (p as u64) & MODULUS;
        let hi = (p >> 61) as u64;
        Fp::new(lo + hi)
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Fp> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(MODULUS - 2))
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic stream of uniform residues for evaluation points.
pub struct ResidueSampler {
    rng: ChaCha8Rng,
}

impl ResidueSampler {
    pub fn new(seed: u64) -> Self {
        ResidueSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform over the nonzero residues, by rejection.
    pub fn next_nonzero(&mut self) -> Fp {
        loop {
            let v = self.rng.next_u64() >> 3;
            if v != 0 && v < MODULUS {
                return Fp(v);
            }
        }
    }
}
