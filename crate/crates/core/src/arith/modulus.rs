//! Prime-power moduli and reduction of `p`-adic integral rationals.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Pow, Zero};

use super::integer::{is_prime, mod_inverse, vp, Integer, Rational, Valuation};
use crate::error::{Error, Result};

/// The modulus `p^k` for a prime `p` and exponent `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePowerModulus {
    p: u64,
    k: u32,
    value: Integer,
}

impl PrimePowerModulus {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::Range("modulus exponent must be at least 1".into()));
        }
        Ok(Self {
            p,
            k,
            value: Pow::pow(Integer::from(p), k),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `p^k` as an integer.
    pub fn value(&self) -> &Integer {
        &self.value
    }
}

impl fmt::Display for PrimePowerModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.k)
    }
}

/// Canonical representative in `[0, p^k)` of a congruence class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: Integer,
    modulus: PrimePowerModulus,
}

impl Residue {
    /// Reduces an arbitrary integer into canonical range.
    pub fn from_integer(n: &Integer, modulus: &PrimePowerModulus) -> Self {
        Self {
            value: n.mod_floor(modulus.value()),
            modulus: modulus.clone(),
        }
    }

    pub fn value(&self) -> &Integer {
        &self.value
    }

    pub fn modulus(&self) -> &PrimePowerModulus {
        &self.modulus
    }

    /// Re-reduces to a smaller exponent `k' <= k`.
    pub fn reduce_to(&self, k: u32) -> Result<Residue> {
        if k > self.modulus.k {
            return Err(Error::Range(format!(
                "cannot lift a residue mod {} to exponent {k}",
                self.modulus
            )));
        }
        let m = PrimePowerModulus::new(self.modulus.p, k)?;
        Ok(Residue::from_integer(&self.value, &m))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Reduces a `p`-adic integral rational modulo `p^k`.
///
/// With `q = p^v a/b` and `p` coprime to `a b`, the result is
/// `p^v a b^{-1} mod p^k`, which is zero once `v >= k`. Since `q` is stored in
/// lowest terms, a nonnegative valuation means the denominator is already a
/// unit modulo `p`, so the numerator can be reduced as-is.
pub fn reduce_mod(q: &Rational, m: &PrimePowerModulus) -> Result<Residue> {
    let v = vp(q, m.p);
    match v {
        Valuation::Infinite => return Ok(Residue::from_integer(&Integer::zero(), m)),
        Valuation::Finite(v) if v < 0 => {
            return Err(Error::NegativeValuation {
                value: q.to_string(),
                p: m.p,
                valuation: v,
            })
        }
        Valuation::Finite(v) if v >= m.k as i64 => {
            return Ok(Residue::from_integer(&Integer::zero(), m))
        }
        Valuation::Finite(_) => {}
    }
    let den = q.denom();
    let value = if den.is_one() {
        q.numer().clone()
    } else {
        q.numer() * mod_inverse(den, m.value())?
    };
    Ok(Residue::from_integer(&value, m))
}
