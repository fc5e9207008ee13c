//! Integer and rational primitives: valuations, binomials, primality,
//! modular inverses and Legendre symbols.

use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact fraction in canonical form (positive denominator, coprime parts).
pub type Rational = BigRational;

/// Lifts a machine integer into a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// `num / den` as a canonical [`Rational`]. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// `(-1)^n` as a small integer.
pub fn sign_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A `p`-adic valuation; `Infinite` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self >= k` for a finite bound `k`.
    pub fn at_least(self, k: i64) -> bool {
        self >= Valuation::Finite(k)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Exponent of `p` in a nonzero integer.
fn vp_nonzero(n: &Integer, p: &Integer) -> i64 {
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// `v_p` of an integer.
pub fn vp_int(n: &Integer, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(vp_nonzero(n, &Integer::from(p)))
}

/// `v_p(q) = v_p(num) - v_p(den)`, or [`Valuation::Infinite`] for zero.
pub fn vp(q: &Rational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let p = Integer::from(p);
    Valuation::Finite(vp_nonzero(q.numer(), &p) - vp_nonzero(q.denom(), &p))
}

fn binomial_memo() -> &'static DashMap<(u64, u64), Integer> {
    static MEMO: OnceLock<DashMap<(u64, u64), Integer>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// `C(n, k)`, zero whenever `k < 0` or `k > n`. Results are memoized in a
/// process-wide concurrent table.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    if k == 0 {
        return Integer::one();
    }
    if k == 1 {
        return Integer::from(n);
    }
    let memo = binomial_memo();
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let mut acc = Integer::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    memo.insert((n, k), acc.clone());
    acc
}

/// Binomial with signed top index; zero when `n < 0` (only nonnegative tops
/// occur in the sums this crate evaluates).
pub fn binomial_i(n: i64, k: i64) -> Integer {
    if n < 0 {
        return Integer::zero();
    }
    binomial(n as u64, k)
}

/// `n!` for small `n`.
pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in the inclusive range `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// The inverse of `a` modulo `m`, in `[1, m)`.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Result<Integer> {
    if *m < Integer::from(2) {
        return Err(Error::Range(format!("modulus {m} must be at least 2")));
    }
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(Error::NotInvertible {
            a: a.to_string(),
            m: m.to_string(),
        });
    }
    Ok(e.x.mod_floor(m))
}

/// Legendre symbol `(a / p)` by Euler's criterion.
pub fn legendre_symbol(a: &Integer, p: u64) -> i8 {
    let pb = Integer::from(p);
    let r = a.mod_floor(&pb);
    if r.is_zero() {
        return 0;
    }
    let e = r.modpow(&Integer::from((p - 1) / 2), &pb);
    if e.is_one() {
        1
    } else {
        -1
    }
}

/// True iff `q` has denominator 1.
pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(vp(&rat(7), 5), Valuation::Finite(0));
        assert_eq!(vp(&frac(1, 5), 5), Valuation::Finite(-1));
        assert_eq!(vp(&frac(250, 3), 5), Valuation::Finite(3));
        assert_eq!(vp(&rat(0), 5), Valuation::Infinite);
        assert!(Valuation::Infinite > Valuation::Finite(1_000));
    }

    #[test]
    fn inverse_examples() {
        let m = Integer::from(625);
        assert_eq!(
            mod_inverse(&Integer::from(2), &m).unwrap(),
            Integer::from(313)
        );
        assert_eq!(
            mod_inverse(&Integer::from(3), &m).unwrap(),
            Integer::from(417)
        );
        assert_eq!(
            mod_inverse(&Integer::from(1), &Integer::from(9)).unwrap(),
            Integer::from(1)
        );
        assert!(matches!(
            mod_inverse(&Integer::from(5), &m),
            Err(Error::NotInvertible { .. })
        ));
        assert_eq!(
            mod_inverse(&Integer::from(-2), &m).unwrap(),
            Integer::from(312)
        );
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), Integer::from(6));
        assert_eq!(binomial(10, 5), Integer::from(252));
        assert_eq!(binomial(3, 5), Integer::zero());
        assert_eq!(binomial(3, -1), Integer::zero());
        assert_eq!(binomial(0, 0), Integer::one());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=60u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&Integer::from(1), 7), 1);
        assert_eq!(legendre_symbol(&Integer::from(2), 5), -1);
        assert_eq!(legendre_symbol(&Integer::from(-1), 5), 1);
        assert_eq!(legendre_symbol(&Integer::from(14), 7), 0);
    }

    #[test]
    fn primality_against_trial_division() {
        for n in 0..5000u64 {
            let trial = n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), trial, "{n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }
}
