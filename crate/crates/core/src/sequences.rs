//! Delannoy and Schroder numbers and polynomials, harmonic sums, Bernoulli
//! and Euler numbers, Legendre polynomials, and a lattice-path counter used
//! as an independent oracle for the first two.

use std::sync::{OnceLock, RwLock};

use dashmap::DashMap;
use num_traits::{One, Pow, Zero};

use crate::arith::{
    binomial, mod_inverse, rat, reduce_mod, Integer, PrimePowerModulus, Rational, Residue,
};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`path_oracle`].
pub const PATH_ORACLE_MAX: usize = 20;

/// `D_n(x) = sum_k C(n,k) C(n+k,k) x^k`. `D_n(1)` is the Delannoy number.
pub fn delannoy(n: u64, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xk = Rational::one();
    for k in 0..=n {
        let c = binomial(n, k as i64) * binomial(n + k, k as i64);
        acc += &xk * Rational::from_integer(c);
        xk *= x;
    }
    acc
}

/// `S_n(x) = sum_k C(n,k) C(n+k,k) x^k / (k+1)`. `S_n(1)` is the large
/// Schroder number.
pub fn schroder(n: u64, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xk = Rational::one();
    for k in 0..=n {
        let c = binomial(n, k as i64) * binomial(n + k, k as i64);
        acc += &xk * Rational::new(c, Integer::from(k + 1));
        xk *= x;
    }
    acc
}

/// Counts lattice paths `(0,0) -> (n,n)` with steps `(1,0)`, `(0,1)`,
/// `(1,1)`: all of them, and those never rising above `y = x`.
pub fn path_oracle(n: usize) -> Result<(Integer, Integer)> {
    if n > PATH_ORACLE_MAX {
        return Err(Error::Range(format!(
            "path oracle supports n <= {PATH_ORACLE_MAX}, got {n}"
        )));
    }
    let count = |below_diagonal: bool| {
        let mut grid = vec![vec![0u64; n + 1]; n + 1];
        grid[0][0] = 1;
        for x in 0..=n {
            for y in 0..=n {
                if (x, y) == (0, 0) || (below_diagonal && y > x) {
                    continue;
                }
                let mut c = 0;
                if x > 0 {
                    c += grid[x - 1][y];
                }
                if y > 0 {
                    c += grid[x][y - 1];
                }
                if x > 0 && y > 0 {
                    c += grid[x - 1][y - 1];
                }
                grid[x][y] = c;
            }
        }
        Integer::from(grid[n][n])
    };
    Ok((count(false), count(true)))
}

/// `sum_{k=1}^n sign(k) / k^order` with `sign(k) = (-1)^k` when
/// `alternating`, else 1.
pub fn harmonic(n: u64, order: u32, alternating: bool) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        let term = Rational::new(Integer::one(), Pow::pow(Integer::from(k), order));
        if alternating && k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// `H^(2)_0, ..., H^(2)_n` in one pass.
pub fn h2_table(n: u64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for k in 1..=n {
        acc += Rational::new(Integer::one(), Integer::from(k * k));
        out.push(acc.clone());
    }
    out
}

/// `sum_{s=0}^m H^(2)_s`.
pub fn h2_prefix(m: u64) -> Rational {
    h2_table(m).into_iter().sum()
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Exact Bernoulli number with `B_1 = -1/2`, from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_exact(n: usize) -> Rational {
    if let Some(b) = bernoulli_table().read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = bernoulli_table().write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let value = if m > 1 && m % 2 == 1 {
            Rational::zero()
        } else {
            let s: Rational = table
                .iter()
                .enumerate()
                .map(|(j, b)| b * Rational::from_integer(binomial(m as u64 + 1, j as i64)))
                .sum();
            -s / rat(m as i64 + 1)
        };
        table.push(value);
    }
    table[n].clone()
}

/// `B_n mod p`, running the same recurrence in `Z/pZ`. Requires
/// `n <= p - 3`, which keeps every `m + 1` in the recurrence a unit.
pub fn bernoulli_mod(n: usize, p: u64) -> Result<Residue> {
    let modulus = PrimePowerModulus::new(p, 1)?;
    if p < 3 || n as u64 > p - 3 {
        return Err(Error::Range(format!(
            "bernoulli_mod needs n <= p - 3, got n = {n}, p = {p}"
        )));
    }
    let pm = p as u128;
    let mut b: Vec<u128> = vec![1];
    // Pascal row C(m+1, .) mod p, grown as m increases.
    let mut row: Vec<u128> = vec![1, 1];
    for m in 1..=n {
        let mut next = vec![1u128; m + 2];
        for j in 1..=m {
            next[j] = (row[j - 1] + row[j]) % pm;
        }
        row = next;
        let s = (0..m).fold(0u128, |acc, j| (acc + row[j] * b[j]) % pm);
        let inv = mod_inverse(&Integer::from(m as u64 + 1), &Integer::from(p))?;
        let inv: u128 = inv.try_into().expect("inverse below p fits");
        b.push((pm - s) % pm * inv % pm);
    }
    Ok(Residue::from_integer(&Integer::from(b[n]), &modulus))
}

fn euler_table() -> &'static RwLock<Vec<Integer>> {
    static TABLE: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Integer::one()]))
}

/// Euler (secant) numbers: coefficients of `sech`, so `E_2 = -1`, `E_4 = 5`
/// and every odd index vanishes.
pub fn euler_number(n: usize) -> Integer {
    if n % 2 == 1 {
        return Integer::zero();
    }
    let half = n / 2;
    if let Some(e) = euler_table().read().unwrap().get(half) {
        return e.clone();
    }
    let mut table = euler_table().write().unwrap();
    while table.len() <= half {
        let m = table.len() as u64;
        let s: Integer = table
            .iter()
            .enumerate()
            .map(|(k, e)| e * binomial(2 * m, 2 * k as i64))
            .sum();
        table.push(-s);
    }
    table[half].clone()
}

/// `P_n(x)` through Bonnet's recurrence.
pub fn legendre_polynomial(n: u64, x: &Rational) -> Rational {
    let mut prev = Rational::one();
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for k in 1..n {
        let k = rat(k as i64);
        let next = ((&k * rat(2) + rat(1)) * x * &cur - &k * &prev) / (k + rat(1));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Sequence identifiers for [`SequenceCache`] keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    Delannoy,
    Schroder,
    Harmonic { order: u32, alternating: bool },
    H2Prefix,
}

type CacheKey = (SequenceId, u64, Option<Rational>);

/// Concurrent memo table for sequence values, keyed by sequence, index and
/// (for polynomials) the evaluation point.
#[derive(Debug, Default)]
pub struct SequenceCache {
    values: DashMap<CacheKey, Rational>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance shared by the check catalog.
    pub fn global() -> &'static SequenceCache {
        static CACHE: OnceLock<SequenceCache> = OnceLock::new();
        CACHE.get_or_init(SequenceCache::new)
    }

    fn get_or(&self, key: CacheKey, compute: impl FnOnce() -> Rational) -> Rational {
        if let Some(v) = self.values.get(&key) {
            return v.clone();
        }
        let v = compute();
        self.values.insert(key, v.clone());
        v
    }

    pub fn delannoy(&self, n: u64, x: &Rational) -> Rational {
        self.get_or((SequenceId::Delannoy, n, Some(x.clone())), || {
            delannoy(n, x)
        })
    }

    pub fn schroder(&self, n: u64, x: &Rational) -> Rational {
        self.get_or((SequenceId::Schroder, n, Some(x.clone())), || {
            schroder(n, x)
        })
    }

    pub fn harmonic(&self, n: u64, order: u32, alternating: bool) -> Rational {
        self.get_or(
            (SequenceId::Harmonic { order, alternating }, n, None),
            || harmonic(n, order, alternating),
        )
    }

    pub fn h2_prefix(&self, m: u64) -> Rational {
        self.get_or((SequenceId::H2Prefix, m, None), || h2_prefix(m))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Reduces `B_n` modulo `p` through the exact route.
pub fn bernoulli_exact_mod(n: usize, p: u64) -> Result<Residue> {
    reduce_mod(&bernoulli_exact(n), &PrimePowerModulus::new(p, 1)?)
}
