//! The named congruence checks. Each evaluator returns both displayed sides
//! as exact rationals; the runner does the reduction and comparison.

use std::sync::OnceLock;

use dashmap::DashMap;
use num_traits::{One, Pow, Zero};

use super::params::{coprime_to, Axis, AxisKind, Params};
use crate::arith::{
    binomial, factorial, legendre_symbol, rat, sign_pow, vp, Integer, Rational, Valuation,
};
use crate::error::{Error, Result};
use crate::identities::{catalan_term, frs_value, FrsSpec};
use crate::sequences::{bernoulli_exact, euler_number, h2_table, SequenceCache};

type Sides = (Rational, Rational);

/// One catalog entry: a named congruence, its parameter domain, its modulus
/// exponent and the procedure producing its two sides.
pub struct CheckSpec {
    pub name: &'static str,
    pub statement: &'static str,
    /// Results quoted from other work rather than proved here.
    pub quoted: bool,
    /// Smallest admissible prime.
    pub min_p: u64,
    pub axes: &'static [Axis],
    admissible: fn(u64, &Params) -> bool,
    exponent: fn(u64, &Params) -> u32,
    evaluate: fn(u64, &Params) -> Result<Sides>,
}

impl CheckSpec {
    /// Exponent `k` of the modulus `p^k` for this instance.
    pub fn exponent(&self, p: u64, params: &Params) -> u32 {
        (self.exponent)(p, params)
    }

    /// Both sides, exactly. Does not validate the domain; see
    /// [`CheckSpec::validate`].
    pub fn evaluate(&self, p: u64, params: &Params) -> Result<Sides> {
        (self.evaluate)(p, params)
    }

    pub fn is_admissible(&self, p: u64, params: &Params) -> bool {
        (self.admissible)(p, params)
    }

    /// Checks that `params` names exactly this check's axes, with range
    /// values inside their bounds, and that the instance is admissible.
    pub fn validate(&self, p: u64, params: &Params) -> Result<()> {
        if p < self.min_p {
            return Err(Error::Domain(format!(
                "{} needs p >= {}, got p = {p}",
                self.name, self.min_p
            )));
        }
        if params.len() != self.axes.len() {
            return Err(Error::Domain(format!(
                "{} takes parameters {:?}, got {:?}",
                self.name,
                self.axes.iter().map(|a| a.name).collect::<Vec<_>>(),
                params.keys().collect::<Vec<_>>()
            )));
        }
        for axis in self.axes {
            let Some(&v) = params.get(axis.name) else {
                return Err(Error::Domain(format!(
                    "{} is missing parameter {}",
                    self.name, axis.name
                )));
            };
            if let AxisKind::Range(bounds) = axis.kind {
                let (lo, hi) = bounds(p, params);
                if v < lo || v > hi {
                    return Err(Error::Domain(format!(
                        "{}: {} = {v} outside [{lo}, {hi}] at p = {p}",
                        self.name, axis.name
                    )));
                }
            }
        }
        if !self.is_admissible(p, params) {
            return Err(Error::Domain(format!(
                "{}: parameters {params:?} not admissible at p = {p}",
                self.name
            )));
        }
        Ok(())
    }
}

fn always(_: u64, _: &Params) -> bool {
    true
}

fn x_not_divisible(p: u64, params: &Params) -> bool {
    coprime_to(p, params["x"])
}

fn x_guo_domain(p: u64, params: &Params) -> bool {
    let x = params["x"];
    coprime_to(p, x) && coprime_to(p, x + 1)
}

fn lehmer_admissible(p: u64, params: &Params) -> bool {
    (2 * params["r"] - 2).rem_euclid(p as i64 - 1) != 0
}

const fn k(n: u32) -> fn(u64, &Params) -> u32 {
    match n {
        1 => |_, _| 1,
        2 => |_, _| 2,
        3 => |_, _| 3,
        _ => |_, _| 4,
    }
}

const X: Axis = Axis {
    name: "x",
    kind: AxisKind::X,
};
const M_HIGH: Axis = Axis {
    name: "m",
    kind: AxisKind::Range(|p, _| (p as i64, 2 * p as i64 - 2)),
};
const M_LOW: Axis = Axis {
    name: "m",
    kind: AxisKind::Range(|p, _| (0, p as i64 - 2)),
};
const R_LOW: Axis = Axis {
    name: "r",
    kind: AxisKind::Range(|p, _| (0, p as i64 - 2)),
};
const S_UPTO_R: Axis = Axis {
    name: "s",
    kind: AxisKind::Range(|_, prefix| (0, prefix["r"])),
};
const S_FULL: Axis = Axis {
    name: "s",
    kind: AxisKind::Range(|p, _| (0, p as i64 - 1)),
};
const K_FULL: Axis = Axis {
    name: "k",
    kind: AxisKind::Range(|p, _| (1, p as i64 - 1)),
};
const POWER: Axis = Axis {
    name: "power",
    kind: AxisKind::Range(|_, _| (1, 2)),
};
const R_POSITIVE: Axis = Axis {
    name: "r",
    kind: AxisKind::Range(|p, _| (1, p as i64)),
};

fn pr(p: u64) -> Rational {
    rat(p as i64)
}

fn ppow(p: u64, e: u32) -> Rational {
    Rational::from_integer(Pow::pow(Integer::from(p), e))
}

fn ri(n: Integer) -> Rational {
    Rational::from_integer(n)
}

fn cache() -> &'static SequenceCache {
    SequenceCache::global()
}

fn bern(p: u64) -> Rational {
    bernoulli_exact(p as usize - 3)
}

fn alt_harmonic(p: u64) -> Rational {
    cache().harmonic(p - 1, 1, true)
}

/// `sum_{k=lo}^{p-1} D_k(x) S_k(x)`.
fn ds_sum(p: u64, lo: u64, x: &Rational) -> Rational {
    (lo..p)
        .map(|k| cache().delannoy(k, x) * cache().schroder(k, x))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Block {
    /// `p sum_{m} sum_{s<=p-1} (-1)^s C(2s,s) C(s,m-s) / ((m+1)(s+1))` over
    /// `m` in `[lo, hi]`.
    Plain(u64, u64),
    /// Same with the extra weight `H^(2)_s` and without the leading `p`.
    Weighted(u64, u64),
}

fn block_memo() -> &'static DashMap<(u64, Block), Rational> {
    static MEMO: OnceLock<DashMap<(u64, Block), Rational>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn block(p: u64, which: Block) -> Rational {
    if let Some(v) = block_memo().get(&(p, which)) {
        return v.clone();
    }
    let value = match which {
        Block::Plain(lo, hi) => {
            let sum: Rational = (lo..=hi)
                .map(|m| {
                    let inner: Integer = (0..p as i64).map(|s| catalan_term(m as i64, s)).sum();
                    Rational::new(inner, Integer::from(m + 1))
                })
                .sum();
            sum * pr(p)
        }
        Block::Weighted(lo, hi) => {
            let h2 = h2_table(p - 1);
            (lo..=hi)
                .map(|m| {
                    let inner: Rational = (0..p as i64)
                        .map(|s| ri(catalan_term(m as i64, s)) * &h2[s as usize])
                        .sum();
                    inner / rat(m as i64 + 1)
                })
                .sum()
        }
    };
    block_memo().insert((p, which), value.clone());
    value
}

fn x_of(params: &Params) -> Rational {
    rat(params["x"])
}

fn thm1(p: u64, params: &Params) -> Result<Sides> {
    Ok((ds_sum(p, 1, &x_of(params)), Rational::zero()))
}

fn thm2(p: u64, _: &Params) -> Result<Sides> {
    let lhs = ds_sum(p, 1, &rat(1));
    let rhs = ppow(p, 3) * bern(p) * rat(2) - pr(p) * alt_harmonic(p) * rat(2);
    Ok((lhs, rhs))
}

fn conj_sun(p: u64, _: &Params) -> Result<Sides> {
    let lhs = ds_sum(p, 1, &rat(1));
    let inner: Rational = (1..p as i64)
        .map(|k| Rational::new(Integer::from(sign_pow(k) + 3), Integer::from(k)))
        .sum();
    Ok((lhs, pr(p) * inner * rat(-2)))
}

fn lehmer_d0(p: u64, _: &Params) -> Result<Sides> {
    let lhs = cache().harmonic(p - 1, 1, false);
    Ok((lhs, -ppow(p, 2) * bern(p) / rat(3)))
}

fn thm1_final(p: u64, params: &Params) -> Result<Sides> {
    let x = x_of(params);
    let lhs = ds_sum(p, 0, &x);
    let mut inner = Integer::zero();
    for s in 0..p {
        let head = binomial(2 * s, p as i64 - 1) * binomial(p, s as i64 + 1);
        // (1/p) C(2s, p-1) C(p, s+1) is p-integral for every s.
        let scaled = Rational::new(head.clone(), Integer::from(p));
        if let Valuation::Finite(v) = vp(&scaled, p) {
            if v < 0 {
                return Err(Error::NegativeValuation {
                    value: scaled.to_string(),
                    p,
                    valuation: v,
                });
            }
        }
        inner += head * binomial(p + s, s as i64) * binomial(p - 1, s as i64);
    }
    let rhs = Pow::pow(x, (p - 1) as u32) / pr(p) * ri(inner);
    Ok((lhs, rhs))
}

/// `(-1)^m (-1 + 2p/(m+1) + 2p^2/(m+1) * sum_{s<=m-p} H^(2)_s)`.
fn c2(p: u64, params: &Params) -> Result<Sides> {
    let m = params["m"];
    let lhs = ri((0..p as i64).map(|s| catalan_term(m, s)).sum());
    let m1 = rat(m + 1);
    let rhs = (rat(-1)
        + pr(p) * rat(2) / &m1
        + ppow(p, 2) * rat(2) / &m1 * cache().h2_prefix((m - p as i64) as u64))
        * rat(sign_pow(m));
    Ok((lhs, rhs))
}

/// `2 (-1)^r (1 - p/(p+r+1) - p^2/(p+r+1) * sum_{s<=r} H^(2)_s)`, without the 2.
fn e0_closed_form(p: u64, r: i64) -> Rational {
    let d = rat(p as i64 + r + 1);
    (rat(1) - pr(p) / &d - ppow(p, 2) / &d * cache().h2_prefix(r as u64)) * rat(sign_pow(r))
}

fn e0(p: u64, params: &Params) -> Result<Sides> {
    let r = params["r"];
    let p64 = p as i64;
    let lhs: Rational = (0..=r)
        .map(|s| {
            let top = (p64 + s) as u64;
            ri(binomial(2 * top, top as i64) * binomial(top, r - s))
                * Rational::new(Integer::from(sign_pow(s)), Integer::from(p64 + s + 1))
        })
        .sum();
    Ok((lhs, e0_closed_form(p, r) * rat(2)))
}

/// `prod_{i=1}^{n} (p + i)` with the reciprocal reading for `n < 0`.
fn shifted_product(p: u64, n: i64) -> Rational {
    let p = p as i64;
    if n >= 0 {
        (1..=n).map(|i| rat(p + i)).product()
    } else {
        (n + 1..=0)
            .map(|i| rat(p + i))
            .product::<Rational>()
            .recip()
    }
}

fn e2(p: u64, params: &Params) -> Result<Sides> {
    let (r, s) = (params["r"], params["s"]);
    let p64 = p as i64;
    let lhs = ri(binomial(2 * (p + s as u64), p64 + s) * binomial(p + s as u64, r - s));
    let odd: Rational = (1..=s).map(|i| rat(2 * p64 + 2 * i - 1)).product();
    let rhs = Rational::new(
        Integer::from(2).pow((s + 1) as u32),
        factorial((r - s) as u64),
    ) * odd
        / shifted_product(p, 2 * s - r);
    Ok((lhs, rhs))
}

fn e7(p: u64, params: &Params) -> Result<Sides> {
    let r = params["r"] as u64;
    let x = pr(p);
    let mut lhs = Rational::zero();
    for s in 0..=r {
        lhs += frs_value(FrsSpec::new(r, s)?, &x)?;
    }
    Ok((lhs, e0_closed_form(p, r as i64)))
}

fn c3(p: u64, params: &Params) -> Result<Sides> {
    let m = params["m"] as u64;
    Ok((cache().h2_prefix(m), cache().h2_prefix(p - m - 2)))
}

fn c3_1(p: u64, params: &Params) -> Result<Sides> {
    let s = params["s"] as u64;
    let lhs = cache().harmonic(s, 2, false) + cache().harmonic(p - s - 1, 2, false);
    Ok((lhs, Rational::zero()))
}

fn c5(p: u64, params: &Params) -> Result<Sides> {
    let s = params["s"] as u64;
    let lhs = ri(binomial(p + s, s as i64) * binomial(p - 1, s as i64));
    let rhs = (rat(1) - cache().harmonic(s, 2, false) * ppow(p, 2)) * rat(sign_pow(s as i64));
    Ok((lhs, rhs))
}

fn c6(p: u64, _: &Params) -> Result<Sides> {
    let top = 2 * p - 2;
    let rhs = block(p, Block::Plain(0, top)) - ppow(p, 3) * block(p, Block::Weighted(0, top));
    Ok((ds_sum(p, 0, &rat(1)), rhs))
}

fn k1(p: u64, _: &Params) -> Result<Sides> {
    Ok((
        block(p, Block::Plain(0, p - 1)),
        rat(1) - pr(p) * alt_harmonic(p),
    ))
}

fn k2_lhs(p: u64) -> Rational {
    block(p, Block::Plain(p, 2 * p - 2))
}

fn k2(p: u64, _: &Params) -> Result<Sides> {
    let rhs = ppow(p, 3) * bern(p) * rat(4) - pr(p) * alt_harmonic(p);
    Ok((k2_lhs(p), rhs))
}

fn k3_lhs(p: u64) -> Rational {
    ppow(p, 3) * block(p, Block::Weighted(0, 2 * p - 2))
}

fn k3(p: u64, _: &Params) -> Result<Sides> {
    Ok((k3_lhs(p), ppow(p, 3) * bern(p) * rat(2)))
}

fn c7(p: u64, _: &Params) -> Result<Sides> {
    let a = |order| cache().harmonic(p - 1, order, true);
    let rhs = -pr(p) * a(1) + ppow(p, 2) * a(2) * rat(3) - ppow(p, 3) * a(3) * rat(5);
    Ok((k2_lhs(p), rhs))
}

fn c8(p: u64, _: &Params) -> Result<Sides> {
    let a = |order| cache().harmonic(p - 1, order, true);
    Ok((ppow(p, 2) * a(2), -ppow(p, 3) * a(3)))
}

fn half_h2(p: u64) -> Rational {
    cache().harmonic((p - 1) / 2, 2, false)
}

fn full_h2(p: u64) -> Rational {
    cache().harmonic(p - 1, 2, false)
}

fn c10(p: u64, _: &Params) -> Result<Sides> {
    let rhs = -pr(p) * alt_harmonic(p) + ppow(p, 2) * half_h2(p) * rat(4)
        - ppow(p, 2) * full_h2(p) * rat(8);
    Ok((k2_lhs(p), rhs))
}

fn c11(p: u64, _: &Params) -> Result<Sides> {
    Ok((half_h2(p), full_h2(p) * Rational::new(7.into(), 2.into())))
}

fn lehmer_power(p: u64, params: &Params) -> Result<Sides> {
    let e = 2 * params["r"] as u32;
    let power_sum = |n: u64| -> Integer { (1..=n).map(|k| Pow::pow(Integer::from(k), e)).sum() };
    let two_e = Pow::pow(Integer::from(2), e);
    let coeff = Rational::new(Integer::one() - &two_e / 2, two_e);
    Ok((ri(power_sum((p - 1) / 2)), coeff * ri(power_sum(p - 1))))
}

fn c12(p: u64, _: &Params) -> Result<Sides> {
    Ok((
        full_h2(p),
        pr(p) * bern(p) * Rational::new(2.into(), 3.into()),
    ))
}

fn f2(_: u64, params: &Params) -> Result<Sides> {
    let (s, m) = (params["s"], params["m"]);
    let h2 = cache().harmonic(s as u64, 2, false);
    let lhs = Rational::new(
        binomial(2 * s as u64, s) * binomial(s as u64, m - s),
        Integer::from(s + 1),
    ) * h2;
    Ok((lhs, Rational::zero()))
}

fn c13(p: u64, _: &Params) -> Result<Sides> {
    Ok((k3_lhs(p), ppow(p, 3) * block(p, Block::Weighted(0, p - 1))))
}

fn inv_shift(p: u64, params: &Params) -> Result<Sides> {
    let kk = rat(params["k"]);
    let pp = pr(p);
    let sides = if params["power"] == 1 {
        (
            (&kk + &pp).recip(),
            kk.recip() - &pp / (&kk * &kk) + &pp * &pp / (&kk * &kk * &kk),
        )
    } else {
        (
            ((&kk + &pp) * (&kk + &pp)).recip(),
            (&kk * &kk).recip() - &pp * rat(2) / (&kk * &kk * &kk),
        )
    };
    Ok(sides)
}

fn sun_d_over_k2(p: u64, _: &Params) -> Result<Sides> {
    let lhs: Rational = (1..p)
        .map(|k| cache().delannoy(k, &rat(1)) / rat((k * k) as i64))
        .sum();
    let chi = legendre_symbol(&Integer::from(-1), p) as i64;
    Ok((lhs, ri(euler_number(p as usize - 3) * (2 * chi))))
}

fn sun_d_sq(p: u64, _: &Params) -> Result<Sides> {
    let lhs: Rational = (0..p)
        .map(|k| {
            let d = cache().delannoy(k, &rat(1));
            &d * &d
        })
        .sum();
    Ok((lhs, rat(legendre_symbol(&Integer::from(2), p) as i64)))
}

fn guo_power(p: u64, x: &Rational, e: u32) -> Rational {
    (0..p)
        .map(|k| Pow::pow(cache().delannoy(k, x), e) * rat(2 * k as i64 + 1))
        .sum()
}

fn guo_cube(p: u64, params: &Params) -> Result<Sides> {
    let x = params["x"];
    let chi = legendre_symbol(&Integer::from(-4 * x - 3), p) as i64;
    Ok((guo_power(p, &rat(x), 3), pr(p) * rat(chi)))
}

fn guo_fourth(p: u64, params: &Params) -> Result<Sides> {
    Ok((guo_power(p, &x_of(params), 4), pr(p)))
}

fn wolstenholme(p: u64, _: &Params) -> Result<Sides> {
    Ok((ri(binomial(2 * p, p as i64)), rat(2)))
}

static CATALOG: [CheckSpec; 30] = [
    CheckSpec {
        name: "thm1",
        statement: "sum_{k=1}^{p-1} D_k(x) S_k(x) = 0 (mod p), p odd, p !| x",
        quoted: false,
        min_p: 3,
        axes: &[X],
        admissible: x_not_divisible,
        exponent: k(1),
        evaluate: thm1,
    },
    CheckSpec {
        name: "thm2",
        statement: "sum_{k=1}^{p-1} D_k S_k = 2p^3 B_{p-3} - 2p H*_{p-1} (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: thm2,
    },
    CheckSpec {
        name: "conj_sun",
        statement: "sum_{k=1}^{p-1} D_k S_k = -2p sum_{k=1}^{p-1} ((-1)^k + 3)/k (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: conj_sun,
    },
    CheckSpec {
        name: "lehmer_d0",
        statement: "H_{p-1} = -(p^2/3) B_{p-3} (mod p^3)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(3),
        evaluate: lehmer_d0,
    },
    CheckSpec {
        name: "thm1_final",
        statement: "sum_{k=0}^{p-1} D_k(x) S_k(x) = (x^{p-1}/p) sum_s C(2s,p-1) C(p,s+1) C(p+s,s) C(p-1,s) (mod p)",
        quoted: false,
        min_p: 3,
        axes: &[X],
        admissible: always,
        exponent: k(1),
        evaluate: thm1_final,
    },
    CheckSpec {
        name: "lemma2_c2",
        statement: "sum_{s<p} C(2s,s) C(s,m-s) (-1)^s/(s+1) = (-1)^m (-1 + 2p/(m+1) + 2p^2/(m+1) sum_{s<=m-p} H2_s) (mod p^3), p <= m <= 2p-2",
        quoted: false,
        min_p: 5,
        axes: &[M_HIGH],
        admissible: always,
        exponent: k(3),
        evaluate: c2,
    },
    CheckSpec {
        name: "lemma2_e0",
        statement: "sum_{s<=r} C(2p+2s,p+s) C(p+s,r-s) (-1)^s/(p+s+1) = 2(-1)^r (1 - p/(p+r+1) - p^2/(p+r+1) sum_{s<=r} H2_s) (mod p^3)",
        quoted: false,
        min_p: 5,
        axes: &[R_LOW],
        admissible: always,
        exponent: k(3),
        evaluate: e0,
    },
    CheckSpec {
        name: "e2_factorization",
        statement: "C(2p+2s,p+s) C(p+s,r-s) = 2^{s+1}/(r-s)! prod_{i<=s}(2p+2i-1) / prod_{i<=2s-r}(p+i) (mod p^3)",
        quoted: false,
        min_p: 5,
        axes: &[R_LOW, S_UPTO_R],
        admissible: always,
        exponent: k(3),
        evaluate: e2,
    },
    CheckSpec {
        name: "e7_substitution",
        statement: "sum_{s<=r} f_{r,s}(p) = (-1)^r (1 - p/(p+r+1) - p^2/(p+r+1) sum_{s<=r} H2_s) (mod p^3)",
        quoted: false,
        min_p: 5,
        axes: &[R_LOW],
        admissible: always,
        exponent: k(3),
        evaluate: e7,
    },
    CheckSpec {
        name: "lemma3_c3",
        statement: "sum_{s<=m} H2_s = sum_{s<=p-m-2} H2_s (mod p), 0 <= m <= p-2",
        quoted: false,
        min_p: 5,
        axes: &[M_LOW],
        admissible: always,
        exponent: k(1),
        evaluate: c3,
    },
    CheckSpec {
        name: "c3_1",
        statement: "H2_s + H2_{p-s-1} = 0 (mod p)",
        quoted: false,
        min_p: 5,
        axes: &[S_FULL],
        admissible: always,
        exponent: k(1),
        evaluate: c3_1,
    },
    CheckSpec {
        name: "c5",
        statement: "C(p+s,s) C(p-1,s) = (-1)^s (1 - H2_s p^2) (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[S_FULL],
        admissible: always,
        exponent: k(4),
        evaluate: c5,
    },
    CheckSpec {
        name: "c6",
        statement: "sum_{k<p} D_k S_k = p sum_{m,s} T(m,s)/(m+1) - p^3 sum_{m,s} T(m,s) H2_s/(m+1) (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: c6,
    },
    CheckSpec {
        name: "k1",
        statement: "p sum_{m<p} sum_{s<p} T(m,s)/(m+1) = 1 - p H*_{p-1} (mod p^4; exact)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: k1,
    },
    CheckSpec {
        name: "k2",
        statement: "p sum_{p<=m<=2p-2} sum_{s<p} T(m,s)/(m+1) = 4p^3 B_{p-3} - p H*_{p-1} (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: k2,
    },
    CheckSpec {
        name: "k3",
        statement: "p^3 sum_{m<=2p-2} sum_{s<p} T(m,s) H2_s/(m+1) = 2p^3 B_{p-3} (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: k3,
    },
    CheckSpec {
        name: "c7",
        statement: "LHS(k2) = -p sum (-1)^k/k + 3p^2 sum (-1)^k/k^2 - 5p^3 sum (-1)^k/k^3 (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: c7,
    },
    CheckSpec {
        name: "c8",
        statement: "p^2 sum (-1)^k/k^2 = -p^3 sum (-1)^k/k^3 (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: c8,
    },
    CheckSpec {
        name: "c10",
        statement: "LHS(k2) = -p H*_{p-1} + 4p^2 sum_{k<=(p-1)/2} 1/k^2 - 8p^2 sum_{k<p} 1/k^2 (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: c10,
    },
    CheckSpec {
        name: "c11",
        statement: "sum_{k<=(p-1)/2} 1/k^2 = (7/2) sum_{k<p} 1/k^2 (mod p^3 for p >= 7, mod p^2 for p = 5)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: |p, _| if p == 5 { 2 } else { 3 },
        evaluate: c11,
    },
    CheckSpec {
        name: "lehmer_power",
        statement: "sum_{k<=(p-1)/2} k^{2r} = (1 - 2^{2r-1})/2^{2r} sum_{k<p} k^{2r} (mod p^3), 2r != 2 (mod p-1)",
        quoted: false,
        min_p: 5,
        axes: &[R_POSITIVE],
        admissible: lehmer_admissible,
        exponent: k(3),
        evaluate: lehmer_power,
    },
    CheckSpec {
        name: "c12",
        statement: "sum_{k<p} 1/k^2 = (2p/3) B_{p-3} (mod p^2)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(2),
        evaluate: c12,
    },
    CheckSpec {
        name: "f2",
        statement: "C(2s,s) C(s,m-s) H2_s/(s+1) = 0 (mod p), s < p <= m <= 2p-2",
        quoted: false,
        min_p: 5,
        axes: &[S_FULL, M_HIGH],
        admissible: always,
        exponent: k(1),
        evaluate: f2,
    },
    CheckSpec {
        name: "c13",
        statement: "LHS(k3) = p^3 sum_{m<p} 1/(m+1) sum_{s<=m} T(m,s) H2_s (mod p^4)",
        quoted: false,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(4),
        evaluate: c13,
    },
    CheckSpec {
        name: "inv_shift",
        statement: "1/(k+p) = 1/k - p/k^2 + p^2/k^3 (mod p^3); 1/(k+p)^2 = 1/k^2 - 2p/k^3 (mod p^2)",
        quoted: false,
        min_p: 5,
        axes: &[K_FULL, POWER],
        admissible: always,
        exponent: |_, params| if params["power"] == 1 { 3 } else { 2 },
        evaluate: inv_shift,
    },
    CheckSpec {
        name: "sun_d_over_k2",
        statement: "sum_{k=1}^{p-1} D_k/k^2 = 2 (-1/p) E_{p-3} (mod p)",
        quoted: true,
        min_p: 3,
        axes: &[],
        admissible: always,
        exponent: k(1),
        evaluate: sun_d_over_k2,
    },
    CheckSpec {
        name: "sun_d_sq",
        statement: "sum_{k=0}^{p-1} D_k^2 = (2/p) (mod p)",
        quoted: true,
        min_p: 3,
        axes: &[],
        admissible: always,
        exponent: k(1),
        evaluate: sun_d_sq,
    },
    CheckSpec {
        name: "guo_cube",
        statement: "sum_{k<p} (2k+1) D_k(x)^3 = p ((-4x-3)/p) (mod p^2), p !| x(x+1)",
        quoted: true,
        min_p: 3,
        axes: &[X],
        admissible: x_guo_domain,
        exponent: k(2),
        evaluate: guo_cube,
    },
    CheckSpec {
        name: "guo_fourth",
        statement: "sum_{k<p} (2k+1) D_k(x)^4 = p (mod p^2), p !| x(x+1)",
        quoted: true,
        min_p: 3,
        axes: &[X],
        admissible: x_guo_domain,
        exponent: k(2),
        evaluate: guo_fourth,
    },
    CheckSpec {
        name: "wolstenholme",
        statement: "C(2p,p) = 2 (mod p^3), p >= 5",
        quoted: true,
        min_p: 5,
        axes: &[],
        admissible: always,
        exponent: k(3),
        evaluate: wolstenholme,
    },
];

/// Every catalog entry, in catalog order.
pub fn catalog() -> &'static [CheckSpec] {
    &CATALOG
}

pub fn find(name: &str) -> Option<&'static CheckSpec> {
    catalog().iter().find(|c| c.name == name)
}
