//! Exact (characteristic-zero) identities behind the congruences, and the
//! truncated-series analysis of the rational functions `f_{r,s}`.
//!
//! Every `check_*` function has a companion that returns the evaluated sides,
//! so a failing instance can be inspected. These are finite verifications of
//! the stated identities and recurrences, not proofs.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{
    binomial, binomial_i, factorial, rat, sign_pow, Integer, PowerSeries, Rational,
};
use crate::error::{Error, Result};
use crate::sequences::{delannoy, h2_prefix, h2_table, schroder};

/// Two exactly evaluated sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn ri(n: Integer) -> Rational {
    Rational::from_integer(n)
}

/// `C(k,i) C(k+i,i) C(k,j) C(k+j,j)` together with its `r`-sum and `s`-sum
/// expansions.
pub fn product_identity_sides(i: u64, j: u64, k: u64) -> (Integer, Integer, Integer) {
    let product = binomial(k, i as i64)
        * binomial(k + i, i as i64)
        * binomial(k, j as i64)
        * binomial(k + j, j as i64);
    let r_form: Integer = (0..=i)
        .map(|r| {
            binomial(i + j, i as i64)
                * binomial(j, (i - r) as i64)
                * binomial(j + r, r as i64)
                * binomial(k, (j + r) as i64)
                * binomial(k + j + r, (j + r) as i64)
        })
        .sum();
    let s_form: Integer = (i.max(j)..=i + j)
        .map(|s| {
            binomial(s, i as i64)
                * binomial(s, j as i64)
                * binomial(i + j, s as i64)
                * binomial(k, s as i64)
                * binomial(k + s, s as i64)
        })
        .sum();
    (product, r_form, s_form)
}

pub fn check_product_identity(i: u64, j: u64, k: u64) -> bool {
    let (product, r_form, s_form) = product_identity_sides(i, j, k);
    product == r_form && product == s_form
}

/// `sum_{k=s}^{n-1} C(k,s) C(k+s,s)` against `n/(2s+1) C(n+s,s) C(n-1,s)`.
pub fn partial_sum_sides(n: u64, s: u64) -> Sides {
    assert!(n >= 1, "partial-sum identity needs n >= 1");
    let lhs: Integer = (s..n)
        .map(|k| binomial(k, s as i64) * binomial(k + s, s as i64))
        .sum();
    let rhs = Rational::new(Integer::from(n), Integer::from(2 * s + 1))
        * ri(binomial(n + s, s as i64) * binomial(n - 1, s as i64));
    Sides { lhs: ri(lhs), rhs }
}

pub fn check_partial_sum(n: u64, s: u64) -> bool {
    partial_sum_sides(n, s).holds()
}

/// `sum_j C(s+1, j+1) C(s, m-j)` against `C(2s+1, m+1)`.
pub fn chu_vandermonde_sides(s: u64, m: u64) -> Sides {
    let lhs: Integer = (0..=s)
        .map(|j| binomial(s + 1, j as i64 + 1) * binomial(s, m as i64 - j as i64))
        .sum();
    Sides {
        lhs: ri(lhs),
        rhs: ri(binomial(2 * s + 1, m as i64 + 1)),
    }
}

pub fn check_chu_vandermonde(s: u64, m: u64) -> bool {
    chu_vandermonde_sides(s, m).holds()
}

/// `C(2s,s) C(s,m-s) (-1)^s / (s+1)`, an integer because `C(2s,s)/(s+1)` is
/// a Catalan number.
pub fn catalan_term(m: i64, s: i64) -> Integer {
    if s < 0 {
        return Integer::zero();
    }
    let t = binomial(2 * s as u64, s) * binomial_i(s, m - s) / (s + 1);
    if s % 2 == 0 {
        t
    } else {
        -t
    }
}

/// `sum_{s=0}^m C(2s,s) C(s,m-s) (-1)^s/(s+1)` against `(-1)^m`.
pub fn b0_sides(m: u64) -> Sides {
    let lhs: Integer = (0..=m as i64).map(|s| catalan_term(m as i64, s)).sum();
    Sides {
        lhs: ri(lhs),
        rhs: rat(sign_pow(m as i64)),
    }
}

pub fn check_b0(m: u64) -> bool {
    b0_sides(m).holds()
}

/// Left side of the `H^(2)`-weighted companion of [`b0_sides`].
pub fn c1_lhs(m: u64) -> Rational {
    let h2 = h2_table(m);
    (0..=m as i64)
        .map(|s| ri(catalan_term(m as i64, s)) * &h2[s as usize])
        .sum()
}

/// `2 (-1)^m / (m+1) * sum_{s=0}^m H^(2)_s`.
pub fn c1_rhs(m: u64) -> Rational {
    Rational::new(Integer::from(2 * sign_pow(m as i64)), Integer::from(m + 1)) * h2_prefix(m)
}

pub fn c1_sides(m: u64) -> Sides {
    Sides {
        lhs: c1_lhs(m),
        rhs: c1_rhs(m),
    }
}

pub fn check_c1(m: u64) -> bool {
    c1_sides(m).holds()
}

fn lemma1_residual(seq: &dyn Fn(u64) -> Rational, m: u64) -> Rational {
    let mi = |c: i64| rat(m as i64 + c);
    let c3 = mi(4) * mi(3) * mi(3);
    let c2 = mi(3) * (rat(3) * mi(0) * mi(0) + rat(16) * mi(0) + rat(22));
    let c1 = mi(2) * (rat(3) * mi(0) * mi(0) + rat(14) * mi(0) + rat(17));
    let c0 = mi(1) * mi(2) * mi(2);
    c3 * seq(m + 3) + c2 * seq(m + 2) + c1 * seq(m + 1) + c0 * seq(m)
}

/// Values of the four-term recurrence applied at index `m` to both sides of
/// the `H^(2)`-weighted identity; both must vanish.
pub fn lemma1_recurrence_residuals(m: u64) -> (Rational, Rational) {
    (lemma1_residual(&c1_lhs, m), lemma1_residual(&c1_rhs, m))
}

pub fn check_lemma1_recurrence(m: u64) -> bool {
    let (a, b) = lemma1_recurrence_residuals(m);
    a.is_zero() && b.is_zero()
}

/// Index pair `(r, s)` of the rational function `f_{r,s}`, with `0 <= s <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrsSpec {
    r: u64,
    s: u64,
}

impl FrsSpec {
    pub fn new(r: u64, s: u64) -> Result<Self> {
        if s > r {
            return Err(Error::InvalidSpec(format!(
                "f_{{r,s}} needs s <= r, got r = {r}, s = {s}"
            )));
        }
        Ok(Self { r, s })
    }

    pub fn r(self) -> u64 {
        self.r
    }

    pub fn s(self) -> u64 {
        self.s
    }

    /// Offsets `i` of the linear factors `(x + i)` in the denominator and in
    /// the numerator. For `2s - r >= 0` the product `prod_{i=1}^{2s-r}` sits
    /// in the denominator; for `2s - r < 0` it is read as
    /// `1 / prod_{i=2s-r+1}^{0}`, which moves those factors (including a
    /// bare `x` for `i = 0`) into the numerator.
    fn shift_factors(self) -> (Vec<i64>, Vec<i64>) {
        let top = 2 * self.s as i64 - self.r as i64;
        if top >= 0 {
            ((1..=top).collect(), Vec::new())
        } else {
            (Vec::new(), (top + 1..=0).collect())
        }
    }

    fn prefactor(self) -> Rational {
        Rational::new(
            Integer::from(-2).pow(self.s as u32),
            factorial(self.r - self.s),
        )
    }
}

/// Truncated expansion of
/// `f_{r,s}(x) = (-2)^s / ((r-s)! (x+s+1)) * prod_{i=1}^s (2x+2i-1) / prod_{i=1}^{2s-r} (x+i)`
/// about `x = 0`.
pub fn frs_series(spec: FrsSpec, order: usize) -> PowerSeries {
    let (den_shifts, num_shifts) = spec.shift_factors();
    let mut num = PowerSeries::constant(spec.prefactor(), order);
    for i in 1..=spec.s as i64 {
        num = num.mul(&PowerSeries::linear(rat(2 * i - 1), rat(2), order));
    }
    for &i in &num_shifts {
        num = num.mul(&PowerSeries::linear(rat(i), rat(1), order));
    }
    let mut den = PowerSeries::linear(rat(spec.s as i64 + 1), rat(1), order);
    for &i in &den_shifts {
        den = den.mul(&PowerSeries::linear(rat(i), rat(1), order));
    }
    // Every denominator factor has a positive constant term.
    num.div(&den)
        .expect("denominator of f_{r,s} is a unit series")
}

/// Exact value `f_{r,s}(x)`; fails at a pole.
pub fn frs_value(spec: FrsSpec, x: &Rational) -> Result<Rational> {
    let (den_shifts, num_shifts) = spec.shift_factors();
    let mut num = spec.prefactor();
    for i in 1..=spec.s as i64 {
        num *= x * rat(2) + rat(2 * i - 1);
    }
    for &i in &num_shifts {
        num *= x + rat(i);
    }
    let mut den = x + rat(spec.s as i64 + 1);
    for &i in &den_shifts {
        den *= x + rat(i);
    }
    if den.is_zero() {
        return Err(Error::Pole(format!(
            "f_{{{},{}}} is singular at x = {x}",
            spec.r, spec.s
        )));
    }
    Ok(num / den)
}

/// The first three Taylor coefficients of `sum_s f_{r,s}` computed three
/// ways: from the series, from the polynomial closed form and from the
/// `x/(x+r+1)` closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorComparison {
    pub series: [Rational; 3],
    pub closed_form: [Rational; 3],
    pub shifted_form: [Rational; 3],
}

impl TaylorComparison {
    pub fn holds(&self) -> bool {
        self.series == self.closed_form && self.series == self.shifted_form
    }
}

pub fn frs_taylor_sides(r: u64, order: usize) -> TaylorComparison {
    assert!(order >= 3, "Taylor check needs at least three coefficients");
    let total = (0..=r)
        .map(|s| frs_series(FrsSpec { r, s }, order))
        .fold(PowerSeries::zero(order), |acc, f| &acc + &f);
    let sign = rat(sign_pow(r as i64));
    let r1 = rat(r as i64 + 1);
    let h = h2_prefix(r);
    let closed_form = [
        sign.clone(),
        -&sign / &r1,
        &sign / (&r1 * &r1) - &sign / &r1 * &h,
    ];
    // (-1)^r (1 - x/(x+r+1) - x^2/(x+r+1) * h) as a truncated series.
    let shifted = PowerSeries::linear(r1.clone(), Rational::one(), order)
        .inv()
        .expect("r + 1 is nonzero");
    let x = PowerSeries::linear(Rational::zero(), Rational::one(), order);
    let x_over = x.mul(&shifted);
    let x2_over = x.mul(&x_over).scale(&h);
    let shifted_form = (&(&PowerSeries::one(order) - &x_over) - &x2_over).scale(&sign);
    TaylorComparison {
        series: [total.coeff(0), total.coeff(1), total.coeff(2)],
        closed_form,
        shifted_form: [
            shifted_form.coeff(0),
            shifted_form.coeff(1),
            shifted_form.coeff(2),
        ],
    }
}

pub fn check_frs_taylor(r: u64) -> bool {
    frs_taylor_sides(r, crate::arith::DEFAULT_ORDER).holds()
}

/// `sum_{k=0}^{n-1} D_k(x) S_k(x)`.
pub fn ds_partial_sum(n: u64, x: &Rational) -> Rational {
    (0..n).map(|k| delannoy(k, x) * schroder(k, x)).sum()
}

/// The closed double sum obtained after collapsing the inner sums:
/// `n sum_{m=0}^{2n-2} sum_{s=0}^{n-1} C(2s,m) C(m+1,s+1) C(n+s,s) C(n-1,s) x^m/(m+1)^2`.
pub fn b4_double_sum(n: u64, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xm = Rational::one();
    for m in 0..=(2 * n - 2) {
        let inner: Integer = (0..n)
            .map(|s| {
                binomial(2 * s, m as i64)
                    * binomial(m + 1, s as i64 + 1)
                    * binomial(n + s, s as i64)
                    * binomial(n - 1, s as i64)
            })
            .sum();
        acc += ri(inner) * &xm / rat(((m + 1) * (m + 1)) as i64);
        xm *= x;
    }
    acc * rat(n as i64)
}

pub fn b4_sides(n: u64, x: &Rational) -> Sides {
    assert!(n >= 1, "b4 needs n >= 1");
    Sides {
        lhs: ds_partial_sum(n, x),
        rhs: b4_double_sum(n, x),
    }
}

pub fn check_b4_exact(n: u64, x: &Rational) -> bool {
    b4_sides(n, x).holds()
}

/// `sum_{k<n} (-1)^k/k^2` against `1/2 sum_{k<=(n-1)/2} 1/k^2 - sum_{k<n} 1/k^2`.
pub fn c9_sides(n: u64) -> Sides {
    assert!(n >= 3 && n % 2 == 1, "c9 needs odd n >= 3");
    let inv_sq = |k: u64| Rational::new(Integer::one(), Integer::from(k * k));
    let lhs: Rational = (1..n).map(|k| inv_sq(k) * rat(sign_pow(k as i64))).sum();
    let half: Rational = (1..=(n - 1) / 2).map(inv_sq).sum();
    let full: Rational = (1..n).map(inv_sq).sum();
    Sides {
        lhs,
        rhs: half / rat(2) - full,
    }
}

pub fn check_c9_exact(n: u64) -> bool {
    c9_sides(n).holds()
}

/// Upper bounds for the identity sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepBounds {
    /// `m` for b0, c1, the recurrence and Chu-Vandermonde.
    pub max_m: u64,
    /// `k` for the product identity.
    pub max_k: u64,
    /// `n` (and `s`) for the partial-sum identity and b4; c9 runs odd `n <= 2 max_n + 1`.
    pub max_n: u64,
    /// `r` for the Taylor checks.
    pub max_r: u64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self {
            max_m: 60,
            max_k: 12,
            max_n: 20,
            max_r: 40,
        }
    }
}

/// Tally for one swept identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn all_passed(&self) -> bool {
        self.cases == self.passed
    }
}

fn sweep<T: Sync + std::fmt::Debug>(
    name: &'static str,
    cases: Vec<T>,
    check: impl Fn(&T) -> bool + Sync,
) -> SweepOutcome {
    let results: Vec<bool> = cases.par_iter().map(&check).collect();
    let failures: Vec<String> = cases
        .iter()
        .zip(&results)
        .filter(|(_, ok)| !**ok)
        .map(|(c, _)| format!("{c:?}"))
        .collect();
    SweepOutcome {
        name,
        cases: cases.len(),
        passed: cases.len() - failures.len(),
        failures,
    }
}

/// Sample points for b4.
pub fn b4_sample_points() -> Vec<Rational> {
    vec![
        rat(1),
        rat(2),
        Rational::new(Integer::from(-1), Integer::from(2)),
    ]
}

/// Runs every identity sweep up to `bounds`, in a fixed order.
pub fn run_identity_sweeps(bounds: SweepBounds) -> Vec<SweepOutcome> {
    let SweepBounds {
        max_m,
        max_k,
        max_n,
        max_r,
    } = bounds;
    let b1_cases: Vec<(u64, u64, u64)> = (0..=max_k)
        .flat_map(|k| (0..=k).flat_map(move |i| (0..=k).map(move |j| (i, j, k))))
        .collect();
    let partial_cases: Vec<(u64, u64)> = (1..=max_n)
        .flat_map(|n| (0..=max_n).map(move |s| (n, s)))
        .collect();
    let f1_cases: Vec<(u64, u64)> = (0..=max_m)
        .flat_map(|m| (0..=m).map(move |s| (s, m)))
        .collect();
    let b4_cases: Vec<(u64, Rational)> = (1..=max_n)
        .flat_map(|n| b4_sample_points().into_iter().map(move |x| (n, x)))
        .collect();
    let c9_cases: Vec<u64> = (3..=2 * max_n + 1).step_by(2).collect();
    vec![
        sweep("b1_product", b1_cases, |&(i, j, k)| {
            check_product_identity(i, j, k)
        }),
        sweep("partial_sum", partial_cases, |&(n, s)| {
            check_partial_sum(n, s)
        }),
        sweep("f1_chu_vandermonde", f1_cases, |&(s, m)| {
            check_chu_vandermonde(s, m)
        }),
        sweep("b0", (0..=max_m).collect(), |&m| check_b0(m)),
        sweep("c1", (0..=max_m).collect(), |&m| check_c1(m)),
        sweep("lemma1_recurrence", (1..=max_m).collect(), |&m| {
            check_lemma1_recurrence(m)
        }),
        sweep("frs_taylor", (0..=max_r).collect(), |&r| {
            check_frs_taylor(r)
        }),
        sweep("b4_exact", b4_cases, |(n, x)| check_b4_exact(*n, x)),
        sweep("c9_exact", c9_cases, |&n| check_c9_exact(n)),
    ]
}
