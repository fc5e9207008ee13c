//! Exact arithmetic substrate: big integers and rationals, `p`-adic
//! valuation and reduction, binomials, Legendre symbols and truncated power
//! series.

pub mod integer;
pub mod modulus;
pub mod series;

pub use integer::{
    binomial, binomial_i, factorial, frac, is_integral, is_prime, legendre_symbol, mod_inverse,
    primes_between, rat, sign_pow, vp, vp_int, Integer, Rational, Valuation,
};
pub use modulus::{reduce_mod, PrimePowerModulus, Residue};
pub use series::{PowerSeries, DEFAULT_ORDER};
