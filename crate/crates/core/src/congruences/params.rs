//! Parameter domains of the catalog checks and their enumeration.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Named integer parameters of one check instance (`x`, `m`, `s`, `r`, ...).
pub type Params = BTreeMap<String, i64>;

/// Builds a [`Params`] map from `(name, value)` pairs.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// How the values of one parameter are produced for a given prime.
#[derive(Clone, Copy)]
pub enum AxisKind {
    /// Taken from the caller-supplied list of `x` values.
    X,
    /// Inclusive integer range, which may depend on `p` and on axes earlier
    /// in the list.
    Range(fn(u64, &Params) -> (i64, i64)),
}

#[derive(Clone, Copy)]
pub struct Axis {
    pub name: &'static str,
    pub kind: AxisKind,
}

/// Subparameter enumeration policy: exhaustive up to a prime bound, then a
/// seeded sample of at most `sample_size` values per parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingPolicy {
    pub exhaustive_up_to: u64,
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for SamplingPolicy {
    fn default() -> Self {
        Self {
            exhaustive_up_to: 60,
            sample_size: 20,
            seed: 0,
        }
    }
}

/// FNV-1a over the pieces that identify one axis draw, so the sample depends
/// only on `(seed, check, p, earlier parameters)`.
fn mix(seed: u64, name: &str, p: u64, prefix: &Params, axis: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(name.as_bytes());
    eat(&p.to_le_bytes());
    for (k, v) in prefix {
        eat(k.as_bytes());
        eat(&v.to_le_bytes());
    }
    eat(axis.as_bytes());
    h
}

/// Values of an inclusive range, sampled when `p` is past the exhaustive
/// bound. A sample always keeps both endpoints.
fn range_values(lo: i64, hi: i64, p: u64, policy: &SamplingPolicy, rng_seed: u64) -> Vec<i64> {
    if hi < lo {
        return Vec::new();
    }
    let len = (hi - lo + 1) as usize;
    if p <= policy.exhaustive_up_to || len <= policy.sample_size || policy.sample_size < 2 {
        return (lo..=hi).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out: Vec<i64> = sample(&mut rng, len - 2, policy.sample_size - 2)
        .into_iter()
        .map(|i| lo + 1 + i as i64)
        .collect();
    out.push(lo);
    out.push(hi);
    out.sort_unstable();
    out
}

/// Cartesian enumeration of `axes` at prime `p`, keeping instances accepted
/// by `admissible`.
pub fn enumerate(
    check: &str,
    axes: &[Axis],
    p: u64,
    xs: &[i64],
    policy: &SamplingPolicy,
    admissible: impl Fn(u64, &Params) -> bool,
) -> Vec<Params> {
    let mut partial = vec![Params::new()];
    for axis in axes {
        let mut next = Vec::new();
        for prefix in &partial {
            let values = match axis.kind {
                AxisKind::X => xs.to_vec(),
                AxisKind::Range(bounds) => {
                    let (lo, hi) = bounds(p, prefix);
                    let seed = mix(policy.seed, check, p, prefix, axis.name);
                    range_values(lo, hi, p, policy, seed)
                }
            };
            for v in values {
                let mut inst = prefix.clone();
                inst.insert(axis.name.to_string(), v);
                next.push(inst);
            }
        }
        partial = next;
    }
    partial.retain(|inst| admissible(p, inst));
    partial
}

/// `p` does not divide `n`.
pub fn coprime_to(p: u64, n: i64) -> bool {
    n.rem_euclid(p as i64) != 0
}
