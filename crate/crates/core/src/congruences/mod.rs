//! Catalog of named `p`-adic congruence checks and a uniform runner.
//!
//! A check evaluates both sides of its congruence as exact rationals,
//! reduces each modulo `p^k` and compares residues. Suites fan out over
//! primes and subparameters in parallel and return results in a fixed
//! `(name, p, params)` order.

mod catalog;
mod params;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

pub use catalog::{catalog, find, CheckSpec};
pub use params::{enumerate, params, Axis, AxisKind, Params, SamplingPolicy};

use crate::arith::{
    is_prime, rat, reduce_mod, vp, PrimePowerModulus, Rational, Residue, Valuation,
};
use crate::error::{Error, Result};

/// Outcome of one check at one prime and parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub p: u64,
    pub params: Params,
    pub modulus_exponent: u32,
    pub lhs_residue: Option<Residue>,
    pub rhs_residue: Option<Residue>,
    /// `v_p(LHS - RHS)`.
    pub diff_valuation: Option<Valuation>,
    pub pass: bool,
    /// Error tag and message when the check could not be evaluated.
    pub error: Option<String>,
}

impl CheckResult {
    fn errored(name: &str, p: u64, params: Params, exponent: u32, err: &Error) -> Self {
        Self {
            name: name.to_string(),
            p,
            params,
            modulus_exponent: exponent,
            lhs_residue: None,
            rhs_residue: None,
            diff_valuation: None,
            pass: false,
            error: Some(err.to_string()),
        }
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }

    /// Whether the stored residues still agree after reduction to `p^k`,
    /// `k <= modulus_exponent`.
    pub fn passes_at(&self, k: u32) -> Result<bool> {
        match (&self.lhs_residue, &self.rhs_residue) {
            (Some(l), Some(r)) => Ok(l.reduce_to(k)? == r.reduce_to(k)?),
            _ => Ok(false),
        }
    }

    fn sort_key(&self) -> (&str, u64, &Params) {
        (&self.name, self.p, &self.params)
    }
}

/// Runner options shared by single checks and suites.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub sampling: SamplingPolicy,
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
    /// Adds 1 to the left side of the named check before reduction. Only
    /// used to exercise failure reporting.
    pub inject_failure: Option<String>,
}

fn evaluate_checked(
    spec: &CheckSpec,
    p: u64,
    params: &Params,
    corrupt: bool,
) -> Result<CheckResult> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    spec.validate(p, params)?;
    let k = spec.exponent(p, params);
    let modulus = PrimePowerModulus::new(p, k)?;
    let (mut lhs, rhs) = spec.evaluate(p, params)?;
    if corrupt {
        lhs += rat(1);
    }
    let lhs_residue = reduce_mod(&lhs, &modulus)?;
    let rhs_residue = reduce_mod(&rhs, &modulus)?;
    let diff: Rational = &lhs - &rhs;
    let diff_valuation = vp(&diff, p);
    let pass = lhs_residue == rhs_residue;
    debug_assert_eq!(pass, diff_valuation.at_least(k as i64));
    Ok(CheckResult {
        name: spec.name.to_string(),
        p,
        params: params.clone(),
        modulus_exponent: k,
        lhs_residue: Some(lhs_residue),
        rhs_residue: Some(rhs_residue),
        diff_valuation: Some(diff_valuation),
        pass,
        error: None,
    })
}

/// Runs one named check at `p` with explicit parameters.
pub fn run_check(name: &str, p: u64, params: &Params) -> Result<CheckResult> {
    run_check_with(name, p, params, &RunOptions::default())
}

pub fn run_check_with(
    name: &str,
    p: u64,
    params: &Params,
    options: &RunOptions,
) -> Result<CheckResult> {
    let spec = find(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    let corrupt = options.inject_failure.as_deref() == Some(name);
    evaluate_checked(spec, p, params, corrupt)
}

/// Names selected by `"all"`: every non-quoted check, plus the quoted suite
/// on request.
pub fn all_check_names(include_quoted: bool) -> Vec<&'static str> {
    catalog()
        .iter()
        .filter(|c| include_quoted || !c.quoted)
        .map(|c| c.name)
        .collect()
}

/// Every admissible `(p, params)` instance of `spec` for the given primes.
pub fn instances(
    spec: &CheckSpec,
    primes: &[u64],
    xs: &[i64],
    policy: &SamplingPolicy,
) -> Vec<(u64, Params)> {
    let xs: &[i64] = if xs.is_empty() { &[1] } else { xs };
    primes
        .iter()
        .filter(|&&p| p >= spec.min_p && p % 2 == 1)
        .flat_map(|&p| {
            enumerate(spec.name, spec.axes, p, xs, policy, |p, inst| {
                spec.is_admissible(p, inst)
            })
            .into_iter()
            .map(move |inst| (p, inst))
        })
        .collect()
}

/// Runs every named check at every admissible instance over the primes in
/// `[lo, hi]`.
///
/// Unknown names and evaluation errors become errored results; the suite
/// never aborts. Checks taking `x` use `xs`, or `x = 1` when `xs` is empty.
/// Output is sorted by `(name, p, params)` independently of scheduling.
pub fn run_suite(
    names: &[String],
    primes: (u64, u64),
    xs: &[i64],
    options: &RunOptions,
) -> Vec<CheckResult> {
    let prime_list = crate::arith::primes_between(primes.0, primes.1);
    let mut results = Vec::new();
    let mut tasks: Vec<(&'static CheckSpec, u64, Params)> = Vec::new();
    for name in names {
        match find(name) {
            Some(spec) => tasks.extend(
                instances(spec, &prime_list, xs, &options.sampling)
                    .into_iter()
                    .map(|(p, inst)| (spec, p, inst)),
            ),
            None => results.push(CheckResult::errored(
                name,
                0,
                Params::new(),
                0,
                &Error::UnknownCheck(name.clone()),
            )),
        }
    }
    let run = |tasks: &[(&'static CheckSpec, u64, Params)]| -> Vec<CheckResult> {
        tasks
            .par_iter()
            .map(|(spec, p, inst)| {
                let corrupt = options.inject_failure.as_deref() == Some(spec.name);
                evaluate_checked(spec, *p, inst, corrupt).unwrap_or_else(|e| {
                    CheckResult::errored(spec.name, *p, inst.clone(), spec.exponent(*p, inst), &e)
                })
            })
            .collect()
    };
    let evaluated = if options.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.workers)
            .build()
            .expect("thread pool")
            .install(|| run(&tasks))
    } else {
        run(&tasks)
    };
    results.extend(evaluated);
    results.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    results.dedup_by(|a, b| a.sort_key() == b.sort_key());
    results
}

/// A prime at which the recorded results break one of the implications
/// `k1 & k2 & k3 & c6 => thm2` or `thm2 => conj_sun`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainViolation {
    pub p: u64,
    pub reason: String,
}

/// Audits recorded results for the proof-chain implications. Primes where a
/// premise was not recorded are skipped.
pub fn chain_consistency(results: &[CheckResult]) -> Vec<ChainViolation> {
    let mut by_p: BTreeMap<u64, BTreeMap<&str, bool>> = BTreeMap::new();
    for r in results.iter().filter(|r| r.params.is_empty()) {
        by_p.entry(r.p).or_default().insert(&r.name, r.pass);
    }
    let mut out = Vec::new();
    for (p, passes) in by_p {
        let get = |n: &str| passes.get(n).copied();
        let premises: Option<Vec<bool>> = ["k1", "k2", "k3", "c6"].iter().map(|n| get(n)).collect();
        if let (Some(premises), Some(thm2)) = (premises, get("thm2")) {
            if premises.iter().all(|&b| b) && !thm2 {
                out.push(ChainViolation {
                    p,
                    reason: "k1, k2, k3 and c6 pass but thm2 fails".into(),
                });
            }
        }
        if let (Some(true), Some(false)) = (get("thm2"), get("conj_sun")) {
            out.push(ChainViolation {
                p,
                reason: "thm2 passes but conj_sun fails".into(),
            });
        }
    }
    out
}
