//! Serializable reports for suite and identity runs.
//!
//! Residues are written as decimal strings so values beyond 64 bits stay
//! exact. JSON is the canonical format; CSV and a human summary are derived
//! from the same records.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::Valuation;
use crate::congruences::{chain_consistency, ChainViolation, CheckResult, Params};
use crate::identities::{SweepBounds, SweepOutcome};

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Human,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "human" => Ok(Format::Human),
            other => Err(format!(
                "unknown format '{other}' (expected json, csv or human)"
            )),
        }
    }
}

/// The run configuration echoed into a verify report. Worker count and
/// output path are left out: they do not change the results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub primes: [u64; 2],
    pub checks: Vec<String>,
    pub x: Vec<i64>,
    pub seed: u64,
    pub include_quoted: bool,
    pub exhaustive_up_to: u64,
    pub sample_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub name: String,
    pub p: u64,
    pub params: Params,
    pub modulus_exponent: u32,
    pub lhs_residue: Option<String>,
    pub rhs_residue: Option<String>,
    pub diff_valuation: Option<Valuation>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl From<&CheckResult> for ResultRecord {
    fn from(r: &CheckResult) -> Self {
        Self {
            name: r.name.clone(),
            p: r.p,
            params: r.params.clone(),
            modulus_exponent: r.modulus_exponent,
            lhs_residue: r.lhs_residue.as_ref().map(|v| v.to_string()),
            rhs_residue: r.rhs_residue.as_ref().map(|v| v.to_string()),
            diff_valuation: r.diff_valuation,
            pass: r.pass,
            error: r.error.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub config: VerifyConfig,
    pub results: Vec<ResultRecord>,
    pub chain_violations: Vec<ChainViolation>,
    pub summary: Summary,
}

impl Report {
    /// Builds a report; `elapsed_ms` is recorded as given.
    pub fn new(config: VerifyConfig, results: &[CheckResult], elapsed_ms: u64) -> Self {
        let errored = results.iter().filter(|r| r.is_error()).count();
        let passed = results.iter().filter(|r| r.pass).count();
        Self {
            version: crate::VERSION.to_string(),
            config,
            results: results.iter().map(ResultRecord::from).collect(),
            chain_violations: chain_consistency(results),
            summary: Summary {
                total: results.len(),
                passed,
                failed: results.len() - passed - errored,
                errored,
                elapsed_ms,
            },
        }
    }

    /// True when every record passed and the chain audit is clean.
    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total && self.chain_violations.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Human => self.to_human(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "name",
            "p",
            "params",
            "modulus_exponent",
            "lhs_residue",
            "rhs_residue",
            "diff_valuation",
            "pass",
            "error",
        ])
        .expect("in-memory write");
        for r in &self.results {
            w.write_record([
                r.name.clone(),
                r.p.to_string(),
                params_string(&r.params),
                r.modulus_exponent.to_string(),
                r.lhs_residue.clone().unwrap_or_default(),
                r.rhs_residue.clone().unwrap_or_default(),
                r.diff_valuation.map(|v| v.to_string()).unwrap_or_default(),
                r.pass.to_string(),
                r.error.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    fn to_human(&self) -> String {
        let mut out = String::new();
        for r in self.results.iter().filter(|r| !r.pass) {
            let mut where_ = format!("{} p={}", r.name, r.p);
            if !r.params.is_empty() {
                where_ = format!("{where_} {}", params_string(&r.params));
            }
            match &r.error {
                Some(e) => writeln!(out, "ERROR {where_}: {e}"),
                None => writeln!(
                    out,
                    "FAIL  {where_}: lhs={} rhs={} mod p^{} v_p(lhs-rhs)={}",
                    r.lhs_residue.as_deref().unwrap_or("-"),
                    r.rhs_residue.as_deref().unwrap_or("-"),
                    r.modulus_exponent,
                    r.diff_valuation.map(|v| v.to_string()).unwrap_or_default()
                ),
            }
            .unwrap();
        }
        for v in &self.chain_violations {
            writeln!(out, "CHAIN p={}: {}", v.p, v.reason).unwrap();
        }
        let s = &self.summary;
        writeln!(
            out,
            "{} checks: {} passed, {} failed, {} errored ({} ms)",
            s.total, s.passed, s.failed, s.errored, s.elapsed_ms
        )
        .unwrap();
        out
    }
}

/// `k=v;k=v` rendering of a parameter map.
pub fn params_string(params: &Params) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitySummary {
    pub identities: usize,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub version: String,
    pub config: SweepBounds,
    pub identities: Vec<SweepOutcome>,
    pub summary: IdentitySummary,
}

impl IdentityReport {
    pub fn new(config: SweepBounds, identities: Vec<SweepOutcome>, elapsed_ms: u64) -> Self {
        let cases = identities.iter().map(|o| o.cases).sum();
        let passed = identities.iter().map(|o| o.passed).sum();
        Self {
            version: crate::VERSION.to_string(),
            config,
            summary: IdentitySummary {
                identities: identities.len(),
                cases,
                passed,
                failed: cases - passed,
                elapsed_ms,
            },
            identities,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["identity", "cases", "passed", "failed"])
                    .expect("in-memory write");
                for o in &self.identities {
                    w.write_record([
                        o.name.to_string(),
                        o.cases.to_string(),
                        o.passed.to_string(),
                        (o.cases - o.passed).to_string(),
                    ])
                    .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
            }
            Format::Human => {
                let mut out = String::new();
                for o in &self.identities {
                    writeln!(out, "{:<20} {:>6}/{:<6}", o.name, o.passed, o.cases).unwrap();
                    for f in &o.failures {
                        writeln!(out, "  FAIL {f}").unwrap();
                    }
                }
                let s = &self.summary;
                writeln!(
                    out,
                    "{} identities, {} cases: {} passed, {} failed ({} ms)",
                    s.identities, s.cases, s.passed, s.failed, s.elapsed_ms
                )
                .unwrap();
                out
            }
        }
    }
}
