//! Exact arithmetic for Delannoy and Schroder numbers and a verifier for the
//! congruences that link their products to Bernoulli numbers and harmonic
//! sums modulo prime powers.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: big integers and rationals, `p`-adic valuation and reduction,
//!   binomials, Legendre symbols, truncated power series.
//! - [`sequences`]: `D_n(x)`, `S_n(x)`, harmonic sums, Bernoulli and Euler
//!   numbers, Legendre polynomials and a lattice-path oracle.
//! - [`identities`]: exact identities used along the way, including the
//!   Taylor analysis of the rational functions `f_{r,s}`.
//! - [`congruences`]: the catalog of named `p`-adic checks and a parallel
//!   suite runner.
//! - [`report`]: JSON, CSV and human-readable reports.
//!
//! ## Examples
//!
//! ```text
//! cargo run --example lattice_paths       # D_n, S_n, path counts, Legendre link
//! cargo run --example worked_prime_five   # sum D_k S_k mod 5^4, step by step
//! cargo run --example padic_reduction     # valuations and residues mod p^k
//! cargo run --example bernoulli_euler     # B_n exactly and mod p, E_n
//! cargo run --example frs_taylor          # f_{r,s} series and closed forms
//! cargo run --example identity_sweeps     # exact identity sweeps
//! cargo run --example catalog_tour -- 11  # every congruence at one prime
//! cargo run --release --example prime_range_suite
//! ```
//!
//! The `supercong` binary is a thin command-line wrapper over the same API.
//!
//! ```
//! use supercong::congruences::{run_check, Params};
//!
//! let r = run_check("thm2", 5, &Params::new()).unwrap();
//! assert!(r.pass);
//! assert_eq!(r.lhs_residue.unwrap().value().to_string(), "360");
//! ```

pub mod arith;
pub mod congruences;
pub mod error;
pub mod identities;
pub mod report;
pub mod sequences;

pub use error::{Error, Result};

/// Version string written into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
