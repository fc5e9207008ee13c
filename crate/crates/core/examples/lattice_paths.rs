//! Delannoy and Schröder numbers three ways: the defining binomial sums, a
//! lattice-path count, and the Legendre polynomial connection.
//!
//! ```sh
//! cargo run --example lattice_paths
//! ```

use supercong::arith::{frac, rat};
use supercong::sequences::{delannoy, legendre_polynomial, path_oracle, schroder};

fn main() -> supercong::Result<()> {
    println!(" n   D_n        S_n      (paths)");
    for n in 0..=10u64 {
        let d = delannoy(n, &rat(1));
        let s = schroder(n, &rat(1));
        let (dp, sp) = path_oracle(n as usize)?;
        let agree = if d == dp.clone().into() && s == sp.clone().into() {
            "ok"
        } else {
            "MISMATCH"
        };
        println!("{n:>2}  {d:<9}  {s:<7}  {agree}");
    }

    // D_n((x-1)/2) is the Legendre polynomial P_n(x).
    let x = frac(1, 3);
    let shifted = (&x - rat(1)) / rat(2);
    for n in [2u64, 5, 9] {
        println!(
            "D_{n}({shifted}) = {}   P_{n}({x}) = {}",
            delannoy(n, &shifted),
            legendre_polynomial(n, &x)
        );
    }
    Ok(())
}
