//! The mod p^4 congruence for sum D_k S_k, worked through at p = 5.
//!
//! ```sh
//! cargo run --example worked_prime_five
//! ```

use supercong::arith::{rat, reduce_mod, PrimePowerModulus};
use supercong::congruences::{find, run_check, Params};
use supercong::sequences::{delannoy, schroder};

fn main() -> supercong::Result<()> {
    let p = 5;
    let mut total = rat(0);
    for k in 1..p {
        let term = delannoy(k, &rat(1)) * schroder(k, &rat(1));
        println!("D_{k} S_{k} = {term}");
        total += term;
    }
    println!("sum = {total}");

    let (lhs, rhs) = find("thm2")
        .expect("catalog entry")
        .evaluate(p, &Params::new())?;
    println!("exact sides: {lhs} and {rhs}");

    let m = PrimePowerModulus::new(p, 4)?;
    println!(
        "mod {m}: {} and {}",
        reduce_mod(&lhs, &m)?,
        reduce_mod(&rhs, &m)?
    );

    let result = run_check("thm2", p, &Params::new())?;
    println!(
        "run_check: pass = {}, v_p(lhs - rhs) = {}",
        result.pass,
        result.diff_valuation.expect("evaluated")
    );
    Ok(())
}
