//! p-adic valuations and canonical residues of rationals mod p^k.
//!
//! ```sh
//! cargo run --example padic_reduction
//! ```

use supercong::arith::{frac, mod_inverse, reduce_mod, vp, Integer, PrimePowerModulus};
use supercong::Error;

fn main() -> supercong::Result<()> {
    let m = PrimePowerModulus::new(5, 4)?;
    for q in [
        frac(1, 6),
        frac(95, 2),
        frac(125, 3),
        frac(-7, 12),
        frac(625, 2),
    ] {
        let r = reduce_mod(&q, &m)?;
        println!(
            "{:>8}  v_5 = {}  residue {r} mod {m}",
            q.to_string(),
            vp(&q, 5)
        );
    }

    println!(
        "2^-1 mod 625 = {}",
        mod_inverse(&Integer::from(2), m.value())?
    );

    // A reduced residue keeps agreeing at every lower exponent.
    let r = reduce_mod(&frac(95, 2), &m)?;
    for k in (1..=4).rev() {
        println!("  mod 5^{k}: {}", r.reduce_to(k)?);
    }

    // Negative valuation has no residue.
    match reduce_mod(&frac(1, 10), &m) {
        Err(e @ Error::NegativeValuation { .. }) => println!("1/10: {e}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
