//! Bernoulli numbers exactly and mod p, secant (Euler) numbers, and the two
//! constants that show up on the right-hand sides of the congruences.
//!
//! ```sh
//! cargo run --example bernoulli_euler
//! ```

use supercong::arith::{primes_between, vp};
use supercong::sequences::{
    bernoulli_exact, bernoulli_exact_mod, bernoulli_mod, euler_number, harmonic,
};

fn main() -> supercong::Result<()> {
    for n in [0, 1, 2, 4, 6, 12, 20] {
        println!("B_{n:<2} = {}", bernoulli_exact(n));
    }
    for n in (0..=10).step_by(2) {
        println!("E_{n:<2} = {}", euler_number(n));
    }

    println!("\n  p  B_(p-3) mod p  (exact route)  v_p(H2_(p-1))");
    for p in primes_between(5, 43) {
        let n = p as usize - 3;
        println!(
            "{p:>3}  {:>12}  {:>13}  {:>13}",
            bernoulli_mod(n, p)?.to_string(),
            bernoulli_exact_mod(n, p)?.to_string(),
            vp(&harmonic(p - 1, 2, false), p).to_string()
        );
    }
    Ok(())
}
