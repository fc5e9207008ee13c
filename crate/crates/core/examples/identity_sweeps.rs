//! Exact identity sweeps, plus a look at the two sides of a few instances.
//!
//! ```sh
//! cargo run --example identity_sweeps
//! ```

use supercong::arith::frac;
use supercong::identities::{
    b4_sides, c1_sides, c9_sides, chu_vandermonde_sides, lemma1_recurrence_residuals,
    product_identity_sides, run_identity_sweeps, SweepBounds,
};

fn main() {
    let (product, r_sum, s_sum) = product_identity_sides(1, 2, 3);
    println!("product identity (1,2,3): {product} = {r_sum} = {s_sum}");
    let cv = chu_vandermonde_sides(3, 5);
    println!("Chu-Vandermonde (3,5): {} = {}", cv.lhs, cv.rhs);
    let c1 = c1_sides(4);
    println!("c1 m=4: {} = {}", c1.lhs, c1.rhs);
    let (r1, r2) = lemma1_recurrence_residuals(7);
    println!("recurrence residuals m=7: {r1}, {r2}");
    let b4 = b4_sides(6, &frac(-1, 2));
    println!("b4 n=6 x=-1/2: {} = {}", b4.lhs, b4.rhs);
    let c9 = c9_sides(9);
    println!("c9 n=9: {} = {}", c9.lhs, c9.rhs);

    println!();
    let bounds = SweepBounds::default();
    for outcome in run_identity_sweeps(bounds) {
        println!(
            "{:<20} {:>5}/{:<5}",
            outcome.name, outcome.passed, outcome.cases
        );
    }
}
