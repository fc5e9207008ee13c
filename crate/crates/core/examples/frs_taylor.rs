//! The rational functions f_{r,s}(x) and their Taylor coefficients at 0,
//! including the cases 2s < r where factors move into the numerator.
//!
//! ```sh
//! cargo run --example frs_taylor
//! ```

use supercong::arith::{rat, Rational};
use supercong::identities::{catalan_term, frs_series, frs_taylor_sides, frs_value, FrsSpec};

fn show(c: &[Rational]) -> String {
    let parts: Vec<String> = c.iter().map(|q| q.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn main() -> supercong::Result<()> {
    let r = 4;
    for s in 0..=r {
        let spec = FrsSpec::new(r, s)?;
        println!(
            "f_{{{r},{s}}}: series {}  f(0) = {}  f(3) = {}",
            frs_series(spec, 3),
            catalan_term(r as i64, s as i64),
            frs_value(spec, &rat(3))?
        );
    }

    // Sum over s against the closed form, at order 3 and at order 6.
    for order in [3, 6] {
        let cmp = frs_taylor_sides(r, order);
        println!(
            "order {order}: sum {}  closed {}  shifted {}  holds = {}",
            show(&cmp.series),
            show(&cmp.closed_form),
            show(&cmp.shifted_form),
            cmp.holds()
        );
    }

    // A pole is reported, not divided through.
    let spec = FrsSpec::new(3, 0)?;
    if let Err(e) = frs_value(spec, &rat(-1)) {
        println!("f_{{3,0}}(-1): {e}");
    }
    Ok(())
}
