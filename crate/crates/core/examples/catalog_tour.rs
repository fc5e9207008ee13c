//! Every congruence in the catalog, run once at a single prime.
//!
//! ```sh
//! cargo run --example catalog_tour -- 11
//! ```

use supercong::congruences::{catalog, instances, run_check, SamplingPolicy};

fn main() -> supercong::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("prime argument"))
        .unwrap_or(7);
    for spec in catalog() {
        let insts = instances(spec, &[p], &[1, 2, 3], &SamplingPolicy::default());
        let Some((_, first)) = insts.first() else {
            println!("{:<16} (no admissible instance at p={p})", spec.name);
            continue;
        };
        let passed = insts
            .iter()
            .map(|(p, inst)| run_check(spec.name, *p, inst).map(|r| r.pass))
            .collect::<supercong::Result<Vec<_>>>()?
            .into_iter()
            .filter(|&b| b)
            .count();
        println!(
            "{:<16} mod p^{}  {passed:>3}/{:<3} {}{}",
            spec.name,
            spec.exponent(p, first),
            insts.len(),
            spec.statement,
            if spec.quoted { "  [quoted]" } else { "" }
        );
    }
    Ok(())
}
