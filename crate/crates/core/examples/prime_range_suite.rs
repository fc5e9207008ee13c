//! A parallel suite over a prime range, audited for chain consistency and
//! written out as a JSON report.
//!
//! ```sh
//! cargo run --release --example prime_range_suite
//! ```

use std::time::Instant;

use supercong::congruences::{all_check_names, chain_consistency, run_suite, RunOptions};
use supercong::report::{Format, Report, VerifyConfig};

fn main() {
    let names: Vec<String> = all_check_names(false)
        .into_iter()
        .map(String::from)
        .collect();
    let xs: Vec<i64> = (1..=5).collect();
    let options = RunOptions {
        workers: 4,
        ..RunOptions::default()
    };

    let start = Instant::now();
    let results = run_suite(&names, (5, 47), &xs, &options);
    let elapsed = start.elapsed().as_millis() as u64;

    let violations = chain_consistency(&results);
    println!(
        "{} results in {elapsed} ms, {} chain violations",
        results.len(),
        violations.len()
    );

    let config = VerifyConfig {
        primes: [5, 47],
        checks: names,
        x: xs,
        seed: options.sampling.seed,
        include_quoted: false,
        exhaustive_up_to: options.sampling.exhaustive_up_to,
        sample_size: options.sampling.sample_size,
    };
    let report = Report::new(config, &results, elapsed);
    print!("{}", report.render(Format::Human));

    let path = std::env::temp_dir().join("supercong-report.json");
    std::fs::write(&path, report.render(Format::Json)).expect("write report");
    println!("JSON report written to {}", path.display());
}
