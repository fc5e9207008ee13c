//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use supercong::arith::{
    frac, primes_between, rat, reduce_mod, Integer, PrimePowerModulus, Rational,
};
use supercong::congruences::{
    all_check_names, chain_consistency, find, run_check, run_suite, CheckResult, Params, RunOptions,
};
use supercong::identities::{check_b4_exact, check_c9_exact, run_identity_sweeps, SweepBounds};
use supercong::sequences::{
    bernoulli_exact, bernoulli_mod, delannoy, euler_number, legendre_polynomial, path_oracle,
    schroder,
};

const BIN: &str = env!("CARGO_BIN_EXE_supercong");

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// C(n, k) by the multiplicative formula.
fn choose(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    let mut acc = Integer::from(1);
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

fn delannoy_sum(n: u64) -> Integer {
    (0..=n).map(|k| choose(n, k) * choose(n + k, k)).sum()
}

fn schroder_sum(n: u64) -> Integer {
    (0..=n)
        .map(|k| choose(n, k) * choose(n + k, k) / Integer::from(k + 1))
        .sum()
}

/// Signed secant numbers from the boustrophedon (Seidel) triangle.
fn zigzag_euler(max: usize) -> Vec<Integer> {
    let mut zigzag = vec![Integer::from(1)];
    let mut row = vec![Integer::from(1)];
    for n in 1..=max {
        let mut next = vec![Integer::from(0)];
        for k in 0..n {
            let v = next[k].clone() + row[n - 1 - k].clone();
            next.push(v);
        }
        zigzag.push(next[n].clone());
        row = next;
    }
    (0..=max)
        .map(|n| match n % 4 {
            0 => zigzag[n].clone(),
            2 => -zigzag[n].clone(),
            _ => Integer::from(0),
        })
        .collect()
}

/// `P_n(x) = 2^-n sum_k C(n,k)^2 (x-1)^(n-k) (x+1)^k`.
fn legendre_explicit(n: u64, x: &Rational) -> Rational {
    let one = rat(1);
    let mut acc = rat(0);
    for k in 0..=n {
        let c = choose(n, k);
        let term = Rational::from_integer(c.clone() * c)
            * num_pow(&(x - &one), n - k)
            * num_pow(&(x + &one), k);
        acc += term;
    }
    acc / Rational::from_integer(Integer::from(2).pow(n as u32))
}

fn num_pow(x: &Rational, e: u64) -> Rational {
    (0..e).fold(rat(1), |acc, _| acc * x)
}

fn criterion_1() -> Outcome {
    let oracle: Integer = (1..=4u64).map(|k| delannoy_sum(k) * schroder_sum(k)).sum();
    let (lhs, rhs) = find("thm2").unwrap().evaluate(5, &Params::new()).unwrap();
    let r = run_check("thm2", 5, &Params::new()).unwrap();
    let m = PrimePowerModulus::new(5, 4).unwrap();
    let expected = reduce_mod(&frac(95, 2), &m).unwrap();
    let pass = oracle == Integer::from(30360)
        && lhs == Rational::from_integer(oracle.clone())
        && rhs == frac(95, 2)
        && r.pass
        && r.lhs_residue == r.rhs_residue
        && r.rhs_residue.as_ref() == Some(&expected);
    outcome(
        pass,
        format!(
            "p=5: sum D_k S_k = {oracle}, RHS = {rhs}, residues {} / {} mod 625",
            r.lhs_residue.map(|v| v.to_string()).unwrap_or_default(),
            r.rhs_residue.map(|v| v.to_string()).unwrap_or_default()
        ),
    )
}

fn criterion_2(results: &[CheckResult], thm1_p3: &[CheckResult]) -> Outcome {
    let all: Vec<&CheckResult> = results.iter().chain(thm1_p3).collect();
    let failed = all.iter().filter(|r| !r.pass && !r.is_error()).count();
    let errored = all.iter().filter(|r| r.is_error()).count();
    let negative = all
        .iter()
        .filter(|r| {
            r.error
                .as_deref()
                .is_some_and(|e| e.contains("NegativeValuation"))
        })
        .count();
    let covered: BTreeSet<&str> = results.iter().map(|r| r.name.as_str()).collect();
    let expected: BTreeSet<&str> = all_check_names(false).into_iter().collect();
    let thm1_xs: Vec<i64> = thm1_p3.iter().map(|r| r.params["x"]).collect();
    let pass =
        failed == 0 && errored == 0 && covered == expected && thm1_xs == [1, 2, 4, 5, 7, 8, 10];
    let mut detail = format!(
        "{} instances over {} checks, p in 5..199 plus thm1 at p=3: {failed} failed, {errored} errored, {negative} NegativeValuation",
        all.len(),
        covered.len()
    );
    for r in all.iter().filter(|r| !r.pass).take(5) {
        detail.push_str(&format!(
            "\n      {} p={} {:?} {:?}",
            r.name, r.p, r.params, r.error
        ));
    }
    outcome(pass, detail)
}

fn criterion_3() -> Outcome {
    let k1 = find("k1").unwrap();
    let mut bad = Vec::new();
    let primes = primes_between(5, 199);
    for &p in &primes {
        let (lhs, rhs) = k1.evaluate(p, &Params::new()).unwrap();
        if lhs != rhs {
            bad.push(format!("k1 p={p}"));
        }
    }
    let points = [rat(1), rat(2), frac(-1, 2)];
    for n in 1..=10 {
        for x in &points {
            if !check_b4_exact(n, x) {
                bad.push(format!("b4 n={n} x={x}"));
            }
        }
    }
    for n in (3..=41).step_by(2) {
        if !check_c9_exact(n) {
            bad.push(format!("c9 n={n}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "k1 exact at {} primes, b4 at 30 points, c9 at 20 odd n; mismatches: {:?}",
            primes.len(),
            bad
        ),
    )
}

fn criterion_4() -> Outcome {
    let bounds = SweepBounds {
        max_m: 60,
        max_k: 12,
        max_n: 20,
        max_r: 40,
    };
    let outcomes = run_identity_sweeps(bounds);
    let cases: usize = outcomes.iter().map(|o| o.cases).sum();
    let failures: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.all_passed())
        .map(|o| format!("{} ({}/{})", o.name, o.passed, o.cases))
        .collect();
    let pass = outcomes.len() == 9 && failures.is_empty() && outcomes.iter().all(|o| o.cases > 0);
    outcome(
        pass,
        format!(
            "{} identities, {cases} exact cases; failing: {failures:?}",
            outcomes.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=12u64 {
        let (d, s) = path_oracle(n as usize).unwrap();
        if Rational::from_integer(d) != delannoy(n, &rat(1))
            || Rational::from_integer(s) != schroder(n, &rat(1))
        {
            bad.push(format!("paths n={n}"));
        }
    }
    let mut bernoulli_cases = 0;
    for p in primes_between(5, 60) {
        let m = PrimePowerModulus::new(p, 1).unwrap();
        for n in (0..=p as usize - 3).step_by(2) {
            bernoulli_cases += 1;
            if bernoulli_mod(n, p).unwrap() != reduce_mod(&bernoulli_exact(n), &m).unwrap() {
                bad.push(format!("bernoulli n={n} p={p}"));
            }
        }
    }
    let zigzag = zigzag_euler(10);
    for (n, e) in zigzag.iter().enumerate() {
        if &euler_number(n) != e {
            bad.push(format!("euler n={n}"));
        }
    }
    let xs = [rat(-2), frac(-1, 2), rat(0), frac(1, 3), rat(1), rat(7)];
    for n in 0..=25u64 {
        for x in &xs {
            let oracle = legendre_explicit(n, x);
            let shifted = (x - rat(1)) / rat(2);
            if delannoy(n, &shifted) != oracle || legendre_polynomial(n, x) != oracle {
                bad.push(format!("legendre n={n} x={x}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "paths n<=12, {bernoulli_cases} Bernoulli residues, Euler n<=10, Legendre 26x6 points; mismatches: {bad:?}"
        ),
    )
}

fn criterion_6(results: &[CheckResult]) -> Outcome {
    let violations = chain_consistency(results);
    let recorded = |name: &str, p: u64| {
        results
            .iter()
            .find(|r| r.name == name && r.p == p && r.params.is_empty())
    };
    let primes = primes_between(5, 199);
    let mut premised = 0;
    let mut sun_independent = true;
    for &p in &primes {
        if ["k1", "k2", "k3", "c6", "thm2"]
            .iter()
            .all(|n| recorded(n, p).is_some())
        {
            premised += 1;
        }
        if recorded("thm2", p).is_some_and(|r| r.pass) {
            let direct = run_check("conj_sun", p, &Params::new()).unwrap();
            sun_independent &= direct.pass;
        }
    }
    outcome(
        violations.is_empty() && premised == primes.len() && sun_independent,
        format!(
            "chain premises recorded at {premised}/{} primes, {} violations, conj_sun rerun independently",
            primes.len(),
            violations.len()
        ),
    )
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(BIN).args(args).output().expect("run binary");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_7() -> Outcome {
    let base = [
        "verify", "--checks", "all", "--primes", "5..61", "--format", "json",
    ];
    let (c1, one) = run_cli(&[&base[..], &["--workers", "1"]].concat());
    let (c8, eight) = run_cli(&[&base[..], &["--workers", "8"]].concat());
    let (ok, _) = run_cli(&["verify", "--checks", "thm2", "--primes", "5..5"]);
    let (bad, _) = run_cli(&[
        "verify",
        "--checks",
        "thm2",
        "--primes",
        "5..5",
        "--inject-failure",
        "thm2",
    ]);
    let (usage, _) = run_cli(&["verify", "--primes", "10..4"]);
    let identical = !one.is_empty() && one == eight;
    let pass = identical && (c1, c8, ok, bad, usage) == (0, 0, 0, 1, 2);
    outcome(
        pass,
        format!(
            "workers 1 vs 8: {} bytes, identical={identical}; exit codes pass={ok} injected={bad} usage={usage}",
            one.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let options = RunOptions::default();
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut results = run_suite(
        &names(&["sun_d_over_k2", "sun_d_sq", "wolstenholme"]),
        (5, 199),
        &[],
        &options,
    );
    let xs: Vec<i64> = (1..=10).collect();
    results.extend(run_suite(
        &names(&["guo_cube", "guo_fourth"]),
        (5, 61),
        &xs,
        &options,
    ));
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} p={} {:?}", r.name, r.p, r.params))
        .collect();
    let at5 = run_check("sun_d_over_k2", 5, &Params::new()).unwrap();
    let three = Some(Integer::from(3));
    let residues_ok = at5.lhs_residue.as_ref().map(|r| r.value().clone()) == three
        && at5.rhs_residue.as_ref().map(|r| r.value().clone()) == three;
    let guo_excluded = results
        .iter()
        .filter(|r| r.name.starts_with("guo"))
        .all(|r| {
            let x = r.params["x"];
            x % r.p as i64 != 0 && (x + 1) % r.p as i64 != 0
        });
    outcome(
        failed.is_empty() && residues_ok && guo_excluded,
        format!(
            "{} quoted instances, sun_d_over_k2 at p=5 gives {}/{} mod 5; failing: {failed:?}",
            results.len(),
            at5.lhs_residue.map(|v| v.to_string()).unwrap_or_default(),
            at5.rhs_residue.map(|v| v.to_string()).unwrap_or_default()
        ),
    )
}

fn main() {
    let start = Instant::now();
    let names: Vec<String> = all_check_names(false)
        .into_iter()
        .map(String::from)
        .collect();
    let xs: Vec<i64> = (1..=10).collect();
    let suite = run_suite(&names, (5, 199), &xs, &RunOptions::default());
    let thm1_p3 = run_suite(&["thm1".to_string()], (3, 3), &xs, &RunOptions::default());

    let criteria: Vec<Criterion> = vec![
        ("worked instance at p = 5", Box::new(criterion_1)),
        (
            "full congruence catalog",
            Box::new(|| criterion_2(&suite, &thm1_p3)),
        ),
        ("exactness upgrades", Box::new(criterion_3)),
        ("identity sweeps", Box::new(criterion_4)),
        ("oracle cross-checks", Box::new(criterion_5)),
        ("chain consistency", Box::new(|| criterion_6(&suite))),
        ("determinism and exit codes", Box::new(criterion_7)),
        ("quoted suite", Box::new(criterion_8)),
    ];

    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failures += 1;
        }
        println!(
            "criterion {} [{}] {title}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
