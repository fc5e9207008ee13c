use proptest::prelude::*;
use supercong::arith::{
    binomial, frac, legendre_symbol, primes_between, rat, reduce_mod, vp_int, Integer, PowerSeries,
    PrimePowerModulus, Rational, Residue, Valuation,
};
use supercong::congruences::{catalog, instances, params, run_check, SamplingPolicy};
use supercong::identities::{catalan_term, frs_series, FrsSpec};

const SMALL_PRIMES: [u64; 6] = [3, 5, 7, 11, 13, 17];

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(SMALL_PRIMES.to_vec())
}

/// A rational with `v_p >= 0`: numerator arbitrary, denominator prime to `p`.
fn p_integral(p: u64) -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..2_000).prop_map(move |(n, d)| {
        let d = if d % p as i64 == 0 { d + 1 } else { d };
        frac(n, d)
    })
}

fn add_mod(a: &Residue, b: &Residue, m: &PrimePowerModulus) -> Integer {
    (a.value() + b.value()) % m.value()
}

fn mul_mod(a: &Residue, b: &Residue, m: &PrimePowerModulus) -> Integer {
    (a.value() * b.value()) % m.value()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_is_a_ring_homomorphism(
        (p, q1, q2) in small_prime().prop_flat_map(|p| (Just(p), p_integral(p), p_integral(p))),
        k in 1u32..=4,
    ) {
        let m = PrimePowerModulus::new(p, k).unwrap();
        let r1 = reduce_mod(&q1, &m).unwrap();
        let r2 = reduce_mod(&q2, &m).unwrap();
        let sum = reduce_mod(&(&q1 + &q2), &m).unwrap();
        let product = reduce_mod(&(&q1 * &q2), &m).unwrap();
        prop_assert_eq!(sum.value(), &add_mod(&r1, &r2, &m));
        prop_assert_eq!(product.value(), &mul_mod(&r1, &r2, &m));
    }

    #[test]
    fn reduction_keeps_the_valuation(
        p in small_prime(),
        k in 2u32..=5,
        v_seed in 0u32..5,
        a in 1i64..5_000,
        b in 1i64..5_000,
        negative in any::<bool>(),
    ) {
        let v = v_seed % k;
        let fix = |n: i64| if n % p as i64 == 0 { n + 1 } else { n };
        let sign = if negative { -1 } else { 1 };
        let q = frac(sign * fix(a), fix(b)) * Rational::from_integer(Integer::from(p).pow(v));
        let m = PrimePowerModulus::new(p, k).unwrap();
        let r = reduce_mod(&q, &m).unwrap();
        let pv = Integer::from(p).pow(v);
        prop_assert!(r.value() % &pv == Integer::from(0));
        prop_assert!(r.value() % m.value() != Integer::from(0));
        prop_assert_eq!(vp_int(r.value(), p), Valuation::Finite(v as i64));
    }

    #[test]
    fn pascal_rule(n in 1u64..=60, k_seed in 0u64..=60) {
        let k = (k_seed % (n + 1)) as i64;
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn legendre_symbol_is_multiplicative(
        p in prop::sample::select(primes_between(3, 97)),
        a in -100_000i64..100_000,
        b in -100_000i64..100_000,
    ) {
        let (a, b) = (Integer::from(a), Integer::from(b));
        let ab = &a * &b;
        prop_assert_eq!(
            legendre_symbol(&a, p) * legendre_symbol(&b, p),
            legendre_symbol(&ab, p)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unit_series_times_inverse_is_one(
        c0 in (1i64..50, any::<bool>()),
        rest in prop::collection::vec((-50i64..50, 1i64..20), 4),
    ) {
        let mut coeffs = vec![frac(if c0.1 { -c0.0 } else { c0.0 }, 1)];
        coeffs.extend(rest.into_iter().map(|(n, d)| frac(n, d)));
        let a = PowerSeries::new(coeffs, 5);
        let inv = a.inv().unwrap();
        prop_assert_eq!(a.mul(&inv), PowerSeries::one(5));
    }

    #[test]
    fn frs_truncation_is_stable(r in 0u64..=25, s_seed in 0u64..=25) {
        let s = s_seed % (r + 1);
        let spec = FrsSpec::new(r, s).unwrap();
        let short = frs_series(spec, 3);
        let long = frs_series(spec, 6);
        prop_assert_eq!(&long.coeffs()[..3], short.coeffs());
        prop_assert_eq!(short.coeff(0), Rational::from_integer(catalan_term(r as i64, s as i64)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn passing_checks_pass_at_every_lower_exponent(
        index in any::<prop::sample::Index>(),
        pick in any::<prop::sample::Index>(),
        p in prop::sample::select(primes_between(5, 23)),
    ) {
        let spec = index.get(catalog());
        let insts = instances(spec, &[p], &[1, 2, 3], &SamplingPolicy::default());
        prop_assume!(!insts.is_empty());
        let (p, inst) = pick.get(&insts);
        let r = run_check(spec.name, *p, inst).unwrap();
        prop_assert!(r.pass);
        for k in 1..=r.modulus_exponent {
            prop_assert!(r.passes_at(k).unwrap());
            let lhs = r.lhs_residue.as_ref().unwrap().reduce_to(k).unwrap();
            let rhs = r.rhs_residue.as_ref().unwrap().reduce_to(k).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn thm1_depends_only_on_x_mod_p(
        p in prop::sample::select(primes_between(3, 41)),
        x in -60i64..60,
    ) {
        prop_assume!(x.rem_euclid(p as i64) != 0);
        let a = run_check("thm1", p, &params(&[("x", x)])).unwrap();
        let b = run_check("thm1", p, &params(&[("x", x + p as i64)])).unwrap();
        prop_assert!(a.pass && b.pass);
        prop_assert_eq!(a.lhs_residue, b.lhs_residue);
        prop_assert_eq!(a.rhs_residue, b.rhs_residue);
    }
}

#[test]
fn schroder_values_are_integers() {
    for n in 0..=60 {
        assert!(
            supercong::sequences::schroder(n, &rat(1)).is_integer(),
            "n = {n}"
        );
    }
}
