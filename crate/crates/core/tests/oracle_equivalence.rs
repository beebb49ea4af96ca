use engel_core::cf;
use engel_core::expansion::{self, SeriesSource};
use engel_core::sequence::{self, lift_spec};
use engel_core::{BitBudget, FactorClass, FactorSequence, Integer, Rational, RecurrenceSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_factors(rng: &mut ChaCha8Rng, z2: u64, len: usize) -> FactorSequence {
    let mut z = vec![z2];
    z.extend((1..len).map(|_| rng.gen_range(2..=20u64)));
    FactorSequence::from_u64s(&z).unwrap()
}

fn check_convergents(coeffs: &cf::CfExpansion, x_n: &Integer) {
    let t = cf::convergents(coeffs).unwrap();
    for j in 0..t.len() {
        assert_eq!(t.determinant(j), if j % 2 == 0 { -1 } else { 1 });
    }
    assert_eq!(t.last().1, *x_n);
}

#[test]
fn generic_recursion_matches_euclid() {
    let budget = BitBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let z2 = rng.gen_range(3..=20u64);
        let zs = random_factors(&mut rng, z2, 7);
        assert_eq!(zs.class(), &FactorClass::Generic);
        let x = sequence::from_factors(&zs, 7, &budget).unwrap();
        for n in 1..=7 {
            let rec = expansion::generic_partial_cf(&zs, n).unwrap();
            let euclid = expansion::oracle_partial_cf(&zs, n, &budget).unwrap();
            assert_eq!(rec, euclid, "{:?} n={n}", zs.factors());
            if n >= 2 {
                assert_eq!(rec.len(), 3 * (1 << (n - 2)) - 1);
            }
            assert!(expansion::generic_alphabet_ok(
                rec.coefficients.coeffs(),
                &zs.prefix(n - 1)
            ));
            check_convergents(&rec.coefficients, x.term(n));
        }
    }
}

#[test]
fn z2_recursion_matches_euclid() {
    let budget = BitBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let zs = random_factors(&mut rng, 2, 7);
        assert_eq!(zs.class(), &FactorClass::Z2Equals2);
        let x = sequence::from_factors(&zs, 7, &budget).unwrap();
        for n in 1..=7 {
            let rec = expansion::z2eq2_partial_cf(&zs, n).unwrap();
            let euclid = expansion::oracle_partial_cf(&zs, n, &budget).unwrap();
            assert_eq!(rec, euclid, "{:?} n={n}", zs.factors());
            if n >= 4 {
                assert_eq!(rec.len(), 5 * (1 << (n - 3)));
                assert_eq!(*rec.coefficients.coeffs().last().unwrap(), 2);
            }
            check_convergents(&rec.coefficients, x.term(n));
        }
    }
}

#[test]
fn step_identities_on_random_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let z2 = rng.gen_range(3..=20u64);
        let zs = random_factors(&mut rng, z2, 6);
        for n in 3..=6 {
            let r = expansion::verify_step_identities(&zs, n).unwrap();
            assert_eq!(r.len_next, 2 * r.len_n + 1);
        }
    }
}

#[test]
fn closed_form_numerator() {
    let budget = BitBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let len = rng.gen_range(1..=6);
        let z: Vec<u64> = std::iter::once(rng.gen_range(2..=9u64))
            .chain((1..len).map(|_| rng.gen_range(1..=9u64)))
            .collect();
        let zs = FactorSequence::from_u64s(&z).unwrap();
        let x = sequence::from_factors(&zs, len + 1, &budget).unwrap();
        for n in 1..=len + 1 {
            let s = sequence::partial_sum(&x, n).unwrap();
            assert_eq!(*s.numer(), sequence::numden_numerator(&zs, n));
            assert_eq!(s.denom(), x.term(n));
        }
    }
}

#[test]
fn u_power_partial_sums() {
    let budget = BitBudget::default();
    for u in 3..=10u64 {
        let source = SeriesSource::OnesTail(Integer::from(u));
        let zs = source.factors(7, &budget).unwrap();
        let lens: Vec<usize> = (1..=6)
            .map(|n| expansion::oracle_partial_cf(&zs, n, &budget).unwrap().len())
            .collect();
        assert_eq!(lens, [1, 2, 3, 5, 9, 17]);
        let full = expansion::oracle_partial_cf(&zs, 7, &budget).unwrap();
        assert!(expansion::ones_tail_alphabet_ok(
            full.coefficients.coeffs(),
            &Integer::from(u)
        ));
    }
    for u in 3..=10u64 {
        let u = Integer::from(u);
        for n in 1..=7 {
            let p = expansion::ones_tail_pattern_cf(&u, n, &budget).unwrap();
            let zs = SeriesSource::OnesTail(u.clone()).factors(n, &budget).unwrap();
            assert_eq!(p, expansion::oracle_partial_cf(&zs, n, &budget).unwrap());
        }
    }
    let two = Integer::from(2);
    let lens: Vec<usize> = (1..=8)
        .map(|n| expansion::ones_tail_pattern_cf(&two, n, &budget).unwrap().len())
        .collect();
    assert_eq!(lens, [1, 2, 3, 5, 7, 11, 19, 35]);
    let zs = SeriesSource::OnesTail(two).factors(6, &budget).unwrap();
    let canonical: Vec<usize> = (1..=6)
        .map(|n| expansion::oracle_partial_cf(&zs, n, &budget).unwrap().len())
        .collect();
    assert_eq!(canonical, [1, 2, 3, 4, 6, 10]);
}

#[test]
fn lift_identity() {
    let budget = BitBudget::default();
    for g in [&[1u64, 2][..], &[3], &[1, 1], &[2, 0, 1]] {
        let base = RecurrenceSpec::second_u64(3, g).unwrap();
        let lifted = lift_spec(&base).unwrap();
        let x = sequence::generate_recurrence(&base, 8, &budget).unwrap();
        let big_x = sequence::generate_recurrence(&lifted, 9, &budget).unwrap();
        for n in 0..8 {
            assert_eq!(Integer::from(&big_x[n] * &big_x[n + 1]), x[n], "G={g:?} n={n}");
        }
    }
}

#[test]
fn shallit_sums() {
    let budget = BitBudget::default();
    let u = Integer::from(3);
    let c: Vec<Integer> = [1u32, 4, 12, 33].iter().map(|&v| Integer::from(v)).collect();
    let zs = sequence::shallit_factors(&u, &c).unwrap();
    let x = sequence::from_factors(&zs, 5, &budget).unwrap();
    let mut expected = Rational::new();
    for n in 1..=5 {
        let s = sequence::partial_sum(&x, n).unwrap() - 1u32;
        assert_eq!(s, expected);
        if n <= c.len() {
            expected += Rational::from((1, Integer::from(Integer::u_pow_u(3, c[n - 1].to_u32().unwrap()))));
        }
    }
}

#[test]
fn stream_prefix_of_partial_expansions() {
    let budget = BitBudget::default();
    let source = SeriesSource::Recurrence(RecurrenceSpec::second_u64(3, &[1, 2]).unwrap());
    let s = expansion::stream(source.clone(), 40, budget).unwrap();
    let zs = source.factors(8, &budget).unwrap();
    let p = expansion::partial_cf(&zs, 8, &budget).unwrap();
    let certified = s.certified();
    assert!(certified.len() >= 41);
    assert_eq!(&p.coefficients.coeffs()[..41], &certified[..41]);
}
