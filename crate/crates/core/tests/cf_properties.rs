use engel_core::cf::{self, CfExpansion};
use engel_core::sequence;
use engel_core::{BitBudget, FactorSequence, Integer, Rational};
use proptest::prelude::*;

fn ints(v: &[u64]) -> Vec<Integer> {
    v.iter().map(|&a| Integer::from(a)).collect()
}

/// Backward evaluation that tolerates interior zeros.
fn raw_value(a: &[u64]) -> Rational {
    let mut v = Rational::from(*a.last().unwrap());
    for &aj in a[..a.len() - 1].iter().rev() {
        v = Rational::from(aj) + v.recip();
    }
    v
}

fn coeffs() -> impl Strategy<Value = Vec<u64>> {
    (0u64..=1_000_000, prop::collection::vec(1u64..=1_000_000, 0..30)).prop_map(|(a0, mut rest)| {
        rest.insert(0, a0);
        rest
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn determinant_alternates(a in coeffs()) {
        let t = cf::convergents(&CfExpansion::from_u64s(&a).unwrap()).unwrap();
        for j in 0..a.len() {
            let expected = if j % 2 == 0 { -1 } else { 1 };
            prop_assert_eq!(t.determinant(j), expected);
        }
        let (p, q) = t.last().clone();
        prop_assert_eq!(Rational::from((p, q)), raw_value(&a));
    }

    #[test]
    fn expand_evaluate_round_trip(a in coeffs()) {
        let e = CfExpansion::from_u64s(&a).unwrap();
        let back = cf::expand_rational(&cf::evaluate(&e).unwrap()).unwrap();
        prop_assert!(back.is_canonical());
        prop_assert_eq!(back, cf::canonicalize_tail(ints(&a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn zero_removal_keeps_value(
        a in prop::collection::vec(0u64..=50, 2..25),
        last in 1u64..=50,
        a0 in 0u64..=5,
    ) {
        let mut raw = a;
        raw[0] = a0;
        raw.push(last);
        let value = raw_value(&raw);
        let (stripped, removed) = cf::remove_zeros(ints(&raw)).unwrap();
        prop_assert_eq!(stripped.len(), raw.len() - 2 * removed);
        let normalized = cf::normalize_zeros(ints(&raw)).unwrap();
        prop_assert!(normalized.is_canonical());
        prop_assert_eq!(cf::evaluate(&normalized).unwrap(), value.clone());
        prop_assert_eq!(normalized, cf::expand_rational(&value).unwrap());
    }

    #[test]
    fn factors_and_terms_round_trip(z in prop::collection::vec(1u64..=12, 1..6), z2 in 2u64..=12) {
        let mut z = z;
        z[0] = z2;
        let zs = FactorSequence::from_u64s(&z).unwrap();
        let x = sequence::from_factors(&zs, z.len() + 1, &BitBudget::default()).unwrap();
        prop_assert_eq!(sequence::factors_from_sequence(x.terms()).unwrap(), zs);
        let again = sequence::from_factors(&x.factors(), x.len(), &BitBudget::default()).unwrap();
        prop_assert_eq!(again, x);
    }
}

#[test]
fn parse_display_round_trip() {
    for s in ["[1]", "[1;2,1,8,3]", "[0;5]"] {
        let e: CfExpansion = s.parse().unwrap();
        assert_eq!(e.to_string(), s);
    }
}
