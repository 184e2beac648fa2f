use nondeg_core::lattice::{
    canonical_primitive_sequence_with_weights, content, denominator_beta, determinant_alpha,
    negative_cf, Rational,
};
use nondeg_core::{IntVec3, UnitChoice};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn primitive() -> impl Strategy<Value = IntVec3> {
    (0i64..25, 0i64..25, 0i64..25)
        .prop_map(|(x, y, z)| IntVec3::new(x, y, z))
        .prop_filter("primitive", |v| v.is_primitive())
}

fn pair() -> impl Strategy<Value = (IntVec3, IntVec3)> {
    (primitive(), primitive()).prop_filter("independent", |(a, b)| !a.cross(b).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cf_round_trip(alpha in 1i64..400, beta in 1i64..400) {
        prop_assume!(beta <= alpha && alpha.gcd(&beta) == 1);
        let cf = negative_cf(&BigInt::from(alpha), &BigInt::from(beta)).unwrap();
        prop_assert_eq!(cf.evaluate(), Some(Rational::new(alpha.into(), beta.into())));
        prop_assert!(cf.terms().iter().all(|b| *b >= BigInt::from(2)) || alpha == beta);
    }

    #[test]
    fn alpha_is_symmetric((a, b) in pair()) {
        prop_assert_eq!(determinant_alpha(&a, &b).unwrap(), determinant_alpha(&b, &a).unwrap());
    }

    #[test]
    fn beta_is_the_unique_solution((a, b) in pair()) {
        let alpha = determinant_alpha(&a, &b).unwrap();
        prop_assume!(alpha > BigInt::from(1));
        let beta = denominator_beta(&a, &b, UnitChoice::Zero).unwrap();
        let hits: Vec<i64> = (0..alpha.clone().try_into().unwrap())
            .filter(|&k| content(&(&(&BigInt::from(k) * &a) + &b)) == alpha)
            .collect();
        prop_assert_eq!(hits, vec![i64::try_from(beta).unwrap()]);
    }

    #[test]
    fn primitive_sequence_recursion((a, b) in pair()) {
        let (seq, weights) = canonical_primitive_sequence_with_weights(&a, &b, UnitChoice::Zero).unwrap();
        prop_assert_eq!(seq.len(), weights.len());
        let mut chain = vec![a.clone()];
        chain.extend(seq.iter().cloned());
        chain.push(b.clone());
        for i in 1..chain.len() - 1 {
            prop_assert!(chain[i].is_primitive());
            prop_assert_eq!(&chain[i - 1] + &chain[i + 1], chain[i].scale(&weights[i - 1]));
        }
        for w in chain.windows(2) {
            prop_assert_eq!(content(&w[0].cross(&w[1])), BigInt::from(1));
        }
    }
}
