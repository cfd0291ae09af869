use ipd_classes::{ExpLaurent, Monomial, YPolynomial};
use proptest::prelude::*;

fn ypoly() -> impl Strategy<Value = YPolynomial> {
    proptest::collection::vec((-3i64..=3, proptest::collection::vec((1usize..=4, 0u32..=2), 0..3)), 0..4).prop_map(
        |terms| {
            let mut p = YPolynomial::zero();
            for (c, m) in terms {
                p.add_term(Monomial::from_pairs(m), c);
            }
            p
        },
    )
}

fn laurent() -> impl Strategy<Value = ExpLaurent> {
    proptest::collection::vec((-3i64..=3, proptest::collection::vec((1usize..=4, -2i32..=2), 0..3)), 0..4).prop_map(
        |terms| {
            let mut p = ExpLaurent::zero();
            for (c, m) in terms {
                p.add_term(Monomial::from_pairs(m), c);
            }
            p
        },
    )
}

proptest! {
    #[test]
    fn polynomial_ring_laws(a in ypoly(), b in ypoly(), c in ypoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &YPolynomial::one(), a.clone());
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn setting_exponentials_to_one_is_a_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
        prop_assert_eq!((&a + &b).at_one(), a.at_one() + b.at_one());
    }

    #[test]
    fn lowest_degree_part_is_multiplicative(a in laurent(), b in laurent()) {
        let bound = 8;
        if let (Some(la), Some(lb)) = (a.lowest_degree_under(bound), b.lowest_degree_under(bound)) {
            prop_assert_eq!((&a * &b).lowest_degree_under(2 * bound), Some(&la * &lb));
        }
    }

    #[test]
    fn json_round_trip(a in laurent(), p in ypoly()) {
        let back: ExpLaurent = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
        let back: YPolynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}
