mod common;

use common::kostka_brute;
use compknot::macdonald::{dual_partition, duality_check, evaluation_formula, macdonald_p, principal_specialization, schur_polynomial, QTFraction};
use compknot::partitions::Partition;
use proptest::prelude::*;

fn case() -> impl Strategy<Value = (Partition, usize)> {
    (1usize..=3).prop_flat_map(|n| {
        let ps: Vec<Partition> = (0..=3).flat_map(|s| Partition::all_of_size_with_max_len(s, n)).collect();
        (prop::sample::select(ps), Just(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn schur_coefficients_are_kostka((l, n) in case()) {
        let s = schur_polynomial(&l, n);
        for k in Partition::all_of_size_with_max_len(l.size(), n) {
            let mut key: Vec<i64> = k.rows().iter().map(|&x| x as i64).collect();
            key.resize(n, 0);
            let want = kostka_brute(l.rows(), k.rows()) as i64;
            prop_assert_eq!(s.coeff(&key), QTFraction::from_poly(compknot::qexact::LaurentQTA::constant(want.into())));
        }
    }

    #[test]
    fn macdonald_is_monic_and_degenerates((l, n) in case()) {
        let p = macdonald_p(&l, n).unwrap();
        let mut key: Vec<i64> = l.rows().iter().map(|&x| x as i64).collect();
        key.resize(n, 0);
        prop_assert_eq!(p.coeff(&key), QTFraction::one());
        prop_assert_eq!(p.at_t_equals_q().unwrap(), schur_polynomial(&l, n));
    }

    #[test]
    fn duality_and_evaluation((l, n) in case()) {
        if dual_partition(&l, n).size() <= 4 {
            prop_assert!(duality_check(&l, n).unwrap().holds());
        }
        if l.len() < n {
            let p = macdonald_p(&l, n).unwrap();
            prop_assert_eq!(principal_specialization(&p, n), evaluation_formula(&l, n - 1).unwrap());
        }
    }
}
