mod common;

use common::*;
use compknot::partitions::Partition;
use compknot::symfunc::{kostka, lr_coefficient, schur_product};
use proptest::prelude::*;

#[test]
fn kostka_oracle_sanity() {
    assert_eq!(kostka_brute(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(kostka_brute(&[3, 2, 1], &[1; 6]), 16);
    assert_eq!(plethysm_oracle(&[1], 2).into_iter().collect::<Vec<_>>(), vec![(vec![1, 1], -1), (vec![2], 1)]);
}

#[test]
fn plethysm_matches_monomial_oracle() {
    assert_eq!(plethysm_all().unwrap(), 18);
}

#[test]
fn composite_adams_matches_finite_rank_characters() {
    assert!(composite_adams_all().unwrap() > 0);
}

fn small_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| prop::sample::select(Partition::all_of_size(n)))
}

proptest! {
    #[test]
    fn kostka_agrees((l, m) in (0usize..=6).prop_flat_map(|n| {
        let ps = Partition::all_of_size(n);
        (prop::sample::select(ps.clone()), prop::sample::select(ps))
    })) {
        prop_assert_eq!(kostka(&l, m.rows()), kostka_brute(l.rows(), m.rows()));
    }

    #[test]
    fn schur_product_is_commutative_and_lr(a in small_partition(3), b in small_partition(3)) {
        let ab = schur_product(&a, &b);
        prop_assert_eq!(&ab, &schur_product(&b, &a));
        for (nu, c) in ab.iter() {
            prop_assert_eq!(*c as u64, lr_coefficient(&a, &b, nu));
        }
    }
}
