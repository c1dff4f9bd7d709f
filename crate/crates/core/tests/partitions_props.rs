use compknot::partitions::{compose_at_n, kappa_composite, CompositeDiagram, Partition};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 0..5).prop_map(Partition::new)
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().kappa(), -p.kappa());
    }

    #[test]
    fn text_round_trip(l in partition(), m in partition()) {
        let c = CompositeDiagram::new(l, m);
        prop_assert_eq!(c.to_string().parse::<CompositeDiagram>().unwrap(), c.clone());
        prop_assert_eq!(c.transposed().transposed(), c.clone());
        prop_assert_eq!(c.swapped().swapped(), c);
    }

    #[test]
    fn join_contains_both(l in partition(), m in partition()) {
        let j = l.join(&m);
        prop_assert!(j.contains(&l) && j.contains(&m));
        prop_assert_eq!(j.clone(), m.join(&l));
    }

    #[test]
    fn composite_at_rank(l in partition(), m in partition(), extra in 0usize..4) {
        let c = CompositeDiagram::new(l.clone(), m.clone());
        let n = c.min_rank().max(1) + extra;
        let p = compose_at_n(&l, &m, n).unwrap();
        prop_assert!(p.len() <= n);
        if !l.is_empty() {
            prop_assert!(p.len() < n);
        }
        prop_assert_eq!(num_rational::Rational64::from_integer(p.size() as i64), c.size_poly().eval(n as i64));
        prop_assert_eq!(num_rational::Rational64::from_integer(p.kappa()), kappa_composite(&l, &m).eval(n as i64));
        if c.min_rank() > 0 {
            prop_assert!(compose_at_n(&l, &m, c.min_rank() - 1).is_err());
        }
    }
}
