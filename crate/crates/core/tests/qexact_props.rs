mod common;

use common::*;
use compknot::qexact::laurent::{Subst, A, Q, T};
use compknot::qexact::{int, parse_poly, write_poly, LaurentQTA, PolyFile};
use compknot::verify::checks::{connection_map, superduality_map};
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_axioms(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(ring_laws(&a, &b, &c), Ok(()));
    }

    #[test]
    fn exact_division_round_trip(p in poly3(), d in nonzero_poly3()) {
        prop_assert_eq!(division_round_trip(&p, &d), Ok(()));
    }

    #[test]
    fn non_multiples_are_rejected(p in nonzero_poly3()) {
        // 1 + t never divides a polynomial whose value at t = −1 is nonzero
        let d = LaurentQTA::one() + LaurentQTA::qta(1, int(0), int(1), int(0));
        let m: [Subst<3>; 3] = [Subst::var(A), Subst::var(Q), Subst::constant(-1)];
        let at = p.substitute(&m);
        prop_assume!(at.map(|v| !v.is_zero()).unwrap_or(false));
        prop_assert!(p.exact_divide(&d).is_err());
    }

    #[test]
    fn substitution_is_multiplicative(a in poly3(), b in poly3()) {
        for m in [superduality_map()] {
            let lhs = (&a * &b).substitute(&m).unwrap();
            let rhs = &a.substitute(&m).unwrap() * &b.substitute(&m).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        let lhs = (&a * &b).substitute(&connection_map()).unwrap();
        let rhs = &a.substitute(&connection_map()).unwrap() * &b.substitute(&connection_map()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tilde_normalize_recovers(p in nonzero_poly3()) {
        let (n, m) = p.tilde_normalize();
        prop_assert_eq!(n.mul_monomial(&1.into(), &m), p.clone());
        for v in [A, Q, T] {
            prop_assert_eq!(n.min_exp(v), Some(int(0)));
        }
    }

    #[test]
    fn term_file_round_trip(p in poly3()) {
        let f = PolyFile { two_var: false, comments: vec!["id x".into()], poly: p };
        let text = write_poly(&f);
        let back = parse_poly(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(write_poly(&back), text);
    }
}

#[test]
fn bracket_finite_rank_consistency() {
    brackets_all().unwrap();
}
