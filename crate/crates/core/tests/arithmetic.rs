mod common;

use common::{monomial, poly, ring, terms};
use proptest::prelude::*;
use qkrull::MonomialOrder;

const ORDERS: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::Grevlex, MonomialOrder::Block(1)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(p in prop::sample::select(vec![2u64, 5, 101]),
                   a in terms(3, 3, 5), b in terms(3, 3, 5), c in terms(3, 3, 5)) {
        let r = ring(p, &["x", "y", "z"], MonomialOrder::Grevlex);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.mul(&a, &b).unwrap(), r.mul(&b, &a).unwrap());
        prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
        prop_assert_eq!(
            r.mul(&r.mul(&a, &b).unwrap(), &c).unwrap(),
            r.mul(&a, &r.mul(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            r.mul(&a, &r.add(&b, &c)).unwrap(),
            r.add(&r.mul(&a, &b).unwrap(), &r.mul(&a, &c).unwrap())
        );
        prop_assert!(r.add(&a, &r.neg(&a)).is_zero());
        prop_assert_eq!(r.mul(&a, &r.one()).unwrap(), a.clone());
        prop_assert_eq!(r.sub(&a, &b), r.add(&a, &r.neg(&b)));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in terms(3, 2, 4), b in terms(3, 2, 4)) {
        let r = ring(7, &["x", "y", "z"], MonomialOrder::Grevlex);
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        prop_assume!(!b.is_zero());
        let ab = r.mul(&a, &b).unwrap();
        prop_assert_eq!(r.div_exact(&ab, &b).unwrap(), Some(a));
    }

    #[test]
    fn order_axioms(a in monomial(3, 4), b in monomial(3, 4), c in monomial(3, 4)) {
        for o in ORDERS {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            // compatible with multiplication
            prop_assert_eq!(o.cmp(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()), ab);
            // well order: 1 is the smallest monomial
            prop_assert_ne!(o.cmp(&qkrull::Monomial::one(3), &a), std::cmp::Ordering::Greater);
            // transitivity
            if ab.is_le() && o.cmp(&b, &c).is_le() {
                prop_assert!(o.cmp(&a, &c).is_le());
            }
        }
    }

    #[test]
    fn normalization_is_idempotent(a in terms(3, 3, 8)) {
        for o in ORDERS {
            let r = ring(5, &["x", "y", "z"], o);
            let f = poly(&r, &a);
            prop_assert!(r.is_normalized(&f));
            prop_assert_eq!(r.normalize(&f), f.clone());
            let terms: Vec<_> = f.terms().iter().rev().cloned().collect();
            prop_assert_eq!(r.from_terms(terms), f);
        }
    }

    #[test]
    fn render_parse_round_trip(p in prop::sample::select(vec![2u64, 5, 101]), a in terms(3, 3, 6)) {
        let r = ring(p, &["x", "y", "z"], MonomialOrder::Grevlex);
        let f = poly(&r, &a);
        prop_assert_eq!(r.parse(&r.render(&f)).unwrap(), f);
    }
}

#[test]
fn lex_and_grevlex_differ_on_xy_versus_y_cubed() {
    let r = ring(2, &["x", "y"], MonomialOrder::Lex);
    assert_eq!(r.render(&r.parse("y^3 + x*y").unwrap()), "x*y + y^3");
    let r = ring(2, &["x", "y"], MonomialOrder::Grevlex);
    assert_eq!(r.render(&r.parse("y^3 + x*y").unwrap()), "y^3 + x*y");
}
