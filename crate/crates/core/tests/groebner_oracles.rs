mod common;

use std::sync::Arc;

use common::{box_monomials, monomial_ideal, poly, ring, terms};
use proptest::prelude::*;
use qkrull::groebner::normal_form;
use qkrull::{MonomialIdeal, MonomialOrder, MonomialPrime, PolyIdeal, PolyRing, Polynomial};

fn vars3() -> Arc<PolyRing> {
    ring(3, &["x", "y", "z"], MonomialOrder::Grevlex)
}

fn s_poly(r: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, gm) = (*f.lm().unwrap(), *g.lm().unwrap());
    let l = fm.lcm(&gm);
    let a = r.mul_term(f, &fm.divide_into(&l).unwrap().unwrap(), 1).unwrap();
    let b = r.mul_term(g, &gm.divide_into(&l).unwrap().unwrap(), 1).unwrap();
    r.sub(&a, &b)
}

fn mono_poly(r: &Arc<PolyRing>, i: &MonomialIdeal) -> PolyIdeal {
    i.to_poly_ideal(r.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_passes_the_s_pair_test(gens in prop::collection::vec(terms(3, 2, 3), 1..4)) {
        let r = vars3();
        let i = PolyIdeal::new(r.clone(), gens.iter().map(|t| poly(&r, t)).collect());
        let gb = i.groebner_basis().unwrap().to_vec();
        for a in 0..gb.len() {
            for b in a + 1..gb.len() {
                prop_assert!(normal_form(&r, &s_poly(&r, &gb[a], &gb[b]), &gb).unwrap().is_zero());
            }
        }
        // generators reduce to zero and the basis is reduced
        for g in i.gens() {
            prop_assert!(normal_form(&r, g, &gb).unwrap().is_zero());
        }
        for (k, g) in gb.iter().enumerate() {
            let others: Vec<_> = gb.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, h)| h.clone()).collect();
            prop_assert_eq!(&normal_form(&r, g, &others).unwrap(), g);
            prop_assert_eq!(g.lt().unwrap().1, 1);
        }
    }

    #[test]
    fn normal_form_is_sound(gens in prop::collection::vec(terms(3, 2, 3), 1..3),
                            mults in prop::collection::vec(terms(3, 2, 3), 2),
                            f in terms(3, 3, 5)) {
        let r = vars3();
        let gens: Vec<_> = gens.iter().map(|t| poly(&r, t)).collect();
        let i = PolyIdeal::new(r.clone(), gens.clone());
        // explicit combinations are members
        let mut comb = Polynomial::zero();
        for (g, h) in gens.iter().zip(&mults) {
            comb = r.add(&comb, &r.mul(g, &poly(&r, h)).unwrap());
        }
        prop_assert!(i.contains(&comb).unwrap());
        // f - NF(f) is a member and NF(f) has no reducible term
        let f = poly(&r, &f);
        let nf = i.normal_form(&f).unwrap();
        prop_assert!(i.contains(&r.sub(&f, &nf)).unwrap());
        let lms: Vec<_> = i.groebner_basis().unwrap().iter().map(|g| *g.lm().unwrap()).collect();
        for (m, _) in nf.terms() {
            prop_assert!(!lms.iter().any(|l| l.divides(m)));
        }
    }

    #[test]
    fn colon_adjunction(gens in prop::collection::vec(terms(3, 2, 2), 1..3),
                        f in terms(3, 2, 2), h in terms(3, 2, 3)) {
        let r = vars3();
        let i = PolyIdeal::new(r.clone(), gens.iter().map(|t| poly(&r, t)).collect());
        let f = poly(&r, &f);
        prop_assume!(!f.is_zero());
        let colon = i.colon_poly(&f).unwrap();
        for g in colon.gens() {
            prop_assert!(i.contains(&r.mul(g, &f).unwrap()).unwrap());
        }
        let h = poly(&r, &h);
        prop_assert_eq!(colon.contains(&h).unwrap(), i.contains(&r.mul(&h, &f).unwrap()).unwrap());
        prop_assert!(colon.contains_ideal(&i).unwrap());
    }

    #[test]
    fn saturation_stabilizes(gens in prop::collection::vec(terms(3, 2, 2), 1..3), f in terms(3, 1, 2)) {
        let r = vars3();
        let i = PolyIdeal::new(r.clone(), gens.iter().map(|t| poly(&r, t)).collect());
        let f = poly(&r, &f);
        prop_assume!(!f.is_zero());
        let sat = i.saturation_iterated(&f).unwrap();
        prop_assert!(sat.ideal_equal(&i.saturation_rabinowitsch(&f).unwrap()).unwrap());
        prop_assert!(sat.colon_poly(&f).unwrap().ideal_equal(&sat).unwrap());
        prop_assert!(sat.contains_ideal(&i).unwrap());
    }

    #[test]
    fn monomial_intersection_matches_brute_force(a in monomial_ideal(3, 3, 3), b in monomial_ideal(3, 3, 3)) {
        let r = vars3();
        let gi = mono_poly(&r, &a).intersect(&mono_poly(&r, &b)).unwrap();
        let mi = a.intersect(&b);
        prop_assert!(gi.ideal_equal(&mono_poly(&r, &mi)).unwrap());
        for m in box_monomials(3, 4) {
            prop_assert_eq!(mi.contains(&m), a.contains(&m) && b.contains(&m));
        }
    }

    #[test]
    fn monomial_colon_matches_groebner(a in monomial_ideal(3, 3, 4), m in common::monomial(3, 2)) {
        let r = vars3();
        let g = mono_poly(&r, &a).colon_poly(&r.monomial(m)).unwrap();
        prop_assert!(g.ideal_equal(&mono_poly(&r, &a.colon_monomial(&m))).unwrap());
    }

    #[test]
    fn dimension_is_n_minus_minimal_cover(a in monomial_ideal(4, 3, 5)) {
        let r = ring(2, &["x", "y", "z", "w"], MonomialOrder::Grevlex);
        let d = mono_poly(&r, &a).krull_dim().unwrap();
        let cover = qkrull::monomial_ideal::minimal_transversals(&a.supports(), 4)
            .into_iter()
            .map(|t| t.count_ones() as i32)
            .min()
            .unwrap();
        prop_assert_eq!(d.dim, 4 - cover);
        prop_assert_eq!(d.witness.len() as i32, d.dim);
        // the witness is independent: no generator lives on it
        let mask: u16 = d.witness.iter().map(|&v| 1u16 << v).sum();
        prop_assert!(a.gens().iter().all(|g| g.support() & !mask != 0));
    }

    #[test]
    fn decomposition_is_sound(a in monomial_ideal(3, 3, 4)) {
        prop_assume!(!a.is_unit());
        let r = vars3();
        let dec = a.irreducible_decomposition();
        let mut acc = PolyIdeal::unit(r.clone());
        for c in &dec.components {
            prop_assert!(c.is_irreducible());
            acc = acc.intersect(&mono_poly(&r, c)).unwrap();
        }
        prop_assert!(acc.ideal_equal(&mono_poly(&r, &a)).unwrap());
        // irredundant
        for (k, c) in dec.components.iter().enumerate() {
            let rest = dec.components.iter().enumerate().filter(|(j, _)| *j != k);
            prop_assert!(!rest.into_iter().any(|(_, d)| c.contains_ideal(d)));
        }
    }

    #[test]
    fn associated_primes_match_colon_enumeration(a in monomial_ideal(3, 3, 4)) {
        prop_assume!(!a.is_unit());
        let r = vars3();
        let i = mono_poly(&r, &a);
        let mut oracle: Vec<MonomialPrime> = Vec::new();
        for m in box_monomials(3, 3) {
            let c = i.colon_poly(&r.monomial(m)).unwrap();
            let gb = c.groebner_basis().unwrap();
            if gb.iter().all(|g| g.is_monomial() && g.lm().unwrap().degree() == 1) && !c.is_unit().unwrap() {
                let p = MonomialPrime::from_mask(gb.iter().fold(0, |s, g| s | g.support()));
                if !oracle.contains(&p) {
                    oracle.push(p);
                }
            }
        }
        oracle.sort();
        prop_assert_eq!(a.associated_primes(), oracle);
    }

    #[test]
    fn variable_saturation_matches_groebner(a in monomial_ideal(3, 3, 4), mask in 0u16..8) {
        let r = vars3();
        let u = (0..3).filter(|i| mask & (1 << i) != 0).fold(r.one(), |acc, i| r.mul(&acc, &r.var(i)).unwrap());
        let g = mono_poly(&r, &a).saturation(&u).unwrap();
        prop_assert!(g.ideal_equal(&mono_poly(&r, &a.saturate_by_vars(mask))).unwrap());
    }

    #[test]
    fn radical_laws(a in monomial_ideal(4, 3, 5)) {
        let rad = a.radical();
        prop_assert_eq!(rad.radical(), rad.clone());
        prop_assert_eq!(rad.minimal_primes(), a.minimal_primes());
        let r = ring(2, &["x", "y", "z", "w"], MonomialOrder::Grevlex);
        let i = mono_poly(&r, &a);
        for g in rad.gens() {
            prop_assert!(i.radical_contains(&r.monomial(*g)).unwrap());
        }
    }
}
