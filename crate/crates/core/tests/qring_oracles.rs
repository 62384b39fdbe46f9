mod common;

use proptest::prelude::*;
use qkrull::groebner::PolyIdeal;
use qkrull::qring::embedded_prime_family;
use qkrull::verify::random::{monomials_up_to, random_monomial_ideal, random_tpoly, rng_for};
use qkrull::verify::{gen_random_monomial_ring, named_ring, CorpusSpec};
use qkrull::{MonomialIdeal, Polynomial, QuotientRing, RIdeal};

fn random_ring(seed: u64, index: u64) -> QuotientRing {
    gen_random_monomial_ring(seed, index, &CorpusSpec::default()).unwrap()
}

fn random_ideal(r: &QuotientRing, seed: u64) -> RIdeal {
    let mut rng = rng_for(seed, 7);
    let m = random_monomial_ideal(&mut rng, r.nvars(), 3, 3);
    let ring = r.poly_ring();
    r.ideal(m.gens().iter().map(|g| ring.monomial(*g)).collect())
}

/// `c(g)` in `k[X]` with `I` added, built without the checker's reductions.
fn raw_content(r: &QuotientRing, g: &[Polynomial]) -> PolyIdeal {
    PolyIdeal::new(r.poly_ring().clone(), g.to_vec()).with_generators(r.defining_ideal().gens())
}

fn power(r: &QuotientRing, a: &PolyIdeal, k: usize) -> PolyIdeal {
    let mut acc = PolyIdeal::unit(r.poly_ring().clone());
    for _ in 0..k {
        acc = acc.product(a).unwrap();
    }
    acc
}

fn raw_product(r: &QuotientRing, g: &[Polynomial], f: &[Polynomial]) -> Vec<Polynomial> {
    let ring = r.poly_ring();
    let mut out = vec![Polynomial::zero(); g.len() + f.len() - 1];
    for (i, a) in g.iter().enumerate() {
        for (j, b) in f.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(a, b).unwrap());
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dense_paths_agree(seed in 0u64..1000, index in 0u64..50) {
        let r = random_ring(seed, index);
        let a = random_ideal(&r, seed ^ index);
        prop_assert_eq!(r.is_dense_by_ass(&a).unwrap(), r.is_dense_by_annihilator(&a).unwrap());
    }

    #[test]
    fn closure_membership_matches_closure(seed in 0u64..1000, index in 0u64..50) {
        let r = random_ring(seed, index);
        let a = random_ideal(&r, seed.wrapping_mul(31) ^ index);
        let closure = r.q_closure(&a).unwrap();
        prop_assert!(r.ideal_le(&a, &closure).unwrap());
        prop_assert!(r.ideal_equal(&closure, &r.q_closure(&closure).unwrap()).unwrap());
        let ring = r.poly_ring();
        for m in monomials_up_to(r.nvars().min(3), 3) {
            let mut e = [0u16; 16];
            e[..m.exponents().len()].copy_from_slice(m.exponents());
            let m = qkrull::Monomial::from_exponents(&e[..r.nvars()]).unwrap();
            let f = ring.monomial(m);
            prop_assert_eq!(r.q_closure_member(&a, &f).unwrap(), closure.preimage().contains(&f).unwrap());
        }
    }

    #[test]
    fn q_dim_matches_chain_oracle(seed in 0u64..1000, index in 0u64..50) {
        let r = random_ring(seed, index);
        prop_assert_eq!(r.q_dim().unwrap(), r.q_dim_chain_oracle().unwrap());
        let by_enum = r.q_max_by_enumeration().unwrap();
        let q_max: Vec<_> = r.q_max().unwrap().iter().map(|p| p.as_monomial().unwrap()).collect();
        prop_assert_eq!(q_max, by_enum);
        prop_assert!(r.q_dim().unwrap() as i32 <= r.dim().unwrap());
    }

    #[test]
    fn dm_exponent_is_minimal(seed in 0u64..1000, which in 0usize..4) {
        let name = ["cross", "embedded-1", "embedded-2", "field-gf5"][which];
        let r = named_ring(name).unwrap();
        let mut rng = rng_for(seed, 11);
        let g = random_tpoly(&mut rng, r.poly_ring(), 2, 2);
        let f = random_tpoly(&mut rng, r.poly_ring(), 2, 2);
        let k = r.dm_check(&g, &f).unwrap();
        let (cg, cf, cgf) = (raw_content(&r, &g), raw_content(&r, &f), raw_content(&r, &raw_product(&r, &g, &f)));
        let i = r.defining_ideal();
        let identity = |j: usize| {
            let lhs = power(&r, &cg, j + 1).product(&cf).unwrap().sum(i).unwrap();
            let rhs = power(&r, &cg, j).product(&cgf).unwrap().sum(i).unwrap();
            lhs.ideal_equal(&rhs).unwrap()
        };
        prop_assert!(identity(k));
        if k > 0 {
            prop_assert!(!identity(k - 1));
        }
    }
}

#[test]
fn embedded_family_closure_of_zero() {
    for n in 1..=3 {
        let r = embedded_prime_family(n).unwrap();
        let z = r.zero_ideal();
        let closure = r.q_closure(&z).unwrap();
        // the unique maximal q-ideal is (x, y_1..y_n), so localizing kills nothing
        assert!(r.ideal_equal(&closure, &z).unwrap());
        assert!(r.is_q_ideal(&z).unwrap());
    }
}

#[test]
fn unit_ideal_is_its_own_closure() {
    let r = named_ring("cross").unwrap();
    let full = MonomialIdeal::unit(r.nvars());
    let unit = r.ideal_from_preimage(full.to_poly_ideal(r.poly_ring().clone())).unwrap();
    assert!(r.q_closure(&unit).unwrap().preimage().is_unit().unwrap());
}
