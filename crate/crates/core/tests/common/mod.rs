#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use qkrull::{Monomial, MonomialIdeal, MonomialOrder, PolyRing, Polynomial, PrimeField};

pub fn ring(p: u64, vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
    let names = vars.iter().map(|s| s.to_string()).collect();
    Arc::new(PolyRing::new(PrimeField::new(p).unwrap(), names, order).unwrap())
}

pub fn monomial(nvars: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|e| Monomial::from_exponents(&e).unwrap())
}

/// Raw terms; turned into a polynomial by the ring under test.
pub fn terms(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Vec<(Monomial, i64)>> {
    prop::collection::vec((monomial(nvars, max_exp), -50i64..50), 0..=max_terms)
}

pub fn poly(r: &PolyRing, raw: &[(Monomial, i64)]) -> Polynomial {
    let f = r.field();
    r.from_terms(raw.iter().map(|&(m, c)| (m, f.from_i64(c))).collect())
}

pub fn monomial_ideal(nvars: usize, max_exp: u16, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nvars, max_exp), 0..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(nvars, gens.into_iter().filter(|m| !m.is_one()).collect()))
}

/// Every monomial with each exponent at most `max_exp`.
pub fn box_monomials(nvars: usize, max_exp: u16) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u16>| {
                (0..=max_exp).map(move |x| {
                    let mut e = e.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out.into_iter().map(|e| Monomial::from_exponents(&e).unwrap()).collect()
}
