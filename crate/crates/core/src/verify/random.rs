//! Seeded generators for corpus rings and content-lemma draws.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::PrimeField;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::qring::{QuotientRing, TPoly};

use super::CorpusSpec;

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];
const PRIMES: [u64; 3] = [2, 3, 5];

/// Independent stream for `(seed, stream)`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A monomial of the given total degree, one unit at a time on a uniform
/// variable.
pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u16; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&exps).expect("small exponents")
}

/// Up to `max_gens` uniform monomials of degree `1..=max_deg`, minimalized.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(0..=max_gens);
    let gens = (0..count).map(|_| {
        let d = rng.gen_range(1..=max_deg);
        random_monomial(rng, nvars, d)
    });
    MonomialIdeal::new(nvars, gens.collect())
}

/// The `index`-th random corpus ring for `seed`. Generators have positive
/// degree, so the defining ideal is always proper.
pub fn gen_random_monomial_ring(seed: u64, index: u64, spec: &CorpusSpec) -> Result<QuotientRing> {
    let mut rng = rng_for(seed, index);
    let nvars = rng.gen_range(1..=spec.nvars.max(1));
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    let ideal = if spec.max_deg == 0 {
        MonomialIdeal::zero(nvars)
    } else {
        random_monomial_ideal(&mut rng, nvars, spec.max_deg, spec.max_gens)
    };
    let ring = Arc::new(PolyRing::grevlex(PrimeField::new(p)?, &VAR_NAMES[..nvars])?);
    QuotientRing::from_monomial_ideal(ring, &ideal)
}

/// A coefficient of degree at most `max_deg`: the constant term is kept with
/// probability 1/2, every other monomial with probability 1/3, each with a
/// uniform nonzero scalar.
pub fn random_coefficient(rng: &mut ChaCha8Rng, ring: &PolyRing, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let p = ring.field().characteristic();
    let mut terms = Vec::new();
    for m in monomials_up_to(n, max_deg) {
        let keep = if m.is_one() { rng.gen_bool(0.5) } else { rng.gen_ratio(1, 3) };
        if keep {
            terms.push((m, rng.gen_range(1..p)));
        }
    }
    ring.from_terms(terms)
}

/// A polynomial in `t` of degree `0..=max_t_deg` (in `k[X][t]`) with
/// coefficients from [`random_coefficient`]; the leading one is redrawn
/// until nonzero.
pub fn random_tpoly(rng: &mut ChaCha8Rng, ring: &PolyRing, max_t_deg: usize, coeff_deg: u32) -> TPoly {
    let d = rng.gen_range(0..=max_t_deg);
    let mut out: TPoly = (0..d).map(|_| random_coefficient(rng, ring, coeff_deg)).collect();
    let lead = loop {
        let c = random_coefficient(rng, ring, coeff_deg);
        if !c.is_zero() {
            break c;
        }
    };
    out.push(lead);
    out
}

/// All monomials in `nvars` variables of total degree at most `max_deg`, by
/// degree and then lexicographically.
pub fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        let mut exps = vec![0u16; nvars];
        of_degree(&mut exps, 0, d, &mut out);
    }
    out
}

fn of_degree(exps: &mut Vec<u16>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 >= exps.len() {
        if exps.is_empty() {
            if left == 0 {
                out.push(Monomial::one(0));
            }
            return;
        }
        exps[i] = left as u16;
        out.push(Monomial::from_exponents(exps).expect("small exponents"));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u16;
        of_degree(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}
