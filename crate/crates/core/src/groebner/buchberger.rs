//! Buchberger's algorithm with the normal selection strategy and both of
//! Buchberger's criteria, followed by reduction to the unique reduced basis.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::Result;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// Fully reduces `f` modulo `basis` (every term, not just the leading one).
pub fn normal_form(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let field = ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    'outer: while let Some(&(pm, pc)) = p.lt() {
        for g in basis {
            let (gm, gc) = *g.lt().expect("basis elements are nonzero");
            if gm.divides(&pm) {
                let c = field.mul(pc, field.inv(gc).expect("nonzero"));
                p = ring.add_scaled(&p, field.neg(c), &gm.quotient_of(&pm), g)?;
                continue 'outer;
            }
        }
        rem.push(p.pop_leading().expect("nonzero"));
    }
    Ok(Polynomial::from_sorted_terms(rem))
}

fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    // both inputs are monic
    let fm = f.lm().expect("nonzero");
    let gm = g.lm().expect("nonzero");
    let l = fm.lcm(gm);
    let uf = fm.divide_into(&l)?.expect("lcm multiple");
    let ug = gm.divide_into(&l)?.expect("lcm multiple");
    let a = ring.mul_term(f, &uf, 1)?;
    ring.add_scaled(&a, ring.field().neg(1), &ug, g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens` under
/// the ring's order. The output is canonical: monic, pairwise non-divisible
/// leading monomials, tail-reduced, sorted by descending leading monomial.
/// The unit ideal yields `[1]`, the zero ideal `[]`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let g = ring.monic(&ring.normalize(g));
        if g.is_zero() || basis.contains(&g) {
            continue;
        }
        if g.is_constant() {
            return Ok(vec![ring.one()]);
        }
        basis.push(g);
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let lcm = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap());
            pairs.push(Pair { i, j, lcm });
            pending.insert((i, j));
        }
    }

    // normal strategy: smallest lcm degree first, then order, then index;
    // the queue is kept sorted in reverse so the next pair is at the end
    let priority = |a: &Pair, b: &Pair| {
        a.lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| ring.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            .reverse()
    };
    pairs.sort_by(priority);

    while let Some(Pair { i, j, lcm }) = pairs.pop() {
        pending.remove(&(i, j));

        let (mi, mj) = (*basis[i].lm().unwrap(), *basis[j].lm().unwrap());
        if mi.is_coprime(&mj) {
            continue;
        }
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().unwrap().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(ring, &basis[i], &basis[j])?;
        let r = normal_form(ring, &s, &basis)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![ring.one()]);
        }
        let r = ring.monic(&r);
        let n = basis.len();
        for k in 0..n {
            let pair = Pair { i: k, j: n, lcm: basis[k].lm().unwrap().lcm(r.lm().unwrap()) };
            let at = pairs.partition_point(|p| priority(p, &pair) == Ordering::Less);
            pairs.insert(at, pair);
            pending.insert((k, n));
        }
        basis.push(r);
    }

    reduce_basis(ring, basis)
}

/// Turns any Gröbner basis into the reduced one.
pub fn reduce_basis(ring: &PolyRing, basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let mut keep: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let gm = g.lm().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.lm().unwrap();
            k != idx && hm.divides(gm) && (hm != gm || k < idx)
        });
        if !redundant {
            keep.push(ring.monic(g));
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let (head, rest) = {
            let mut g = keep[idx].clone();
            let head = g.pop_leading().unwrap();
            (head, g)
        };
        let others: Vec<Polynomial> =
            keep.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, g)| g.clone()).collect();
        let tail = normal_form(ring, &rest, &others)?;
        let mut terms = vec![head];
        terms.extend_from_slice(tail.terms());
        reduced.push(Polynomial::from_sorted_terms(terms));
    }
    reduced.sort_by(|a, b| ring.cmp(b.lm().unwrap(), a.lm().unwrap()));
    Ok(reduced)
}
