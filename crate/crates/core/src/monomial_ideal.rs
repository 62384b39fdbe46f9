//! Monomial ideals: irreducible decomposition, associated and minimal
//! primes, radicals and saturation by variables.
//!
//! Everything here is combinatorial and independent of the Gröbner engine,
//! which makes it usable both as the fast path for monomial quotient rings
//! and as an oracle for [`crate::groebner`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// A monomial ideal stored by its minimal generators.
///
/// Generators form an antichain under divisibility and are kept sorted by
/// (degree, exponent vector), so two equal ideals have identical values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents()))
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        gens.sort_by(canonical_cmp);
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(gens.len());
        // sorted by degree, so a divisor always comes first
        for g in gens {
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    pub fn from_exponents(nvars: usize, gens: &[&[u16]]) -> Result<Self> {
        let gens = gens.iter().map(|e| Monomial::from_exponents(e)).collect::<Result<Vec<_>>>()?;
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::Arity(g.nvars(), nvars));
        }
        Ok(MonomialIdeal::new(nvars, gens))
    }

    /// Reads a monomial ideal off a polynomial ideal, if it is one.
    pub fn from_poly_ideal(ideal: &PolyIdeal) -> Result<Option<Self>> {
        let gb = ideal.groebner_basis()?;
        if !gb.iter().all(|g| g.is_monomial()) {
            return Ok(None);
        }
        let gens = gb.iter().map(|g| *g.lm().unwrap()).collect();
        Ok(Some(MonomialIdeal::new(ideal.ring().nvars(), gens)))
    }

    pub fn to_poly_ideal(&self, ring: Arc<PolyRing>) -> PolyIdeal {
        let gens = self.gens.iter().map(|&m| ring.monomial(m)).collect();
        PolyIdeal::new(ring, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Whether every generator is a pure power of a single variable.
    pub fn is_irreducible(&self) -> bool {
        !self.is_unit() && self.gens.iter().all(|g| g.support().count_ones() == 1)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(I : m)` for a monomial `m`: generators `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens =
            self.gens.iter().map(|g| g.gcd(m).divide_into(g).expect("same arity").expect("gcd divides")).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Squarefree parts of the generators, re-minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let flat: Vec<u16> = g.exponents().iter().map(|&e| e.min(1)).collect();
                Monomial::from_exponents(&flat).expect("flattened exponents")
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Sets the exponents of the variables in `vars` to zero:
    /// `(I : (∏_{s ∈ vars} x_s)^∞)`.
    pub fn saturate_by_vars(&self, vars: u16) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut h = *g;
                for i in 0..self.nvars {
                    if vars & (1 << i) != 0 {
                        h = h.with_exponent(i, 0);
                    }
                }
                h
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Supports of the generators, as variable bitsets.
    pub fn supports(&self) -> Vec<u16> {
        self.gens.iter().map(|g| g.support()).collect()
    }

    /// Irredundant decomposition into irreducible monomial ideals.
    pub fn irreducible_decomposition(&self) -> Decomposition {
        if self.is_unit() {
            return Decomposition { unit: true, components: Vec::new() };
        }
        let mut memo = HashMap::new();
        let mut comps = decompose(self, &mut memo);
        comps.sort_by_cached_key(|c| c.sort_key());
        comps.dedup();
        let irredundant: Vec<MonomialIdeal> = comps
            .iter()
            .enumerate()
            .filter(|&(i, c)| !comps.iter().enumerate().any(|(j, d)| j != i && d != c && c.contains_ideal(d)))
            .map(|(_, c)| c.clone())
            .collect();
        Decomposition { unit: false, components: irredundant }
    }

    /// Associated primes: radicals of the irredundant irreducible components.
    /// The unit ideal has none.
    pub fn associated_primes(&self) -> Vec<MonomialPrime> {
        let mut primes: Vec<MonomialPrime> = self
            .irreducible_decomposition()
            .components
            .iter()
            .map(|c| MonomialPrime::from_mask(c.gens.iter().fold(0, |s, g| s | g.support())))
            .collect();
        primes.sort();
        primes.dedup();
        primes
    }

    /// Minimal primes: minimal transversals of the generator supports.
    pub fn minimal_primes(&self) -> Vec<MonomialPrime> {
        minimal_transversals(&self.supports(), self.nvars).into_iter().map(MonomialPrime::from_mask).collect()
    }

    /// Every monomial prime containing the ideal (all transversals).
    pub fn primes_containing(&self) -> Vec<MonomialPrime> {
        let supports = self.supports();
        let mut out: Vec<MonomialPrime> = (0u32..(1 << self.nvars))
            .map(|m| m as u16)
            .filter(|&m| supports.iter().all(|&s| s & m != 0))
            .map(MonomialPrime::from_mask)
            .collect();
        out.sort();
        out
    }

    /// Components sort by their radical first, then by generators.
    fn sort_key(&self) -> (MonomialPrime, Vec<Vec<u16>>) {
        let radical = MonomialPrime::from_mask(self.gens.iter().fold(0, |s, g| s | g.support()));
        (radical, self.gens.iter().map(|g| g.exponents().to_vec()).collect())
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// Result of [`MonomialIdeal::irreducible_decomposition`]. The unit ideal has
/// no components and `unit == true`; the zero ideal is its own single
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub unit: bool,
    pub components: Vec<MonomialIdeal>,
}

fn decompose(ideal: &MonomialIdeal, memo: &mut HashMap<MonomialIdeal, Vec<MonomialIdeal>>) -> Vec<MonomialIdeal> {
    if ideal.is_unit() {
        return Vec::new();
    }
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let split = ideal.gens.iter().find(|g| g.support().count_ones() > 1);
    let out = match split {
        None => vec![ideal.clone()],
        Some(m) => {
            // m = x_i^a * v with x_i the first variable of m; I = (I + x_i^a) ∩ (I + v)
            let i = m.support().trailing_zeros() as usize;
            let u = Monomial::var_power(ideal.nvars, i, m.exponent(i)).expect("existing exponent");
            let v = m.with_exponent(i, 0);
            let mut left = decompose(&ideal.with_generator(u), memo);
            left.extend(decompose(&ideal.with_generator(v), memo));
            left
        }
    };
    memo.insert(ideal.clone(), out.clone());
    out
}

/// Inclusion-minimal vertex sets hitting every edge, by bitset DFS.
pub fn minimal_transversals(edges: &[u16], nvars: usize) -> Vec<u16> {
    fn dfs(chosen: u16, edges: &[u16], nvars: usize, found: &mut Vec<u16>) {
        if found.iter().any(|&f| f & !chosen == 0) {
            // a subset already found; supersets are not minimal
            return;
        }
        match edges.iter().find(|&&e| e & chosen == 0) {
            None => found.push(chosen),
            Some(&e) => {
                for v in 0..nvars {
                    if e & (1 << v) != 0 {
                        dfs(chosen | (1 << v), edges, nvars, found);
                    }
                }
            }
        }
    }
    let mut found = Vec::new();
    dfs(0, edges, nvars, &mut found);
    let mut minimal: Vec<u16> =
        found.iter().copied().filter(|&s| !found.iter().any(|&t| t != s && t & !s == 0)).collect();
    minimal.sort_by(|a, b| MonomialPrime::from_mask(*a).cmp(&MonomialPrime::from_mask(*b)));
    minimal.dedup();
    minimal
}

/// The prime `(x_i : i ∈ vars)` of `k[X]`, stored as a variable bitset.
///
/// Ordered by height, then by the sorted list of variable indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    vars: u16,
}

impl MonomialPrime {
    pub fn from_mask(vars: u16) -> Self {
        MonomialPrime { vars }
    }

    pub fn from_vars(vars: &[usize]) -> Self {
        MonomialPrime { vars: vars.iter().fold(0, |s, &v| s | (1 << v)) }
    }

    pub fn mask(&self) -> u16 {
        self.vars
    }

    pub fn vars(&self) -> Vec<usize> {
        (0..16).filter(|i| self.vars & (1 << i) != 0).collect()
    }

    /// Height in `k[X]`.
    pub fn height(&self) -> usize {
        self.vars.count_ones() as usize
    }

    /// `dim k[X]/p`.
    pub fn coheight(&self, nvars: usize) -> usize {
        nvars - self.height()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialPrime) -> bool {
        other.vars & !self.vars == 0
    }

    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens.iter().all(|g| g.support() & self.vars != 0)
    }

    /// Whether `f` lies in the prime: every term involves a prime variable.
    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| m.support() & self.vars != 0)
    }

    /// Extension to a ring with more variables (indices are preserved).
    pub fn extended(&self) -> MonomialPrime {
        *self
    }

    pub fn to_poly_ideal(&self, ring: Arc<PolyRing>) -> PolyIdeal {
        let gens = self.vars().into_iter().map(|i| ring.var(i)).collect();
        PolyIdeal::new(ring, gens)
    }

    pub fn generator_names(&self, names: &[String]) -> Vec<String> {
        self.vars().into_iter().map(|i| names[i].clone()).collect()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.vars == 0 {
            "(0)".to_string()
        } else {
            format!("({})", self.generator_names(names).join(", "))
        }
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height().cmp(&other.height()).then_with(|| self.vars().cmp(&other.vars()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.vars())
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vars().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn p(vars: &[usize]) -> MonomialPrime {
        MonomialPrime::from_vars(vars)
    }

    #[test]
    fn antichain_canonical() {
        let a = mi(2, &[&[1, 1], &[2, 0], &[2, 1], &[1, 1]]);
        let b = mi(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.gens().len(), 2);
    }

    #[test]
    fn decomposition_examples() {
        // (x^2, xy) = (x) ∩ (x^2, y)
        let d = mi(2, &[&[2, 0], &[1, 1]]).irreducible_decomposition();
        assert!(!d.unit);
        assert_eq!(d.components, vec![mi(2, &[&[1, 0]]), mi(2, &[&[2, 0], &[0, 1]])]);
        // (xy) = (x) ∩ (y)
        let d = mi(2, &[&[1, 1]]).irreducible_decomposition();
        assert_eq!(d.components, vec![mi(2, &[&[1, 0]]), mi(2, &[&[0, 1]])]);
        // (x) is irreducible
        let d = mi(2, &[&[1, 0]]).irreducible_decomposition();
        assert_eq!(d.components, vec![mi(2, &[&[1, 0]])]);
        let d = MonomialIdeal::unit(2).irreducible_decomposition();
        assert!(d.unit && d.components.is_empty());
    }

    #[test]
    fn ass_examples() {
        assert_eq!(mi(2, &[&[2, 0], &[1, 1]]).associated_primes(), vec![p(&[0]), p(&[0, 1])]);
        assert_eq!(mi(2, &[&[1, 1]]).associated_primes(), vec![p(&[0]), p(&[1])]);
        assert_eq!(MonomialIdeal::zero(2).associated_primes(), vec![p(&[])]);
    }

    #[test]
    fn min_examples() {
        assert_eq!(mi(2, &[&[1, 1]]).minimal_primes(), vec![p(&[0]), p(&[1])]);
        assert_eq!(mi(2, &[&[2, 0], &[1, 1]]).minimal_primes(), vec![p(&[0])]);
        assert_eq!(MonomialIdeal::zero(2).minimal_primes(), vec![p(&[])]);
        assert!(MonomialIdeal::unit(2).minimal_primes().is_empty());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(mi(2, &[&[2, 0], &[1, 1]]).radical(), mi(2, &[&[1, 0]]));
        let sqf = mi(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sqf.radical(), sqf);
        assert_eq!(mi(2, &[&[3, 2]]).radical(), mi(2, &[&[1, 1]]));
    }

    #[test]
    fn saturation_examples() {
        let i = mi(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.saturate_by_vars(0b10), mi(2, &[&[1, 0]]));
        assert_eq!(i.saturate_by_vars(0), i);
        assert_eq!(mi(2, &[&[1, 1]]).saturate_by_vars(0b01), mi(2, &[&[0, 1]]));
    }

    #[test]
    fn prime_order_and_containment() {
        assert!(p(&[0]) < p(&[1]));
        assert!(p(&[1]) < p(&[0, 1]));
        assert!(p(&[0, 1]).contains(&p(&[1])));
        assert!(!p(&[0]).contains(&p(&[1])));
    }
}
