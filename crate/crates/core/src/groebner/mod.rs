//! Ideal arithmetic in `k[X]` on top of Buchberger's algorithm.

mod buchberger;
mod dimension;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, PolyRing, Polynomial, MAX_VARS};

pub use buchberger::{buchberger, normal_form, reduce_basis};
pub use dimension::{dimension_of_leading_terms, DimensionCertificate};

/// An ideal of `k[X]` given by generators, with a lazily computed reduced
/// Gröbner basis under the ring's order.
///
/// The basis cache is write-once. Concurrent first requests may both run
/// Buchberger, but the reduced basis is canonical so they agree.
#[derive(Clone)]
pub struct PolyIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.render(g)).collect();
        write!(f, "PolyIdeal({})", gens.join(", "))
    }
}

/// Picks a variable name not used by `ring`, for auxiliary constructions.
fn fresh_name(ring: &PolyRing) -> String {
    (0..).map(|i| format!("_aux{i}")).find(|n| ring.var_index(n).is_none()).expect("infinitely many candidates")
}

/// Builds `k[t, X]` with `t` in its own leading block and the embedding of
/// `X` into it.
fn with_leading_aux(ring: &PolyRing) -> Result<(PolyRing, Vec<Option<usize>>)> {
    if ring.nvars() + 1 > MAX_VARS {
        return Err(Error::VariableCap(ring.nvars() + 1));
    }
    let mut vars = vec![fresh_name(ring)];
    vars.extend(ring.var_names().iter().cloned());
    let ext = PolyRing::new(ring.field(), vars, MonomialOrder::Block(1))?;
    let map = (0..ring.nvars()).map(|i| Some(i + 1)).collect();
    Ok((ext, map))
}

impl PolyIdeal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        let gens = gens.iter().map(|g| ring.normalize(g)).filter(|g| !g.is_zero()).collect();
        PolyIdeal { ring, gens, gb: OnceLock::new() }
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        PolyIdeal::new(ring, Vec::new())
    }

    pub fn unit(ring: Arc<PolyRing>) -> Self {
        let one = ring.one();
        PolyIdeal::new(ring, vec![one])
    }

    /// Parses a comma-separated generator list.
    pub fn parse(ring: Arc<PolyRing>, src: &str) -> Result<Self> {
        let gens = ring.parse_list(src)?;
        Ok(PolyIdeal::new(ring, gens))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn same_ring(&self, other: &PolyIdeal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::structural("ideals live in different rings"));
        }
        Ok(())
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.gens)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.first().is_some_and(|g| g.is_constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the ideal is generated by monomials (its reduced basis is).
    pub fn is_monomial(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().all(|g| g.is_monomial()))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(&self.ring, &self.ring.normalize(f), self.groebner_basis()?)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &PolyIdeal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn ideal_equal(&self, other: &PolyIdeal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(PolyIdeal::new(self.ring.clone(), gens))
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> PolyIdeal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        PolyIdeal::new(self.ring.clone(), gens)
    }

    /// Product ideal; generators are reduced to the Gröbner basis of the
    /// pairwise products to keep powers small.
    pub fn product(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(self.ring.mul(a, b)?);
            }
        }
        let gb = buchberger(&self.ring, &gens)?;
        Ok(PolyIdeal::new(self.ring.clone(), gb))
    }

    /// `I ∩ k[remaining variables]`, returned in the ring of the remaining
    /// variables (original relative order, same order kind).
    pub fn eliminate(&self, drop: &[usize]) -> Result<PolyIdeal> {
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let mut perm: Vec<usize> = drop.to_vec();
        perm.sort_unstable();
        perm.dedup();
        let k = perm.len();
        perm.extend(keep.iter().copied());
        let names: Vec<String> = perm.iter().map(|&i| self.ring.var_names()[i].clone()).collect();
        let elim = PolyRing::new(self.ring.field(), names, MonomialOrder::Block(k))?;
        let mut to_elim = vec![None; n];
        for (pos, &i) in perm.iter().enumerate() {
            to_elim[i] = Some(pos);
        }
        let gens: Vec<Polynomial> =
            self.gens.iter().map(|g| self.ring.map_into(g, &elim, &to_elim).expect("total map")).collect();
        let gb = buchberger(&elim, &gens)?;

        let small = Arc::new(PolyRing::new(
            self.ring.field(),
            keep.iter().map(|&i| self.ring.var_names()[i].clone()).collect(),
            self.ring.order(),
        )?);
        let back: Vec<Option<usize>> = (0..elim.nvars()).map(|pos| pos.checked_sub(k)).collect();
        let kept = gb.iter().filter_map(|g| elim.map_into(g, &small, &back)).collect();
        Ok(PolyIdeal::new(small, kept))
    }

    /// `I ∩ J` via `t·I + (1 − t)·J` and elimination of `t`.
    pub fn intersect(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(PolyIdeal::zero(self.ring.clone()));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let (ext, map) = with_leading_aux(&self.ring)?;
        let t = ext.var(0);
        let one_minus_t = ext.sub(&ext.one(), &t);
        let mut gens = Vec::new();
        for g in self.groebner_basis()? {
            gens.push(ext.mul(&t, &self.ring.map_into(g, &ext, &map).unwrap())?);
        }
        for g in other.groebner_basis()? {
            gens.push(ext.mul(&one_minus_t, &self.ring.map_into(g, &ext, &map).unwrap())?);
        }
        let gb = buchberger(&ext, &gens)?;
        let back: Vec<Option<usize>> = (0..ext.nvars()).map(|pos| pos.checked_sub(1)).collect();
        let kept = gb.iter().filter_map(|g| ext.map_into(g, &self.ring, &back)).collect();
        Ok(PolyIdeal::new(self.ring.clone(), kept))
    }

    /// `(I : f) = {g : g·f ∈ I}`, from `I ∩ (f)` divided by `f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<PolyIdeal> {
        let f = self.ring.normalize(f);
        if f.is_zero() {
            return Err(Error::DivisionByZero("colon"));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        if self.contains(&f)? {
            return Ok(PolyIdeal::unit(self.ring.clone()));
        }
        let principal = PolyIdeal::new(self.ring.clone(), vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::new();
        for h in meet.groebner_basis()? {
            let q = self
                .ring
                .div_exact(h, &f)?
                .ok_or_else(|| Error::structural("intersection with (f) not divisible by f"))?;
            gens.push(q);
        }
        Ok(PolyIdeal::new(self.ring.clone(), gens))
    }

    /// `(I : J) = ∩ (I : g)` over the generators of `J`.
    pub fn colon(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.same_ring(other)?;
        let mut acc = PolyIdeal::unit(self.ring.clone());
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            acc = acc.intersect(&c)?;
        }
        Ok(acc)
    }

    /// `(I : f^∞)` by iterated colon until the chain stabilizes.
    pub fn saturation_iterated(&self, f: &Polynomial) -> Result<PolyIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_poly(f)?;
            // cur ⊆ next always holds, so one inclusion decides equality
            if cur.contains_ideal(&next)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `(I : f^∞) = (I + (1 − t·f)) ∩ k[X]`.
    pub fn saturation_rabinowitsch(&self, f: &Polynomial) -> Result<PolyIdeal> {
        let f = self.ring.normalize(f);
        if f.is_zero() {
            return Err(Error::DivisionByZero("saturation"));
        }
        let (ext, map) = with_leading_aux(&self.ring)?;
        let tf = ext.mul(&ext.var(0), &self.ring.map_into(&f, &ext, &map).unwrap())?;
        let mut gens = vec![ext.sub(&ext.one(), &tf)];
        for g in &self.gens {
            gens.push(self.ring.map_into(g, &ext, &map).unwrap());
        }
        let gb = buchberger(&ext, &gens)?;
        let back: Vec<Option<usize>> = (0..ext.nvars()).map(|pos| pos.checked_sub(1)).collect();
        let kept = gb.iter().filter_map(|g| ext.map_into(g, &self.ring, &back)).collect();
        Ok(PolyIdeal::new(self.ring.clone(), kept))
    }

    /// `(I : f^∞)`. Debug builds compute it both ways and assert agreement.
    pub fn saturation(&self, f: &Polynomial) -> Result<PolyIdeal> {
        let sat = self.saturation_iterated(f)?;
        if cfg!(debug_assertions) && self.ring.nvars() < MAX_VARS {
            let other = self.saturation_rabinowitsch(f)?;
            assert!(sat.ideal_equal(&other)?, "saturation routes disagree for {self:?} by {f:?}");
        }
        Ok(sat)
    }

    /// Radical membership: `f ∈ √I` iff `1 ∈ I + (1 − t·f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        let f = self.ring.normalize(f);
        if f.is_zero() {
            return Ok(true);
        }
        let (ext, map) = with_leading_aux(&self.ring)?;
        let tf = ext.mul(&ext.var(0), &self.ring.map_into(&f, &ext, &map).unwrap())?;
        let mut gens = vec![ext.sub(&ext.one(), &tf)];
        for g in &self.gens {
            gens.push(self.ring.map_into(g, &ext, &map).unwrap());
        }
        Ok(buchberger(&ext, &gens)?.first().is_some_and(|g| g.is_constant()))
    }

    /// Krull dimension of `k[X]/I` with a maximal independent set witness.
    pub fn krull_dim(&self) -> Result<DimensionCertificate> {
        let gb = self.groebner_basis()?;
        let lms: Vec<_> = gb.iter().map(|g| *g.lm().unwrap()).collect();
        Ok(dimension_of_leading_terms(self.ring.nvars(), &lms))
    }

    /// Moves the ideal into `target` along a variable map.
    pub fn map_into(&self, target: Arc<PolyRing>, map: &[Option<usize>]) -> Result<PolyIdeal> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            gens.push(
                self.ring
                    .map_into(g, &target, map)
                    .ok_or_else(|| Error::structural("generator uses an unmapped variable"))?,
            );
        }
        Ok(PolyIdeal::new(target, gens))
    }

    pub fn render_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.render(g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        Arc::new(PolyRing::grevlex(PrimeField::new(101).unwrap(), vars).unwrap())
    }

    fn ideal(r: &Arc<PolyRing>, s: &str) -> PolyIdeal {
        PolyIdeal::parse(r.clone(), s).unwrap()
    }

    fn same(a: &PolyIdeal, b: &PolyIdeal) -> bool {
        a.ideal_equal(b).unwrap()
    }

    #[test]
    fn membership_and_equality() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, "x^2, x*y");
        assert!(i.contains(&r.parse("x^2*y").unwrap()).unwrap());
        assert!(!ideal(&r, "x*y").contains(&r.parse("x + y").unwrap()).unwrap());
        assert!(same(&i, &i));
        assert!(same(&ideal(&r, "x + y, y"), &ideal(&r, "x, y")));
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(&["t", "x", "y"]);
        let e = ideal(&r, "t - x^2, t - y").eliminate(&[0]).unwrap();
        assert_eq!(e.ring().var_names(), ["x", "y"]);
        assert!(same(&e, &PolyIdeal::parse(e.ring().clone(), "x^2 - y").unwrap()));

        let e = ideal(&r, "t").eliminate(&[0]).unwrap();
        assert!(e.groebner_basis().unwrap().is_empty());

        let i = ideal(&r, "t*x - y");
        assert!(same(&i.eliminate(&[]).unwrap(), &i));
    }

    #[test]
    fn intersect_examples() {
        let r = ring(&["x", "y"]);
        assert!(same(&ideal(&r, "x").intersect(&ideal(&r, "y")).unwrap(), &ideal(&r, "x*y")));
        let i = ideal(&r, "x^2 + y, x*y - 1");
        assert!(same(&i.intersect(&PolyIdeal::unit(r.clone())).unwrap(), &i));
        assert!(same(&i.intersect(&i).unwrap(), &i));
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let x = r.parse("x").unwrap();
        assert!(same(&ideal(&r, "x^2, x*y").colon_poly(&x).unwrap(), &ideal(&r, "x, y")));
        let i = ideal(&r, "x^3 - y, x*y");
        assert!(same(&i.colon_poly(&r.one()).unwrap(), &i));
        assert!(same(&ideal(&r, "x*y").colon_poly(&x).unwrap(), &ideal(&r, "y")));
        assert!(matches!(i.colon_poly(&Polynomial::zero()), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let xy = r.parse("x*y").unwrap();
        let s = ideal(&r, "x^2*y, x*y^2").saturation(&xy).unwrap();
        assert!(s.is_unit().unwrap());
        let s = ideal(&r, "x").saturation(&r.parse("y").unwrap()).unwrap();
        assert!(same(&s, &ideal(&r, "x")));
        let i = ideal(&r, "x^2 - y^3, x*y");
        assert!(same(&i.saturation(&r.one()).unwrap(), &i));
        assert!(i.saturation(&Polynomial::zero()).is_err());
    }

    #[test]
    fn radical_membership() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, "x^2, x*y");
        assert!(i.radical_contains(&r.parse("x").unwrap()).unwrap());
        assert!(!i.radical_contains(&r.parse("y").unwrap()).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y"]);
        let d = ideal(&r, "x*y").krull_dim().unwrap();
        assert_eq!((d.dim, d.witness.clone()), (1, vec![0]));
        assert_eq!(PolyIdeal::zero(r.clone()).krull_dim().unwrap().dim, 2);
        assert_eq!(ideal(&r, "x, y").krull_dim().unwrap().dim, 0);
        assert_eq!(PolyIdeal::unit(r.clone()).krull_dim().unwrap().dim, -1);
    }
}
