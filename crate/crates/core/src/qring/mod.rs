//! Quotient rings `R = k[X]/I` and their q-theoretic invariants.
//!
//! All rings here are finitely presented over a field, hence Noetherian. Two
//! consequences are used throughout and recorded in every [`QAnalysis`]:
//!
//! - an ideal is semiregular iff it is dense (`ann(A) = 0`), iff it is not
//!   contained in any associated prime;
//! - the maximal q-ideals are the inclusion-maximal associated primes, so
//!   `q-dim(R) = max { ht p : p ∈ Ass(R) }`.
//!
//! Associated primes are computed combinatorially when `I` is a monomial
//! ideal. Other defining ideals need a [`SuppliedDecomposition`]; results that
//! depend on it are flagged as tainted.

mod closure;
mod content;
mod decomposition;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial_ideal::{MonomialIdeal, MonomialPrime};
use crate::poly::{PolyRing, Polynomial, MAX_VARS};

pub use content::{deg_t, split_last_variable, CqlOutcome, TPoly};
pub use decomposition::{SuppliedComponent, SuppliedDecomposition};

/// Statement attached to every report about the Noetherian shortcuts taken.
pub const NOETHERIAN_ASSUMPTION: &str = "Noetherian ring: semiregular == dense, q-Max(R) == maximal elements of Ass(R)";

/// Names tried, in order, for the variable of `R[t]`.
fn reserved_extension_names() -> impl Iterator<Item = String> {
    std::iter::once("t".to_string()).chain((1..).map(|i| format!("t{i}")))
}

/// A prime ideal of `k[X]` containing `I`, standing for a prime of `R`.
#[derive(Clone)]
pub enum PrimeRep {
    /// Generated by variables; prime by construction.
    Monomial(MonomialPrime),
    /// Primality asserted by the user; taints downstream results.
    Supplied(PolyIdeal),
}

impl PrimeRep {
    pub fn is_tainted(&self) -> bool {
        matches!(self, PrimeRep::Supplied(_))
    }

    pub fn to_poly_ideal(&self, ring: &Arc<PolyRing>) -> PolyIdeal {
        match self {
            PrimeRep::Monomial(p) => p.to_poly_ideal(ring.clone()),
            PrimeRep::Supplied(p) => p.clone(),
        }
    }

    pub fn as_monomial(&self) -> Option<MonomialPrime> {
        match self {
            PrimeRep::Monomial(p) => Some(*p),
            PrimeRep::Supplied(_) => None,
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &PrimeRep, ring: &Arc<PolyRing>) -> Result<bool> {
        match (self, other) {
            (PrimeRep::Monomial(a), PrimeRep::Monomial(b)) => Ok(a.contains(b)),
            (PrimeRep::Monomial(a), PrimeRep::Supplied(b)) => Ok(b.gens().iter().all(|g| a.contains_poly(g))),
            _ => self.to_poly_ideal(ring).contains_ideal(&other.to_poly_ideal(ring)),
        }
    }

    pub fn same_as(&self, other: &PrimeRep, ring: &Arc<PolyRing>) -> Result<bool> {
        Ok(self.contains(other, ring)? && other.contains(self, ring)?)
    }

    /// `dim k[X]/p`.
    pub fn coheight(&self, ring: &Arc<PolyRing>) -> Result<i32> {
        match self {
            PrimeRep::Monomial(p) => Ok(p.coheight(ring.nvars()) as i32),
            PrimeRep::Supplied(p) => Ok(p.krull_dim()?.dim),
        }
    }

    /// Generators as text: variable names, or the reduced Gröbner basis.
    pub fn generators(&self, ring: &PolyRing) -> Result<Vec<String>> {
        match self {
            PrimeRep::Monomial(p) => Ok(p.generator_names(ring.var_names())),
            PrimeRep::Supplied(p) => Ok(p.groebner_basis()?.iter().map(|g| ring.render(g)).collect()),
        }
    }

    pub fn render(&self, ring: &PolyRing) -> Result<String> {
        let gens = self.generators(ring)?;
        Ok(if gens.is_empty() { "(0)".to_string() } else { format!("({})", gens.join(", ")) })
    }

    fn sort_key(&self, ring: &PolyRing) -> (u8, usize, Vec<usize>, Vec<String>) {
        match self {
            PrimeRep::Monomial(p) => (0, p.height(), p.vars(), Vec::new()),
            PrimeRep::Supplied(_) => (1, 0, Vec::new(), self.generators(ring).unwrap_or_default()),
        }
    }
}

impl fmt::Debug for PrimeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeRep::Monomial(p) => write!(f, "{p:?}"),
            PrimeRep::Supplied(p) => write!(f, "Supplied{p:?}"),
        }
    }
}

/// An ideal of `R`, represented by its full preimage `A ⊇ I` in `k[X]`.
#[derive(Clone, Debug)]
pub struct RIdeal {
    preimage: PolyIdeal,
}

impl RIdeal {
    pub fn preimage(&self) -> &PolyIdeal {
        &self.preimage
    }
}

/// Everything the analysis reports about a ring.
#[derive(Clone, Debug)]
pub struct QAnalysis {
    pub ass: Vec<PrimeRep>,
    pub min_primes: Vec<PrimeRep>,
    pub q_max: Vec<PrimeRep>,
    /// Heights of the associated primes, aligned with `ass`.
    pub heights: Vec<usize>,
    pub dim: i32,
    pub q_dim: usize,
    pub reduced: bool,
    pub tau_q_vnr: bool,
    /// Number of minimal primes; finiteness certifies compactness of Min(R).
    pub min_count: usize,
    pub tainted: bool,
}

impl QAnalysis {
    pub fn to_json(&self, ring: &QuotientRing) -> Result<Value> {
        let pr = ring.poly_ring();
        let list = |ps: &[PrimeRep]| -> Result<Vec<Vec<String>>> { ps.iter().map(|p| p.generators(pr)).collect() };
        let mut heights = BTreeMap::new();
        for (p, h) in self.ass.iter().zip(&self.heights) {
            heights.insert(p.render(pr)?, *h);
        }
        Ok(json!({
            "dim": self.dim,
            "q_dim": self.q_dim,
            "ass": list(&self.ass)?,
            "min": list(&self.min_primes)?,
            "q_max": list(&self.q_max)?,
            "heights": heights,
            "reduced": self.reduced,
            "tau_q_vnr": self.tau_q_vnr,
            "min_count": self.min_count,
            "tainted": self.tainted,
            "assumptions": [NOETHERIAN_ASSUMPTION],
        }))
    }
}

/// A finitely presented algebra `k[X]/I` with `I` proper.
#[derive(Clone)]
pub struct QuotientRing {
    ring: Arc<PolyRing>,
    ideal: PolyIdeal,
    monomial: Option<MonomialIdeal>,
    supplied: Option<SuppliedDecomposition>,
    ass: OnceLock<Vec<PrimeRep>>,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.presentation())
    }
}

impl QuotientRing {
    /// Builds `k[X]/(gens)`. The unit ideal is rejected.
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        let ideal = PolyIdeal::new(ring.clone(), gens);
        if ideal.is_unit()? {
            return Err(Error::structural("defining ideal is the unit ideal"));
        }
        // keep the reduced basis as the presentation
        let gb = ideal.groebner_basis()?.to_vec();
        let ideal = PolyIdeal::new(ring.clone(), gb);
        let monomial = MonomialIdeal::from_poly_ideal(&ideal)?;
        Ok(QuotientRing { ring, ideal, monomial, supplied: None, ass: OnceLock::new() })
    }

    pub fn from_monomial_ideal(ring: Arc<PolyRing>, ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.nvars() != ring.nvars() {
            return Err(Error::Arity(ideal.nvars(), ring.nvars()));
        }
        let gens = ideal.gens().iter().map(|&m| ring.monomial(m)).collect();
        QuotientRing::new(ring, gens)
    }

    /// Parses the defining ideal from a generator list.
    pub fn parse(ring: Arc<PolyRing>, gens: &str) -> Result<Self> {
        let gens = ring.parse_list(gens)?;
        QuotientRing::new(ring, gens)
    }

    /// Attaches a user-supplied primary decomposition after verifying
    /// `I = ∩ Q_j`, `I ⊆ Q_j` and `Q_j ⊆ P_j ⊆ √Q_j`.
    pub fn with_decomposition(mut self, dec: SuppliedDecomposition) -> Result<Self> {
        dec.verify(&self.ideal)?;
        self.supplied = Some(dec);
        self.ass = OnceLock::new();
        Ok(self)
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn defining_ideal(&self) -> &PolyIdeal {
        &self.ideal
    }

    pub fn monomial_ideal(&self) -> Option<&MonomialIdeal> {
        self.monomial.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }

    pub fn supplied_decomposition(&self) -> Option<&SuppliedDecomposition> {
        self.supplied.as_ref()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Records only the easy cases: `I = 0`, or `I` generated by variables.
    pub fn is_domain_hint(&self) -> bool {
        self.ideal.is_zero() || self.monomial.as_ref().is_some_and(|m| m.gens().iter().all(|g| g.degree() == 1))
    }

    /// Whether results depend on user-asserted primality.
    pub fn is_tainted(&self) -> bool {
        !self.is_monomial() && self.supplied.is_some()
    }

    pub fn presentation(&self) -> String {
        let gens: Vec<String> = self.ideal.gens().iter().map(|g| self.ring.render(g)).collect();
        format!(
            "{}[{}]/({})",
            self.ring.field(),
            self.ring.var_names().join(","),
            if gens.is_empty() { "0".to_string() } else { gens.join(", ") }
        )
    }

    /// The ideal of `R` generated by the images of `gens`.
    pub fn ideal(&self, gens: Vec<Polynomial>) -> RIdeal {
        RIdeal { preimage: self.ideal.with_generators(&gens) }
    }

    pub fn parse_ideal(&self, src: &str) -> Result<RIdeal> {
        let gens = self.ring.parse_list(src)?;
        Ok(self.ideal(gens))
    }

    /// Wraps an ambient ideal, checking that it contains `I`.
    pub fn ideal_from_preimage(&self, preimage: PolyIdeal) -> Result<RIdeal> {
        if !preimage.contains_ideal(&self.ideal)? {
            return Err(Error::structural("preimage does not contain the defining ideal"));
        }
        Ok(RIdeal { preimage })
    }

    pub fn zero_ideal(&self) -> RIdeal {
        RIdeal { preimage: self.ideal.clone() }
    }

    pub fn unit_ideal(&self) -> RIdeal {
        self.ideal(vec![self.ring.one()])
    }

    pub fn ideal_equal(&self, a: &RIdeal, b: &RIdeal) -> Result<bool> {
        a.preimage.ideal_equal(&b.preimage)
    }

    /// `a ⊆ b` in `R`.
    pub fn ideal_le(&self, a: &RIdeal, b: &RIdeal) -> Result<bool> {
        b.preimage.contains_ideal(&a.preimage)
    }

    pub fn is_zero_ideal(&self, a: &RIdeal) -> Result<bool> {
        self.ideal.contains_ideal(&a.preimage)
    }

    /// Canonical generators of an ideal of `R`: the reduced basis of the
    /// preimage, reduced modulo `I`, zeros dropped.
    pub fn ideal_generators(&self, a: &RIdeal) -> Result<Vec<Polynomial>> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in a.preimage.groebner_basis()? {
            let r = self.ideal.normal_form(g)?;
            if !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }

    pub fn render_ideal(&self, a: &RIdeal) -> Result<Vec<String>> {
        Ok(self.ideal_generators(a)?.iter().map(|g| self.ring.render(g)).collect())
    }

    pub fn monomial_prime_ideal(&self, p: MonomialPrime) -> RIdeal {
        self.ideal_from_prime(&PrimeRep::Monomial(p))
    }

    pub fn ideal_from_prime(&self, p: &PrimeRep) -> RIdeal {
        RIdeal { preimage: p.to_poly_ideal(&self.ring).with_generators(self.ideal.gens()) }
    }

    /// Reads a prime from generators: variables give a certified monomial
    /// prime, anything else is user-asserted.
    pub fn prime_from_generators(&self, gens: Vec<Polynomial>) -> Result<PrimeRep> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let mut mask = 0u16;
        let all_vars = gens.iter().all(|g| {
            let is_var = g.is_monomial() && g.lm().unwrap().degree() == 1;
            if is_var {
                mask |= g.support();
            }
            is_var
        });
        let p = if all_vars {
            PrimeRep::Monomial(MonomialPrime::from_mask(mask))
        } else {
            PrimeRep::Supplied(PolyIdeal::new(self.ring.clone(), gens))
        };
        if let PrimeRep::Supplied(ideal) = &p {
            if ideal.is_unit()? {
                return Err(Error::structural("the unit ideal is not prime"));
            }
        }
        Ok(p)
    }

    /// `(0 :_R A) = (∩_i (I : g_i)) / I`.
    pub fn annihilator(&self, a: &RIdeal) -> Result<RIdeal> {
        let mut acc = PolyIdeal::unit(self.ring.clone());
        for g in a.preimage.gens() {
            if self.ideal.contains(g)? {
                continue;
            }
            acc = acc.intersect(&self.ideal.colon_poly(g)?)?;
        }
        Ok(RIdeal { preimage: acc })
    }

    /// Dense test through the annihilator; needs no associated primes.
    pub fn is_dense_by_annihilator(&self, a: &RIdeal) -> Result<bool> {
        let ann = self.annihilator(a)?;
        self.is_zero_ideal(&ann)
    }

    /// Dense test through prime avoidance: `A ⊄ p` for every `p ∈ Ass(R)`.
    pub fn is_dense_by_ass(&self, a: &RIdeal) -> Result<bool> {
        for p in self.associated_primes()? {
            let inside = match p {
                PrimeRep::Monomial(m) => a.preimage.gens().iter().all(|g| m.contains_poly(g)),
                PrimeRep::Supplied(ref q) => q.contains_ideal(&a.preimage)?,
            };
            if inside {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(0 : A) = 0`. Uses prime avoidance when associated primes are
    /// available and the annihilator otherwise.
    pub fn is_dense(&self, a: &RIdeal) -> Result<bool> {
        if self.has_ass() {
            self.is_dense_by_ass(a)
        } else {
            self.is_dense_by_annihilator(a)
        }
    }

    /// Semiregular: contains a finitely generated dense subideal. For the
    /// Noetherian rings handled here this coincides with dense.
    pub fn is_semiregular(&self, a: &RIdeal) -> Result<bool> {
        self.is_dense(a)
    }

    fn has_ass(&self) -> bool {
        self.monomial.is_some() || self.supplied.is_some()
    }

    /// `Ass(R)`, sorted canonically.
    pub fn associated_primes(&self) -> Result<&[PrimeRep]> {
        if let Some(a) = self.ass.get() {
            return Ok(a);
        }
        let primes = if let Some(m) = &self.monomial {
            m.associated_primes().into_iter().map(PrimeRep::Monomial).collect()
        } else if let Some(dec) = &self.supplied {
            let mut out: Vec<PrimeRep> = Vec::new();
            for c in dec.components() {
                let p = PrimeRep::Supplied(c.prime.clone());
                let mut dup = false;
                for q in &out {
                    if q.same_as(&p, &self.ring)? {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    out.push(p);
                }
            }
            self.sort_primes(&mut out);
            out
        } else {
            return Err(Error::capability(
                "associated primes of a non-monomial defining ideal need a supplied primary decomposition",
            ));
        };
        Ok(self.ass.get_or_init(|| primes))
    }

    fn sort_primes(&self, ps: &mut [PrimeRep]) {
        ps.sort_by_cached_key(|p| p.sort_key(&self.ring));
    }

    fn extremal(&self, ps: &[PrimeRep], maximal: bool) -> Result<Vec<PrimeRep>> {
        let mut out = Vec::new();
        for (i, p) in ps.iter().enumerate() {
            let mut dominated = false;
            for (j, q) in ps.iter().enumerate() {
                if i == j {
                    continue;
                }
                let strict = if maximal {
                    q.contains(p, &self.ring)? && !p.contains(q, &self.ring)?
                } else {
                    p.contains(q, &self.ring)? && !q.contains(p, &self.ring)?
                };
                if strict {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    /// Minimal primes: transversals in the monomial case, minimal elements
    /// of the supplied associated primes otherwise.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeRep>> {
        if let Some(m) = &self.monomial {
            return Ok(m.minimal_primes().into_iter().map(PrimeRep::Monomial).collect());
        }
        let ass = self.associated_primes()?.to_vec();
        self.extremal(&ass, false)
    }

    /// Maximal q-ideals: the inclusion-maximal associated primes.
    pub fn q_max(&self) -> Result<Vec<PrimeRep>> {
        let ass = self.associated_primes()?.to_vec();
        self.extremal(&ass, true)
    }

    /// `ht(p/I)` as the largest `dim k[X]/q − dim k[X]/p` over minimal
    /// primes `q ⊆ p`.
    pub fn height(&self, p: &PrimeRep) -> Result<usize> {
        let contains_i = match p {
            PrimeRep::Monomial(m) => self.ideal.gens().iter().all(|g| m.contains_poly(g)),
            PrimeRep::Supplied(q) => q.contains_ideal(&self.ideal)?,
        };
        if !contains_i {
            return Err(Error::structural("prime does not contain the defining ideal"));
        }
        let dim_p = p.coheight(&self.ring)?;
        let mut best: Option<i32> = None;
        for q in self.minimal_primes()? {
            if p.contains(&q, &self.ring)? {
                let d = q.coheight(&self.ring)? - dim_p;
                best = Some(best.map_or(d, |b| b.max(d)));
            }
        }
        let h = best.ok_or_else(|| Error::structural("no minimal prime below the given prime"))?;
        if h < 0 {
            return Err(Error::structural("negative height; the supplied ideal is not prime"));
        }
        Ok(h as usize)
    }

    /// `dim R`.
    pub fn dim(&self) -> Result<i32> {
        Ok(self.ideal.krull_dim()?.dim)
    }

    /// `q-dim(R) = max { ht p : p ∈ Ass(R) }`.
    pub fn q_dim(&self) -> Result<usize> {
        let mut best = 0;
        for p in self.associated_primes()? {
            best = best.max(self.height(p)?);
        }
        debug_assert_eq!(
            best,
            self.q_max()?.iter().map(|p| self.height(p)).collect::<Result<Vec<_>>>()?.into_iter().max().unwrap_or(0)
        );
        Ok(best)
    }

    /// Enumerates the monomial primes over `I` and keeps the maximal ones
    /// contained in some associated prime.
    pub fn q_max_by_enumeration(&self) -> Result<Vec<MonomialPrime>> {
        let m = self.require_monomial("prime enumeration")?;
        let ass = m.associated_primes();
        let non_semiregular: Vec<MonomialPrime> =
            m.primes_containing().into_iter().filter(|p| ass.iter().any(|a| a.contains(p))).collect();
        Ok(non_semiregular
            .iter()
            .copied()
            .filter(|p| !non_semiregular.iter().any(|q| q != p && q.contains(p)))
            .collect())
    }

    /// q-dimension from longest descending chains in the poset of all
    /// monomial primes over `I`, started at each maximal non-semiregular one.
    pub fn q_dim_chain_oracle(&self) -> Result<usize> {
        let m = self.require_monomial("the chain oracle")?;
        let primes = m.primes_containing();
        // primes are sorted by height, so every proper subset comes earlier
        let mut longest = vec![0usize; primes.len()];
        for i in 0..primes.len() {
            for j in 0..i {
                if primes[i].contains(&primes[j]) && primes[i] != primes[j] {
                    longest[i] = longest[i].max(longest[j] + 1);
                }
            }
        }
        let tops = self.q_max_by_enumeration()?;
        Ok(primes.iter().zip(&longest).filter(|(p, _)| tops.contains(p)).map(|(_, &l)| l).max().unwrap_or(0))
    }

    fn require_monomial(&self, what: &str) -> Result<&MonomialIdeal> {
        self.monomial.as_ref().ok_or_else(|| Error::capability(format!("{what} requires a monomial defining ideal")))
    }

    /// `Nil(R)`: exact for monomial `I`, and from the supplied primes
    /// (intersection of the associated primes) otherwise.
    pub fn nilradical(&self) -> Result<RIdeal> {
        if let Some(m) = &self.monomial {
            return Ok(RIdeal { preimage: m.radical().to_poly_ideal(self.ring.clone()) });
        }
        if self.supplied.is_some() {
            let mut acc = PolyIdeal::unit(self.ring.clone());
            for p in self.minimal_primes()? {
                acc = acc.intersect(&p.to_poly_ideal(&self.ring))?;
            }
            return Ok(RIdeal { preimage: acc });
        }
        Err(Error::capability("nilradical of a non-monomial defining ideal needs a supplied decomposition"))
    }

    pub fn is_reduced(&self) -> Result<bool> {
        if let Some(m) = &self.monomial {
            return Ok(&m.radical() == m);
        }
        let nil = self.nilradical()?;
        self.is_zero_ideal(&nil)
    }

    /// `R/Nil(R) = k[X]/√I` (monomial path).
    pub fn quotient_by_nil(&self) -> Result<QuotientRing> {
        let m = self.require_monomial("quotient by the nilradical")?;
        QuotientRing::from_monomial_ideal(self.ring.clone(), &m.radical())
    }

    /// τ_q-von Neumann regular: reduced with q-dim 0.
    pub fn is_tau_q_vnr(&self) -> Result<bool> {
        let vnr = self.is_reduced()? && self.q_dim()? == 0;
        debug_assert_eq!(vnr, self.is_reduced()? && self.max_ass_are_minimal()?);
        Ok(vnr)
    }

    /// Every maximal associated prime is a minimal prime.
    pub fn max_ass_are_minimal(&self) -> Result<bool> {
        let mins = self.minimal_primes()?;
        for p in self.q_max()? {
            let mut found = false;
            for q in &mins {
                if p.same_as(q, &self.ring)? {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `R[t]` with the first free name among `t, t1, t2, …`.
    pub fn extend_poly(&self) -> Result<QuotientRing> {
        let name =
            reserved_extension_names().find(|n| self.ring.var_index(n).is_none()).expect("infinitely many names");
        self.extend_poly_named(&name)
    }

    /// `R[name]`; the name must be fresh.
    pub fn extend_poly_named(&self, name: &str) -> Result<QuotientRing> {
        if self.ring.var_index(name).is_some() {
            return Err(Error::structural(format!("extension variable `{name}` collides with a ring variable")));
        }
        if self.nvars() + 1 > MAX_VARS {
            return Err(Error::VariableCap(self.nvars() + 1));
        }
        let mut vars = self.ring.var_names().to_vec();
        vars.push(name.to_string());
        let big = Arc::new(PolyRing::new(self.ring.field(), vars, self.ring.order())?);
        let map = self.embedding();
        let ideal = self.ideal.map_into(big.clone(), &map)?;
        let mut ext = QuotientRing::new(big.clone(), ideal.gens().to_vec())?;
        if let Some(dec) = &self.supplied {
            let dec = dec.map_into(big, &map)?;
            ext = ext.with_decomposition(dec)?;
        }
        if let (Some(small), Some(large)) = (&self.monomial, &ext.monomial) {
            if small.associated_primes() != large.associated_primes() {
                return Err(Error::structural("associated primes changed under polynomial extension"));
            }
        }
        Ok(ext)
    }

    /// Variable map from this ring into its polynomial extension.
    pub fn embedding(&self) -> Vec<Option<usize>> {
        (0..self.nvars()).map(Some).collect()
    }

    /// Extends a prime of `R` to `R[t]` (same generators).
    pub fn extend_prime(&self, p: &PrimeRep, ext: &QuotientRing) -> Result<PrimeRep> {
        Ok(match p {
            PrimeRep::Monomial(m) => PrimeRep::Monomial(m.extended()),
            PrimeRep::Supplied(q) => PrimeRep::Supplied(q.map_into(ext.ring.clone(), &self.embedding())?),
        })
    }

    /// Runs the full analysis.
    pub fn analyze(&self) -> Result<QAnalysis> {
        let ass = self.associated_primes()?.to_vec();
        let min_primes = self.minimal_primes()?;
        let q_max = self.q_max()?;
        let heights = ass.iter().map(|p| self.height(p)).collect::<Result<Vec<_>>>()?;
        let q_dim = heights.iter().copied().max().unwrap_or(0);
        let reduced = self.is_reduced()?;
        let dim = self.dim()?;
        Ok(QAnalysis {
            min_count: min_primes.len(),
            tau_q_vnr: reduced && q_dim == 0,
            tainted: self.is_tainted(),
            ass,
            min_primes,
            q_max,
            heights,
            dim,
            q_dim,
            reduced,
        })
    }

    /// Compares prime lists as sets.
    pub fn same_prime_sets(&self, a: &[PrimeRep], b: &[PrimeRep]) -> Result<bool> {
        if a.len() != b.len() {
            return Ok(false);
        }
        for p in a {
            let mut hit = false;
            for q in b {
                if p.same_as(q, &self.ring)? {
                    hit = true;
                    break;
                }
            }
            if !hit {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for PrimeRep {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (PrimeRep::Monomial(a), PrimeRep::Monomial(b)) => a == b,
            (PrimeRep::Supplied(a), PrimeRep::Supplied(b)) => a.ideal_equal(b).unwrap_or(false),
            _ => false,
        }
    }
}

impl PrimeRep {
    pub fn cmp_monomial(&self, other: &PrimeRep) -> Option<Ordering> {
        Some(self.as_monomial()?.cmp(&other.as_monomial()?))
    }
}

/// `GF(2)[x, y1..yn]/(x^2, x*y1, .., x*yn)`.
pub fn embedded_prime_family(n: usize) -> Result<QuotientRing> {
    let mut vars = vec!["x".to_string()];
    vars.extend((1..=n).map(|i| format!("y{i}")));
    let ring = Arc::new(PolyRing::grevlex(crate::field::PrimeField::gf2(), &vars)?);
    let mut gens = vec!["x^2".to_string()];
    gens.extend((1..=n).map(|i| format!("x*y{i}")));
    QuotientRing::parse(ring, &gens.join(", "))
}
