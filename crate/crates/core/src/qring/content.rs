//! Polynomials over `R` in one extra variable `t`, their content ideals and
//! the Dedekind–Mertens and content q-lemma checks.

use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::poly::{Monomial, PolyRing, Polynomial};

use super::{QuotientRing, RIdeal};

/// Largest `t`-degree accepted by the content operations.
pub const MAX_T_DEGREE: usize = 8;

/// `Σ c_i t^i`, stored as `[c_0, c_1, ..]` with coefficients in `k[X]`.
pub type TPoly = Vec<Polynomial>;

/// Splits `f ∈ k[X, t]` (with `t` the last variable of `ext`) into its
/// coefficients in `k[X] = base`.
pub fn split_last_variable(ext: &PolyRing, base: &PolyRing, f: &Polynomial) -> Result<TPoly> {
    let n = base.nvars();
    if ext.nvars() != n + 1 {
        return Err(Error::Arity(ext.nvars(), n + 1));
    }
    let mut buckets: Vec<Vec<(Monomial, u32)>> = Vec::new();
    for (m, c) in f.terms() {
        let e = m.exponent(n) as usize;
        if buckets.len() <= e {
            buckets.resize(e + 1, Vec::new());
        }
        buckets[e].push((Monomial::from_exponents(&m.exponents()[..n])?, *c));
    }
    Ok(buckets.into_iter().map(|ts| base.from_terms(ts)).collect())
}

/// `deg_t` of `g` as an element of `R[t]`: coefficients in `I` do not count.
/// `None` for the zero polynomial of `R[t]`.
pub fn deg_t(ring: &QuotientRing, g: &[Polynomial]) -> Result<Option<usize>> {
    for i in (0..g.len()).rev() {
        if !ring.defining_ideal().contains(&g[i])? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Outcome of the content q-lemma check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CqlOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl QuotientRing {
    /// Coefficients reduced modulo `I`, trailing zeros removed.
    pub fn reduce_tpoly(&self, g: &[Polynomial]) -> Result<TPoly> {
        let mut out = g.iter().map(|c| self.defining_ideal().normal_form(c)).collect::<Result<TPoly>>()?;
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        Ok(out)
    }

    pub fn tpoly_mul(&self, g: &[Polynomial], f: &[Polynomial]) -> Result<TPoly> {
        if g.is_empty() || f.is_empty() {
            return Ok(Vec::new());
        }
        let ring = self.poly_ring();
        let mut out = vec![Polynomial::zero(); g.len() + f.len() - 1];
        for (i, a) in g.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b)?);
            }
        }
        self.reduce_tpoly(&out)
    }

    /// `c(g)`: the ideal of `R` generated by the coefficients.
    pub fn content(&self, g: &[Polynomial]) -> RIdeal {
        self.ideal(g.to_vec())
    }

    fn check_t_degree(&self, g: &[Polynomial]) -> Result<()> {
        if let Some(d) = deg_t(self, g)? {
            if d > MAX_T_DEGREE {
                return Err(Error::capability(format!("t-degree {d} exceeds the cap of {MAX_T_DEGREE}")));
            }
        }
        Ok(())
    }

    /// Smallest `k` with `c(g)^{k+1} c(f) = c(g)^k c(gf)` in `R`, searching
    /// `k = 0..=deg_t(f)`. Failing at every such `k` contradicts the
    /// Dedekind–Mertens lemma and is reported as an error.
    ///
    /// `c(gf) ⊆ c(g) c(f)` holds in any ring, so `c(g)^k c(gf)` always lies in
    /// `c(g)^{k+1} c(f)` and only the reverse inclusion is tested.
    pub fn dm_check(&self, g: &[Polynomial], f: &[Polynomial]) -> Result<usize> {
        self.check_t_degree(g)?;
        self.check_t_degree(f)?;
        let bound = deg_t(self, f)?.unwrap_or(0);
        let cg = self.reduced_generators(g)?;
        let cf = self.reduced_generators(f)?;
        let cgf = self.reduced_generators(&self.tpoly_mul(g, f)?)?;
        let i = self.defining_ideal();
        // generators of c(g)^k modulo I
        let mut power = vec![self.poly_ring().one()];
        for k in 0..=bound {
            let next = self.products(&power, &cg)?;
            let rhs = PolyIdeal::new(self.poly_ring().clone(), self.products(&power, &cgf)?).with_generators(i.gens());
            let mut holds = true;
            for h in self.products(&next, &cf)? {
                if !rhs.contains(&h)? {
                    holds = false;
                    break;
                }
            }
            if holds {
                return Ok(k);
            }
            power = next;
        }
        let ring = self.poly_ring();
        let show = |p: &[Polynomial]| p.iter().map(|c| ring.render(c)).collect::<Vec<_>>().join(", ");
        Err(Error::structural(format!(
            "Dedekind-Mertens identity failed for every k <= {bound} with g = [{}], f = [{}] over {}",
            show(g),
            show(f),
            self.presentation()
        )))
    }

    /// Nonzero coefficients modulo `I`, monic and deduplicated.
    fn reduced_generators(&self, g: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let ring = self.poly_ring();
        let mut out: Vec<Polynomial> = Vec::new();
        for c in g {
            let r = ring.monic(&self.defining_ideal().normal_form(c)?);
            if !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Pairwise products modulo `I`, monic and deduplicated.
    fn products(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let ring = self.poly_ring();
        let mut all = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                all.push(ring.mul(x, y)?);
            }
        }
        self.reduced_generators(&all)
    }

    /// For `c(g)` semiregular, checks `c(gf)^q = c(f)^q` by mutual generator
    /// membership. A non-semiregular `c(g)` gives a skip, not a failure.
    pub fn content_q_lemma_check(&self, g: &[Polynomial], f: &[Polynomial]) -> Result<CqlOutcome> {
        self.check_t_degree(g)?;
        self.check_t_degree(f)?;
        let cg = self.content(g);
        if !self.is_semiregular(&cg)? {
            return Ok(CqlOutcome::Skipped("c(g) is not semiregular".to_string()));
        }
        let gf = self.tpoly_mul(g, f)?;
        let cf = self.content(f);
        let cgf = self.content(&gf);
        let ring = self.poly_ring();
        for (from, into, label) in [(&gf[..], &cf, "c(gf) in c(f)^q"), (f, &cgf, "c(f) in c(gf)^q")] {
            for c in from {
                if !self.q_closure_member(into, c)? {
                    return Ok(CqlOutcome::Fail(format!("{label} fails at {}", ring.render(c))));
                }
            }
        }
        Ok(CqlOutcome::Pass)
    }
}
