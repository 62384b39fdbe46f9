//! q-closure: `r ∈ A^q` iff `(A : r)` is semiregular.

use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;

use super::{PrimeRep, QuotientRing, RIdeal, SuppliedDecomposition};

impl QuotientRing {
    /// `(A :_R r)`.
    pub fn colon_element(&self, a: &RIdeal, r: &Polynomial) -> Result<RIdeal> {
        Ok(RIdeal { preimage: a.preimage.colon_poly(r)? })
    }

    /// Membership in the q-closure, straight from the definition.
    pub fn q_closure_member(&self, a: &RIdeal, r: &Polynomial) -> Result<bool> {
        if a.preimage.contains(r)? {
            return Ok(true);
        }
        // (A : r) contains A, so a semiregular A puts every r in A^q
        if self.has_ass() && self.is_dense_by_ass(a)? {
            return Ok(true);
        }
        let colon = self.colon_element(a, r)?;
        self.is_semiregular(&colon)
    }

    /// `A^q`. For monomial `I` and `A` this is the intersection over the
    /// maximal q-ideals `m` of the saturation of `A` by the variables outside
    /// `m`, i.e. of the contractions of `A R_m`. A semiregular `A` has
    /// closure `R` whatever `I` is.
    pub fn q_closure(&self, a: &RIdeal) -> Result<RIdeal> {
        if self.has_ass() && self.is_dense_by_ass(a)? {
            return Ok(self.unit_ideal());
        }
        let Some(ma) = self.monomial_preimage(a)? else {
            return Err(Error::capability(
                "q-closure of a non-monomial ideal needs a supplied primary decomposition of it",
            ));
        };
        let full: u16 = if self.nvars() == 16 { u16::MAX } else { (1u16 << self.nvars()) - 1 };
        let mut acc: Option<MonomialIdeal> = None;
        for m in self.q_max()? {
            let m = m.as_monomial().expect("monomial ring has monomial primes");
            let local = ma.saturate_by_vars(full & !m.mask());
            acc = Some(match acc {
                None => local,
                Some(x) => x.intersect(&local),
            });
        }
        let closure = acc.unwrap_or_else(|| MonomialIdeal::unit(self.nvars()));
        Ok(RIdeal { preimage: closure.to_poly_ideal(self.ring.clone()) })
    }

    /// `A^q` from a primary decomposition of the preimage of `A`: the
    /// intersection of the components whose prime lies in some maximal
    /// q-ideal.
    pub fn q_closure_from_decomposition(&self, a: &RIdeal, dec: &SuppliedDecomposition) -> Result<RIdeal> {
        dec.verify(&a.preimage)?;
        let q_max = self.q_max()?;
        let mut acc = PolyIdeal::unit(self.ring.clone());
        for c in dec.components() {
            let p = PrimeRep::Supplied(c.prime.clone());
            let mut kept = false;
            for m in &q_max {
                if m.contains(&p, &self.ring)? {
                    kept = true;
                    break;
                }
            }
            if kept {
                acc = acc.intersect(&c.primary)?;
            }
        }
        Ok(RIdeal { preimage: acc })
    }

    /// `A = A^q`. A semiregular `A` has `1 ∈ A^q`, so it is a q-ideal only
    /// when it is the unit ideal; this settles non-monomial cases too.
    pub fn is_q_ideal(&self, a: &RIdeal) -> Result<bool> {
        if self.is_semiregular(a)? {
            return a.preimage.is_unit();
        }
        let closure = self.q_closure(a)?;
        self.ideal_equal(a, &closure)
    }

    /// A prime `P` of `R` is a q-ideal iff it is not semiregular: for
    /// `r ∉ P` the colon `(P : r)` is `P` itself.
    pub fn is_q_prime(&self, p: &PrimeRep) -> Result<bool> {
        let ideal = self.ideal_from_prime(p);
        Ok(!self.is_semiregular(&ideal)?)
    }

    fn monomial_preimage(&self, a: &RIdeal) -> Result<Option<MonomialIdeal>> {
        if self.monomial.is_none() {
            return Ok(None);
        }
        MonomialIdeal::from_poly_ideal(&a.preimage)
    }
}
