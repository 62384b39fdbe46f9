//! User-supplied primary decompositions for non-monomial defining ideals.
//!
//! ```text
//! file      := block*
//! block     := "component" ":" polys ("prime" ":" polys)?
//! ```
//!
//! `prime:` gives the radical of the component; without it the component is
//! taken to be prime itself. Containments and the intersection are checked
//! exactly; primality of the radicals is trusted.

use std::sync::Arc;

use crate::error::{Error, ParseErrorKind, Result};
use crate::groebner::PolyIdeal;
use crate::poly::parse::{parse_poly_list, TokenCursor, TokenKind};
use crate::poly::PolyRing;

#[derive(Clone, Debug)]
pub struct SuppliedComponent {
    pub primary: PolyIdeal,
    pub prime: PolyIdeal,
}

#[derive(Clone, Debug)]
pub struct SuppliedDecomposition {
    components: Vec<SuppliedComponent>,
}

impl SuppliedDecomposition {
    pub fn new(components: Vec<SuppliedComponent>) -> Self {
        SuppliedDecomposition { components }
    }

    pub fn components(&self) -> &[SuppliedComponent] {
        &self.components
    }

    pub fn parse(ring: &Arc<PolyRing>, src: &str) -> Result<Self> {
        let mut cur = TokenCursor::new(src)?;
        let mut components = Vec::new();
        while !cur.at_eof() {
            if !cur.is_keyword("component") {
                return Err(cur.unexpected("`component`").into());
            }
            cur.next();
            cur.expect(&TokenKind::Colon)?;
            let primary = PolyIdeal::new(ring.clone(), parse_poly_list(ring, &mut cur)?);
            let prime = if cur.is_keyword("prime") {
                cur.next();
                cur.expect(&TokenKind::Colon)?;
                PolyIdeal::new(ring.clone(), parse_poly_list(ring, &mut cur)?)
            } else {
                primary.clone()
            };
            components.push(SuppliedComponent { primary, prime });
        }
        if components.is_empty() {
            let tok = cur.peek().clone();
            return Err(cur.error_at(&tok, ParseErrorKind::Semantic, "decomposition has no components").into());
        }
        Ok(SuppliedDecomposition { components })
    }

    /// Checks `ideal = ∩ Q_j`, `ideal ⊆ Q_j ⊆ P_j ⊆ √Q_j` and `P_j ≠ (1)`.
    pub fn verify(&self, ideal: &PolyIdeal) -> Result<()> {
        let mut acc = PolyIdeal::unit(ideal.ring().clone());
        for (j, c) in self.components.iter().enumerate() {
            let n = j + 1;
            if !c.primary.contains_ideal(ideal)? {
                return Err(Error::structural(format!("component {n} does not contain the ideal")));
            }
            if c.prime.is_unit()? {
                return Err(Error::structural(format!("component {n} has the unit ideal as radical")));
            }
            if !c.prime.contains_ideal(&c.primary)? {
                return Err(Error::structural(format!("component {n}: prime does not contain the component")));
            }
            for g in c.prime.gens() {
                if !c.primary.radical_contains(g)? {
                    return Err(Error::structural(format!(
                        "component {n}: prime generator {} is not in the radical",
                        ideal.ring().render(g)
                    )));
                }
            }
            acc = acc.intersect(&c.primary)?;
        }
        if !acc.ideal_equal(ideal)? {
            return Err(Error::structural("intersection of the components differs from the ideal"));
        }
        Ok(())
    }

    pub fn map_into(&self, target: Arc<PolyRing>, map: &[Option<usize>]) -> Result<Self> {
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(SuppliedComponent {
                    primary: c.primary.map_into(target.clone(), map)?,
                    prime: c.prime.map_into(target.clone(), map)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SuppliedDecomposition { components })
    }
}
