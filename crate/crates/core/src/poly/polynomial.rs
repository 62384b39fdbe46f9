use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coeff, PrimeField};

use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;

pub type Term = (Monomial, Coeff);

/// A polynomial as a strictly descending (in the ring's order) sequence of
/// terms with nonzero coefficients. The zero polynomial has no terms.
///
/// A `Polynomial` does not know its ring; all arithmetic goes through
/// [`PolyRing`], which supplies the field and the order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term without error handling; `None` for zero.
    pub fn lt(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Wraps terms that are already strictly descending with nonzero
    /// coefficients in the intended order.
    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    /// Union of supports of all terms.
    pub fn support(&self) -> u16 {
        self.terms.iter().fold(0, |s, t| s | t.0.support())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

/// `GF(p)[x_0..x_{n-1}]` together with the active monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::VariableCap(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::structural(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing { field, vars, order })
    }

    /// Grevlex ring over the given variable names.
    pub fn grevlex<S: AsRef<str>>(field: PrimeField, vars: &[S]) -> Result<Self> {
        PolyRing::new(field, vars.iter().map(|s| s.as_ref().to_string()).collect(), MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same field and variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { field: self.field, vars: self.vars.clone(), order }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: Coeff) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        let c = self.field.reduce(c as u64);
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        self.term(m, 1)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var_power(self.nvars(), i, 1).expect("unit exponent"))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = self.field.reduce(c as u64);
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| t.1 == 0) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial built under another order into this ring's order.
    pub fn normalize(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }

    pub fn is_normalized(&self, f: &Polynomial) -> bool {
        f.terms.iter().all(|t| t.1 != 0 && t.1 < self.field.characteristic())
            && f.terms.windows(2).all(|w| self.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    pub fn leading_term(&self, f: &Polynomial) -> Result<Term> {
        f.terms.first().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial { terms: f.terms.iter().map(|&(m, c)| (m, self.field.neg(c))).collect() }
    }

    pub fn scale(&self, f: &Polynomial, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|&(m, d)| (m, self.field.mul(c, d))).collect() }
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.terms.first() {
            None => Polynomial::zero(),
            Some(&(_, 1)) => f.clone(),
            Some(&(_, c)) => self.scale(f, self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// `f + c * m * g`, merging in one pass.
    pub fn add_scaled(&self, f: &Polynomial, c: Coeff, m: &Monomial, g: &Polynomial) -> Result<Polynomial> {
        if c == 0 || g.is_zero() {
            return Ok(f.clone());
        }
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        for &(gm, gc) in &g.terms {
            let sm = gm.mul(m)?;
            let sc = self.field.mul(c, gc);
            loop {
                if i == f.terms.len() {
                    out.push((sm, sc));
                    break;
                }
                match self.cmp(&f.terms[i].0, &sm) {
                    Ordering::Greater => {
                        out.push(f.terms[i]);
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((sm, sc));
                        break;
                    }
                    Ordering::Equal => {
                        let s = self.field.add(f.terms[i].1, sc);
                        if s != 0 {
                            out.push((sm, s));
                        }
                        i += 1;
                        break;
                    }
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        Ok(Polynomial { terms: out })
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, 1, &Monomial::one(self.nvars()), g).expect("unit shift cannot overflow")
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, self.field.neg(1), &Monomial::one(self.nvars()), g).expect("unit shift cannot overflow")
    }

    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: Coeff) -> Result<Polynomial> {
        if c == 0 {
            return Ok(Polynomial::zero());
        }
        // multiplication by a monomial preserves the order of terms
        let mut terms = Vec::with_capacity(f.terms.len());
        for &(fm, fc) in &f.terms {
            terms.push((fm.mul(m)?, self.field.mul(fc, c)));
        }
        Ok(Polynomial { terms })
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() || g.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
        for &(fm, fc) in &f.terms {
            for &(gm, gc) in &g.terms {
                terms.push((fm.mul(&gm)?, self.field.mul(fc, gc)));
            }
        }
        Ok(self.from_terms(terms))
    }

    pub fn pow(&self, f: &Polynomial, mut exp: u32) -> Result<Polynomial> {
        let mut acc = self.one();
        let mut base = f.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Exact quotient `h / f`, or `None` when `f` does not divide `h`.
    pub fn div_exact(&self, h: &Polynomial, f: &Polynomial) -> Result<Option<Polynomial>> {
        let (flm, flc) = self.leading_term(f)?;
        let inv = self.field.inv(flc).expect("nonzero leading coefficient");
        let mut rem = h.clone();
        let mut quot = Vec::new();
        while let Some(&(rm, rc)) = rem.lt() {
            let Some(q) = flm.divide_into(&rm)? else {
                return Ok(None);
            };
            let c = self.field.mul(rc, inv);
            quot.push((q, c));
            rem = self.add_scaled(&rem, self.field.neg(c), &q, f)?;
        }
        Ok(Some(Polynomial { terms: quot }))
    }

    /// Moves `f` into `target`, sending variable `i` to `map[i]`. Returns
    /// `None` if `f` involves an unmapped variable.
    pub fn map_into(&self, f: &Polynomial, target: &PolyRing, map: &[Option<usize>]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(f.terms.len());
        for &(m, c) in &f.terms {
            terms.push((m.remap(target.nvars(), map)?, c));
        }
        Some(target.from_terms(terms))
    }

    /// Renders in the shared text syntax. Coefficients above `p/2` are shown
    /// as negatives so that `x - y` round-trips in every characteristic.
    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let p = self.field.characteristic();
        let mut out = String::new();
        for (k, &(m, c)) in f.terms.iter().enumerate() {
            let (neg, mag) = if p > 2 && c > p / 2 { (true, p - c) } else { (false, c) };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = m.render(&self.vars);
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}*{body}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, order: MonomialOrder) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), vec!["x".into(), "y".into()], order).unwrap()
    }

    #[test]
    fn square_of_sum_gf2() {
        let r = ring(2, MonomialOrder::Grevlex);
        let s = r.add(&r.var(0), &r.var(1));
        let sq = r.mul(&s, &s).unwrap();
        assert_eq!(r.render(&sq), "x^2 + y^2");
    }

    #[test]
    fn mul_by_zero_and_one() {
        let r = ring(5, MonomialOrder::Grevlex);
        let f = r.parse("x^2 - 3*x*y + 4").unwrap();
        assert!(r.mul(&f, &Polynomial::zero()).unwrap().is_zero());
        assert_eq!(r.mul(&f, &r.one()).unwrap(), f);
    }

    #[test]
    fn leading_terms() {
        let lex = ring(7, MonomialOrder::Lex);
        let grl = ring(7, MonomialOrder::Grevlex);
        let f_lex = lex.parse("x*y + y^3").unwrap();
        let f_grl = grl.parse("x*y + y^3").unwrap();
        assert_eq!(lex.render(&lex.monomial(lex.leading_term(&f_lex).unwrap().0)), "x*y");
        assert_eq!(grl.render(&grl.monomial(grl.leading_term(&f_grl).unwrap().0)), "y^3");
        let c = grl.constant(3);
        assert_eq!(grl.leading_term(&c).unwrap(), (Monomial::one(2), 3));
        assert!(matches!(grl.leading_term(&Polynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn exact_division() {
        let r = ring(5, MonomialOrder::Grevlex);
        let f = r.parse("x + y").unwrap();
        let g = r.parse("x - 2*y + 1").unwrap();
        let h = r.mul(&f, &g).unwrap();
        assert_eq!(r.div_exact(&h, &f).unwrap(), Some(g));
        assert_eq!(r.div_exact(&r.var(0), &r.var(1)).unwrap(), None);
    }

    #[test]
    fn render_negatives() {
        let r = ring(101, MonomialOrder::Grevlex);
        let f = r.parse("x - y - 1").unwrap();
        assert_eq!(r.render(&f), "x - y - 1");
        assert_eq!(r.render(&r.neg(&r.var(0))), "-x");
    }
}
