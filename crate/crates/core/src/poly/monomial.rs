use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of ring variables. Variable subsets fit in a `u16` bitset.
pub const MAX_VARS: usize = 16;

/// Per-variable exponent cap; products exceeding it are an error.
pub const MAX_EXPONENT: u16 = (1 << 15) - 1;

/// A power product `x_0^e_0 * ... * x_{n-1}^e_{n-1}`.
///
/// Exponents beyond `nvars` are always zero, so derived equality and hashing
/// agree with the mathematical notion.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "variable count {nvars} above cap");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, deg: 0 }
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::VariableCap(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            m.exps[i] = e;
            m.deg += e as u32;
        }
        Ok(m)
    }

    /// The monomial `x_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u16) -> Result<Self> {
        if exp > MAX_EXPONENT {
            return Err(Error::ExponentOverflow);
        }
        let mut m = Monomial::one(nvars);
        m.exps[var] = exp;
        m.deg = exp as u32;
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bitset of variables with positive exponent.
    pub fn support(&self) -> u16 {
        let mut s = 0u16;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Arity(self.nvars as usize, other.nvars as usize));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let mut out = *self;
        out.deg = self.deg + other.deg;
        if out.deg <= MAX_EXPONENT as u32 {
            // no single exponent can overflow
            for i in 0..self.nvars as usize {
                out.exps[i] += other.exps[i];
            }
            return Ok(out);
        }
        for i in 0..self.nvars as usize {
            let e = self.exps[i] as u32 + other.exps[i] as u32;
            if e > MAX_EXPONENT as u32 {
                return Err(Error::ExponentOverflow);
            }
            out.exps[i] = e as u16;
        }
        Ok(out)
    }

    /// Whether `self` divides `other`. Arity must match.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.deg > other.deg {
            return false;
        }
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self | other`.
    pub fn divide_into(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check_arity(other)?;
        if !self.divides(other) {
            return Ok(None);
        }
        let mut q = *other;
        for i in 0..self.nvars as usize {
            q.exps[i] -= self.exps[i];
        }
        q.deg -= self.deg;
        Ok(Some(q))
    }

    /// `other / self` for a known divisor `self`.
    #[inline]
    pub(crate) fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut q = *other;
        for i in 0..self.nvars as usize {
            q.exps[i] -= self.exps[i];
        }
        q.deg -= self.deg;
        q
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        out.deg = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        out.deg = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support() & other.support() == 0
    }

    /// Replaces the exponent of `var`, keeping the cached degree in sync.
    pub fn with_exponent(&self, var: usize, exp: u16) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[var] as u32 + exp as u32;
        out.exps[var] = exp;
        out
    }

    /// Re-embeds the monomial into a ring with `nvars` variables, sending
    /// variable `i` to `map[i]`. Unmapped variables must have exponent zero.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Option<Monomial> {
        let mut out = Monomial::one(nvars);
        for i in 0..self.nvars as usize {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            let j = map[i]?;
            out.exps[j] = e;
        }
        out.deg = self.deg;
        Some(out)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
