//! `.ring` files.
//!
//! ```text
//! file          := ring_decl (ideal_decl | decomposition)+
//! ring_decl     := "ring" "GF(" INT ")" "[" (ident ("," ident)*)? "]"
//! ideal_decl    := "ideal" (ident ":")? poly ("," poly)*
//! decomposition := "decomposition" STRING
//! ```
//!
//! Exactly one unnamed `ideal` line gives the defining ideal; named ones are
//! available to `query` by name. `decomposition` points at a primary
//! decomposition file, resolved relative to the ring file.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use qkrull::error::{ParseError, ParseErrorKind};
use qkrull::poly::parse::{parse_poly_list, Token, TokenCursor, TokenKind};
use qkrull::qring::SuppliedDecomposition;
use qkrull::{MonomialOrder, PolyRing, Polynomial, PrimeField, QuotientRing};

#[derive(Clone, Debug, PartialEq)]
pub struct IdealDecl {
    pub name: Option<String>,
    pub gens: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct RingFile {
    pub ring: Arc<PolyRing>,
    pub ideals: Vec<IdealDecl>,
    pub decomposition: Option<String>,
}

impl PartialEq for RingFile {
    fn eq(&self, other: &Self) -> bool {
        self.ring.field().characteristic() == other.ring.field().characteristic()
            && self.ring.var_names() == other.ring.var_names()
            && self.ideals == other.ideals
            && self.decomposition == other.decomposition
    }
}

fn semantic(cur: &TokenCursor<'_>, tok: &Token, msg: impl Into<String>) -> ParseError {
    cur.error_at(tok, ParseErrorKind::Semantic, msg)
}

impl RingFile {
    pub fn parse(src: &str) -> Result<RingFile, ParseError> {
        let mut cur = TokenCursor::new(src)?;
        if !cur.is_keyword("ring") {
            let tok = cur.peek().clone();
            return Err(if cur.is_keyword("ideal") || cur.is_keyword("decomposition") {
                semantic(&cur, &tok, "missing ring declaration before this line")
            } else {
                cur.unexpected("`ring`")
            });
        }
        cur.next();
        let ring = Arc::new(ring_decl(&mut cur)?);

        let mut ideals: Vec<IdealDecl> = Vec::new();
        let mut decomposition = None;
        let mut defining: Option<Token> = None;
        while !cur.at_eof() {
            let head = cur.peek().clone();
            if cur.is_keyword("decomposition") {
                cur.next();
                if decomposition.is_some() {
                    return Err(semantic(&cur, &head, "second decomposition reference"));
                }
                match cur.next().kind {
                    TokenKind::Str(s) => decomposition = Some(s),
                    _ => return Err(semantic(&cur, &head, "decomposition expects a quoted file name")),
                }
                continue;
            }
            if !cur.is_keyword("ideal") {
                return Err(cur.unexpected("`ideal` or `decomposition`"));
            }
            cur.next();
            let mut name = None;
            if let (TokenKind::Ident(s), &TokenKind::Colon) = (cur.peek_kind().clone(), cur.peek_nth(1)) {
                let tok = cur.next();
                cur.next();
                if ring.var_index(&s).is_some() {
                    return Err(semantic(&cur, &tok, format!("ideal name `{s}` clashes with a variable")));
                }
                if ideals.iter().any(|d| d.name.as_deref() == Some(&s)) {
                    return Err(semantic(&cur, &tok, format!("ideal `{s}` declared twice")));
                }
                name = Some(s);
            } else if defining.is_some() {
                return Err(semantic(&cur, &head, "second defining ideal; name additional ideals with `ideal NAME:`"));
            } else {
                defining = Some(head.clone());
            }
            let gens = parse_poly_list(&ring, &mut cur)?;
            ideals.push(IdealDecl { name, gens });
        }
        let Some(tok) = defining else {
            let tok = cur.peek().clone();
            return Err(semantic(&cur, &tok, "no defining ideal (an `ideal` line without a name)"));
        };
        let file = RingFile { ring, ideals, decomposition };
        if qkrull::PolyIdeal::new(file.ring.clone(), file.defining().to_vec()).is_unit().unwrap_or(false) {
            return Err(semantic(&cur, &tok, "defining ideal is the unit ideal"));
        }
        Ok(file)
    }

    pub fn defining(&self) -> &[Polynomial] {
        &self.ideals.iter().find(|d| d.name.is_none()).expect("checked at parse").gens
    }

    pub fn named(&self, name: &str) -> Option<&[Polynomial]> {
        self.ideals.iter().find(|d| d.name.as_deref() == Some(name)).map(|d| &d.gens[..])
    }

    /// Canonical text; parsing it gives back an equal `RingFile`.
    pub fn print(&self) -> String {
        let mut out = format!("ring GF({})[{}]\n", self.ring.field().characteristic(), self.ring.var_names().join(","));
        for d in &self.ideals {
            let gens: Vec<String> = d.gens.iter().map(|g| self.ring.render(g)).collect();
            match &d.name {
                Some(n) => out.push_str(&format!("ideal {n}: {}\n", gens.join(", "))),
                None => out.push_str(&format!("ideal {}\n", gens.join(", "))),
            }
        }
        if let Some(d) = &self.decomposition {
            out.push_str(&format!("decomposition \"{d}\"\n"));
        }
        out
    }

    /// Builds the quotient ring, loading the decomposition file relative to
    /// `base` when one is referenced.
    pub fn quotient(&self, base: Option<&Path>) -> crate::CliResult<QuotientRing> {
        let r = QuotientRing::new(self.ring.clone(), self.defining().to_vec())?;
        let Some(rel) = &self.decomposition else {
            return Ok(r);
        };
        let path = match base.and_then(Path::parent) {
            Some(dir) => dir.join(rel),
            None => PathBuf::from(rel),
        };
        let text = std::fs::read_to_string(&path).map_err(|e| crate::CliError::io(&path, e))?;
        let dec = SuppliedDecomposition::parse(&self.ring, &text)?;
        Ok(r.with_decomposition(dec)?)
    }
}

fn ring_decl(cur: &mut TokenCursor<'_>) -> Result<PolyRing, ParseError> {
    let (gf, tok) = cur.expect_ident()?;
    if gf != "GF" {
        return Err(cur.error_at(&tok, ParseErrorKind::Syntax, format!("expected `GF`, found `{gf}`")));
    }
    cur.expect(&TokenKind::LParen)?;
    let (digits, ptok) = cur.expect_int()?;
    cur.expect(&TokenKind::RParen)?;
    let field =
        digits.parse::<u64>().ok().and_then(|p| PrimeField::new(p).ok()).ok_or_else(|| {
            cur.error_at(&ptok, ParseErrorKind::Semantic, format!("{digits} is not a prime below 2^31"))
        })?;
    cur.expect(&TokenKind::LBracket)?;
    let mut vars: Vec<String> = Vec::new();
    if !cur.eat(&TokenKind::RBracket) {
        loop {
            let (v, vtok) = cur.expect_ident()?;
            if vars.contains(&v) {
                return Err(cur.error_at(&vtok, ParseErrorKind::Semantic, format!("variable `{v}` listed twice")));
            }
            if matches!(v.as_str(), "ring" | "ideal" | "decomposition") {
                return Err(cur.error_at(&vtok, ParseErrorKind::Semantic, format!("`{v}` is reserved")));
            }
            vars.push(v);
            if vars.len() > qkrull::poly::MAX_VARS {
                return Err(cur.error_at(
                    &vtok,
                    ParseErrorKind::Semantic,
                    format!("at most {} variables are supported", qkrull::poly::MAX_VARS),
                ));
            }
            if cur.eat(&TokenKind::RBracket) {
                break;
            }
            cur.expect(&TokenKind::Comma)?;
        }
    }
    PolyRing::new(field, vars, MonomialOrder::Grevlex)
        .map_err(|e| cur.error_at(&ptok, ParseErrorKind::Semantic, e.to_string()))
}
