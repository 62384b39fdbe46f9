//! Lexer and precedence-climbing parser for the polynomial text syntax.
//!
//! ```text
//! expr   := sum
//! sum    := product (("+" | "-") product)*
//! product:= unary ("*" unary)*
//! unary  := "-" unary | "+" unary | power
//! power  := atom ("^" INT)?
//! atom   := INT | IDENT | "(" expr ")"
//! ```
//!
//! The token stream is shared with the ring-file and decomposition-file
//! grammars, which is why the lexer also knows about brackets, colons and
//! string literals. `#` starts a comment running to the end of the line.

use crate::error::{ParseError, ParseErrorKind};
use crate::field::Coeff;

use super::monomial::MAX_EXPONENT;
use super::polynomial::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(String),
    Str(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier `{s}`"),
            TokenKind::Int(s) => format!("integer `{s}`"),
            TokenKind::Str(s) => format!("string \"{s}\""),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::LBracket => "`[`".into(),
            TokenKind::RBracket => "`]`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        let simple = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            ',' => Some(TokenKind::Comma),
            ':' => Some(TokenKind::Colon),
            _ => None,
        };
        if let Some(kind) = simple {
            bump(&mut chars);
            out.push(Token { kind, line: tl, column: tc });
            continue;
        }
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(bump(&mut chars).unwrap());
            }
            out.push(Token { kind: TokenKind::Int(s), line: tl, column: tc });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                s.push(bump(&mut chars).unwrap());
            }
            out.push(Token { kind: TokenKind::Ident(s), line: tl, column: tc });
        } else if c == '"' {
            bump(&mut chars);
            let mut s = String::new();
            loop {
                match bump(&mut chars) {
                    Some('"') => break,
                    Some('\n') | None => {
                        return Err(ParseError::new(
                            ParseErrorKind::Lexical,
                            "unterminated string literal",
                            src,
                            tl,
                            tc,
                        ));
                    }
                    Some(ch) => s.push(ch),
                }
            }
            out.push(Token { kind: TokenKind::Str(s), line: tl, column: tc });
        } else {
            return Err(ParseError::new(ParseErrorKind::Lexical, format!("unexpected character `{c}`"), src, tl, tc));
        }
    }
    out.push(Token { kind: TokenKind::Eof, line, column: col });
    Ok(out)
}

/// A cursor over a token stream that can produce located errors.
pub struct TokenCursor<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> TokenCursor<'a> {
    pub fn new(src: &'a str) -> Result<Self, ParseError> {
        Ok(TokenCursor { src, tokens: tokenize(src)?, pos: 0 })
    }

    pub fn source(&self) -> &'a str {
        self.src
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub fn peek_kind(&self) -> &TokenKind {
        &self.tokens[self.pos].kind
    }

    /// The token `n` places ahead of the current one (`Eof` past the end).
    pub fn peek_nth(&self, n: usize) -> &TokenKind {
        &self.tokens[(self.pos + n).min(self.tokens.len() - 1)].kind
    }

    pub fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek_kind(), TokenKind::Eof)
    }

    pub fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek_kind() == kind {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek_kind(), TokenKind::Ident(s) if s == kw)
    }

    pub fn error_at(&self, tok: &Token, kind: ParseErrorKind, msg: impl Into<String>) -> ParseError {
        ParseError::new(kind, msg, self.src, tok.line, tok.column)
    }

    pub fn unexpected(&self, expected: &str) -> ParseError {
        let tok = self.peek();
        self.error_at(tok, ParseErrorKind::Syntax, format!("expected {expected}, found {}", tok.kind.describe()))
    }

    pub fn expect(&mut self, kind: &TokenKind) -> Result<Token, ParseError> {
        if self.peek_kind() == kind {
            Ok(self.next())
        } else {
            Err(self.unexpected(&kind.describe()))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, Token), ParseError> {
        match self.peek_kind().clone() {
            TokenKind::Ident(s) => Ok((s, self.next())),
            _ => Err(self.unexpected("identifier")),
        }
    }

    pub fn expect_int(&mut self) -> Result<(String, Token), ParseError> {
        match self.peek_kind().clone() {
            TokenKind::Int(s) => Ok((s, self.next())),
            _ => Err(self.unexpected("integer")),
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

fn int_mod(digits: &str, p: u32) -> Coeff {
    digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p as u64) as Coeff
}

struct PolyParser<'r, 'c, 'a> {
    ring: &'r PolyRing,
    cur: &'c mut TokenCursor<'a>,
}

impl PolyParser<'_, '_, '_> {
    fn sum(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.cur.eat(&TokenKind::Plus) {
                let rhs = self.product()?;
                acc = self.ring.add(&acc, &rhs);
            } else if self.cur.eat(&TokenKind::Minus) {
                let rhs = self.product()?;
                acc = self.ring.sub(&acc, &rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while matches!(self.cur.peek_kind(), TokenKind::Star) {
            let star = self.cur.next();
            let rhs = self.unary()?;
            acc = self
                .ring
                .mul(&acc, &rhs)
                .map_err(|e| self.cur.error_at(&star, ParseErrorKind::Semantic, e.to_string()))?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.cur.eat(&TokenKind::Minus) {
            let inner = self.unary()?;
            return Ok(self.ring.neg(&inner));
        }
        if self.cur.eat(&TokenKind::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base_tok = self.cur.peek().clone();
        let base = self.atom()?;
        if !matches!(self.cur.peek_kind(), TokenKind::Caret) {
            return Ok(base);
        }
        self.cur.next();
        let (digits, tok) = self.cur.expect_int()?;
        let exp: u32 = match digits.parse() {
            Ok(e) if e <= MAX_EXPONENT as u32 => e,
            _ => {
                return Err(self.cur.error_at(
                    &tok,
                    ParseErrorKind::Semantic,
                    format!("exponent {digits} exceeds the cap {MAX_EXPONENT}"),
                ))
            }
        };
        self.ring.pow(&base, exp).map_err(|e| self.cur.error_at(&base_tok, ParseErrorKind::Semantic, e.to_string()))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let tok = self.cur.peek().clone();
        match &tok.kind {
            TokenKind::Int(digits) => {
                self.cur.next();
                Ok(self.ring.constant(int_mod(digits, self.ring.field().characteristic())))
            }
            TokenKind::Ident(name) => match self.ring.var_index(name) {
                Some(i) => {
                    self.cur.next();
                    Ok(self.ring.var(i))
                }
                None => Err(self.cur.error_at(&tok, ParseErrorKind::Semantic, format!("unknown variable `{name}`"))),
            },
            TokenKind::LParen => {
                self.cur.next();
                let inner = self.sum()?;
                self.cur.expect(&TokenKind::RParen)?;
                Ok(inner)
            }
            _ => Err(self.cur.unexpected("a polynomial term")),
        }
    }
}

/// Parses one polynomial starting at the cursor, stopping before the first
/// token that cannot continue it.
pub fn parse_poly(ring: &PolyRing, cur: &mut TokenCursor<'_>) -> Result<Polynomial, ParseError> {
    PolyParser { ring, cur }.sum()
}

/// Parses `poly ("," poly)*`.
pub fn parse_poly_list(ring: &PolyRing, cur: &mut TokenCursor<'_>) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = vec![parse_poly(ring, cur)?];
    while cur.eat(&TokenKind::Comma) {
        out.push(parse_poly(ring, cur)?);
    }
    Ok(out)
}

impl PolyRing {
    pub fn parse(&self, src: &str) -> Result<Polynomial, ParseError> {
        let mut cur = TokenCursor::new(src)?;
        let f = parse_poly(self, &mut cur)?;
        cur.expect_end()?;
        Ok(f)
    }

    /// Parses a comma-separated generator list. An empty (or blank) string
    /// is the empty list.
    pub fn parse_list(&self, src: &str) -> Result<Vec<Polynomial>, ParseError> {
        let mut cur = TokenCursor::new(src)?;
        if cur.at_eof() {
            return Ok(Vec::new());
        }
        let out = parse_poly_list(self, &mut cur)?;
        cur.expect_end()?;
        Ok(out)
    }
}
