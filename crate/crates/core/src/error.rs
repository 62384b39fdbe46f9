use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Class of a text-syntax error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Semantic,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Semantic => "semantic error",
        })
    }
}

/// A located error in polynomial, ring or decomposition text.
///
/// `line` and `column` are 1-based; `snippet` holds the offending source line
/// followed by a caret line pointing at the column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub snippet: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, message: impl Into<String>, source: &str, line: usize, column: usize) -> Self {
        let text = source.lines().nth(line.saturating_sub(1)).unwrap_or("");
        let caret = format!("{}^", " ".repeat(column.saturating_sub(1)));
        ParseError { kind, message: message.into(), line, column, snippet: format!("{text}\n{caret}") }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}:{}: {}\n{}", self.kind, self.line, self.column, self.message, self.snippet)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1} variables")]
    Arity(usize, usize),
    #[error("exponent cap exceeded (max {max} per variable)", max = crate::poly::MAX_EXPONENT)]
    ExponentOverflow,
    #[error("variable cap exceeded: {0} variables requested, at most {max} supported", max = crate::poly::MAX_VARS)]
    VariableCap(usize),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("{0} is not a prime modulus below 2^31")]
    NotPrime(u64),
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// The requested computation is outside the supported class of inputs.
    #[error("capability: {0}")]
    Capability(String),
    /// Inputs are well-formed but inconsistent with each other.
    #[error("structural: {0}")]
    Structural(String),
}

impl Error {
    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
