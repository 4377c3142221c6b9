//! Recursive-descent parser for polynomial expressions in `x` and `y`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] atom ['^' nat]
//! atom   := nat | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! A leading minus binds looser than `^`: `-x^2` is `-(x^2)`.

use std::fmt;

use newton_core::{BiPoly, BigInt, IntPoly, Polynomial};
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind} (at {token})")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    /// The offending token as written, or `end of input`.
    pub token: String,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(&'static str),
    NonConstantExponent,
    ExponentTooLarge,
    UnknownVariable(String),
    UnexpectedCharacter(char),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(expected) => write!(f, "syntax error, expected {expected}"),
            ParseErrorKind::NonConstantExponent => {
                f.write_str("exponent must be a non-negative integer literal")
            }
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            ParseErrorKind::UnknownVariable(v) => {
                write!(f, "unknown variable '{v}' (only x and y are allowed)")
            }
            ParseErrorKind::UnexpectedCharacter(c) => write!(f, "unexpected character '{c}'"),
        }
    }
}

/// Abstract syntax of a polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    X,
    Y,
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Neg(Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Expands into dense form in ℤ[x][y].
    pub fn expand(&self) -> BiPoly {
        match self {
            PolyExpr::Int(c) => BiPoly::from_x_poly(IntPoly::constant(c.clone())),
            PolyExpr::X => BiPoly::from_x_poly(IntPoly::x()),
            PolyExpr::Y => BiPoly::y(),
            PolyExpr::Add(a, b) => &a.expand() + &b.expand(),
            PolyExpr::Sub(a, b) => &a.expand() - &b.expand(),
            PolyExpr::Mul(a, b) => &a.expand() * &b.expand(),
            PolyExpr::Neg(a) => -&a.expand(),
            PolyExpr::Pow(a, k) => a.expand().pow(*k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    text: String,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let mut take = |pred: fn(char) -> bool| {
            let start = i;
            while i < chars.len() && pred(chars[i]) {
                i += 1;
            }
            column += i - start;
            chars[start..i].iter().collect::<String>()
        };
        let (tok, text) = if c.is_ascii_digit() {
            let s = take(|c| c.is_ascii_digit());
            (Tok::Num(s.parse().expect("digits")), s)
        } else if c.is_alphabetic() || c == '_' {
            let s = take(|c| c.is_alphanumeric() || c == '_');
            (Tok::Ident(s.clone()), s)
        } else {
            let tok = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(ParseError {
                        line,
                        column,
                        token: format!("'{c}'"),
                        kind: ParseErrorKind::UnexpectedCharacter(c),
                    })
                }
            };
            i += 1;
            column += 1;
            (tok, c.to_string())
        };
        out.push(Token {
            tok,
            text,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        text: String::new(),
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, kind: ParseErrorKind) -> ParseError {
        let token = if t.tok == Tok::End {
            "end of input".to_string()
        } else {
            format!("'{}'", t.text)
        };
        ParseError {
            line: t.line,
            column: t.column,
            token,
            kind,
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = PolyExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyExpr, ParseError> {
        let negate = self.peek().tok == Tok::Minus;
        if negate {
            self.bump();
        }
        let mut base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            let k = match &t.tok {
                Tok::Num(k) => u32::try_from(k)
                    .ok()
                    .filter(|&k| k <= MAX_EXPONENT)
                    .ok_or_else(|| Self::error_at(&t, ParseErrorKind::ExponentTooLarge))?,
                Tok::Ident(_) | Tok::LParen => {
                    return Err(Self::error_at(&t, ParseErrorKind::NonConstantExponent))
                }
                _ => return Err(Self::error_at(&t, ParseErrorKind::Syntax("an exponent"))),
            };
            base = PolyExpr::Pow(Box::new(base), k);
        }
        Ok(if negate {
            PolyExpr::Neg(Box::new(base))
        } else {
            base
        })
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::Num(c) => Ok(PolyExpr::Int(c.clone())),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(PolyExpr::X),
                "y" => Ok(PolyExpr::Y),
                _ => Err(Self::error_at(
                    &t,
                    ParseErrorKind::UnknownVariable(name.clone()),
                )),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(Self::error_at(&close, ParseErrorKind::Syntax("')'")));
                }
                Ok(inner)
            }
            _ => Err(Self::error_at(
                &t,
                ParseErrorKind::Syntax("a number, x, y or '('"),
            )),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse_expr(text: &str) -> Result<PolyExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(Parser::error_at(
            t,
            ParseErrorKind::Syntax("an operator or end of input"),
        ));
    }
    Ok(e)
}

/// Parses and expands. Expressions without `y` (after expansion) are
/// univariate in `x`.
pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let z = parse_expr(text)?.expand();
    Ok(match z.as_x_poly() {
        Some(f) => Polynomial::Uni(f),
        None => Polynomial::Bi(z),
    })
}
