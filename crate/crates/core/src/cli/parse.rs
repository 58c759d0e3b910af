//! Model files: one `key = value` per line, `#` starts a comment.
//!
//! ```text
//! name = X_9111
//! ring = Z
//! a1 = t
//! a2 = 0
//! a3 = -1
//! a4 = 0
//! a6 = 0
//! ```

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::integer::is_prime;
use crate::arith::{Poly, Ring};
use crate::weierstrass::{WeierstrassModel, NAMES, WEIGHTS};

const MAX_EXPONENT: u32 = 1000;
const MAX_FIELD_DEGREE: u32 = 12;

/// A diagnostic pinned to a 1-based line and column.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

type Result<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub name: Option<String>,
    pub comment: Option<String>,
    pub model: WeierstrassModel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Int => "integer",
            Tok::Ident => "symbol",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::Caret => "'^'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::LBracket => "'['",
            Tok::RBracket => "']'",
            Tok::End => "end of line",
        };
        f.write_str(s)
    }
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]` within the source line.
    offset: usize,
    _src: &'a str,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    text: String,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize, offset: usize) -> Self {
        Lexer {
            chars: src.chars().collect(),
            pos: 0,
            line,
            offset,
            _src: src,
        }
    }

    fn tokens(mut self) -> Result<Vec<Token>> {
        let mut out = Vec::new();
        loop {
            while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
                self.pos += 1;
            }
            let column = self.offset + self.pos;
            if self.pos >= self.chars.len() {
                out.push(Token {
                    kind: Tok::End,
                    text: String::new(),
                    column,
                });
                return Ok(out);
            }
            let c = self.chars[self.pos];
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                _ => None,
            };
            if let Some(kind) = single {
                self.pos += 1;
                out.push(Token {
                    kind,
                    text: c.to_string(),
                    column,
                });
                continue;
            }
            if c.is_ascii_digit() {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    let text: String = self.chars[start..self.pos].iter().collect();
                    let next = self.chars[self.pos];
                    return Err(ParseError::new(
                        self.line,
                        self.offset + self.pos,
                        format!("missing '*' between {} and '{}'", text, next),
                    ));
                }
                let text = self.chars[start..self.pos].iter().collect();
                out.push(Token {
                    kind: Tok::Int,
                    text,
                    column,
                });
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let text = self.chars[start..self.pos].iter().collect();
                out.push(Token {
                    kind: Tok::Ident,
                    text,
                    column,
                });
                continue;
            }
            return Err(ParseError::new(
                self.line,
                column,
                format!("unexpected character '{}'", c),
            ));
        }
    }
}

struct Parser<'r> {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
    ring: &'r Ring,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.kind != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, tok: &Token, msg: impl Into<String>) -> Result<T> {
        Err(ParseError::new(self.line, tok.column, msg))
    }

    fn expect(&mut self, kind: Tok) -> Result<Token> {
        let t = self.next();
        if t.kind != kind {
            return self.error(&t, format!("expected {}, found {}", kind, describe(&t)));
        }
        Ok(t)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek().kind {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.peek().kind == Tok::Star {
            self.next();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek().kind == Tok::Minus {
            self.next();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek().kind != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        if t.kind != Tok::Int {
            return self.error(
                &t,
                format!(
                    "exponent must be a nonnegative integer literal, found {}",
                    describe(&t)
                ),
            );
        }
        let e: u32 = match t.text.parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.error(&t, format!("exponent {} exceeds {}", t.text, MAX_EXPONENT)),
        };
        if self.peek().kind == Tok::Caret {
            let t = self.peek().clone();
            return self.error(&t, "chained '^' is ambiguous; add parentheses");
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly> {
        let t = self.next();
        match t.kind {
            Tok::Int => {
                let n: BigInt = t.text.parse().expect("digits");
                Ok(Poly::constant(self.ring, self.ring.from_bigint(&n)))
            }
            Tok::Ident => self.symbol(&t),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.error(&t, format!("expected a term, found {}", describe(&t))),
        }
    }

    fn symbol(&self, t: &Token) -> Result<Poly> {
        if t.text == "t" {
            return Ok(Poly::var(self.ring));
        }
        if let Some((_, _, sym)) = self.ring.extension_parts() {
            if sym == t.text {
                return Ok(Poly::constant(self.ring, self.ring.generator().unwrap()));
            }
        }
        match t.text.as_str() {
            "i" | "w" | "a" => self.error(
                t,
                format!("'{}' is not an element of {}", t.text, self.ring),
            ),
            _ => self.error(t, format!("unknown symbol '{}'", t.text)),
        }
    }
}

fn describe(t: &Token) -> String {
    match t.kind {
        Tok::Int | Tok::Ident => format!("'{}'", t.text),
        _ => t.kind.to_string(),
    }
}

fn lex(src: &str, line: usize, column: usize) -> Result<Vec<Token>> {
    Lexer::new(src, line, column).tokens()
}

/// Parse a polynomial expression in `t` over `ring` (a single line).
pub fn parse_expr(ring: &Ring, src: &str) -> Result<Poly> {
    parse_expr_at(ring, src, 1, 1)
}

fn parse_expr_at(ring: &Ring, src: &str, line: usize, column: usize) -> Result<Poly> {
    let toks = lex(src, line, column)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        ring,
    };
    if p.peek().kind == Tok::End {
        let t = p.peek().clone();
        return p.error(&t, "empty expression");
    }
    let e = p.expr()?;
    let t = p.next();
    if t.kind != Tok::End {
        let msg = match t.kind {
            Tok::RParen => "unbalanced ')'".to_string(),
            Tok::Int | Tok::Ident | Tok::LParen => {
                format!("missing operator before {}", describe(&t))
            }
            _ => format!("unexpected {}", describe(&t)),
        };
        return p.error(&t, msg);
    }
    Ok(e)
}

/// Parse a ring descriptor: `Z`, `Z[i]`, `Z[w]`, `GF(p)` or `GF(p^k)`.
pub fn parse_ring(src: &str) -> Result<Ring> {
    parse_ring_at(src, 1, 1)
}

fn parse_ring_at(src: &str, line: usize, column: usize) -> Result<Ring> {
    let toks = lex(src, line, column)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        ring: &Ring::integers(),
    };
    let head = p.expect(Tok::Ident)?;
    let ring = match head.text.as_str() {
        "Z" if p.peek().kind == Tok::LBracket => {
            p.next();
            let g = p.expect(Tok::Ident)?;
            let r = match g.text.as_str() {
                "i" => Ring::gaussian(),
                "w" => Ring::quartic(),
                _ => {
                    return p.error(
                        &g,
                        format!("unsupported adjoined symbol '{}' (expected i or w)", g.text),
                    )
                }
            };
            p.expect(Tok::RBracket)?;
            r
        }
        "Z" => Ring::integers(),
        "GF" => {
            p.expect(Tok::LParen)?;
            let pt = p.expect(Tok::Int)?;
            let prime: u64 = match pt.text.parse() {
                Ok(v) if is_prime(v) => v,
                _ => return p.error(&pt, format!("{} is not a prime", pt.text)),
            };
            let mut k = 1;
            if p.peek().kind == Tok::Caret {
                p.next();
                let kt = p.expect(Tok::Int)?;
                k = match kt.text.parse::<u32>() {
                    Ok(v) if (1..=MAX_FIELD_DEGREE).contains(&v) => v,
                    _ => {
                        return p.error(
                            &kt,
                            format!("field degree must be between 1 and {}", MAX_FIELD_DEGREE),
                        )
                    }
                };
            }
            p.expect(Tok::RParen)?;
            if k == 1 {
                Ring::prime_field(prime)
            } else {
                Ring::galois_field(prime, k as usize)
            }
        }
        _ => {
            return p.error(
                &head,
                format!(
                    "unknown ring '{}' (expected Z, Z[i], Z[w] or GF(q))",
                    head.text
                ),
            )
        }
    };
    let t = p.next();
    if t.kind != Tok::End {
        return p.error(&t, format!("unexpected {} after ring", describe(&t)));
    }
    Ok(ring)
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    key_column: usize,
    value: &'a str,
    value_column: usize,
}

fn split_lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let number = n + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some(eq) = body.find('=') else {
            let col = body.len() - body.trim_start().len();
            return Err(ParseError::new(
                number,
                col_of(body, col),
                "expected 'key = value'",
            ));
        };
        let key_raw = &body[..eq];
        let key = key_raw.trim();
        let key_start = key_raw.len() - key_raw.trim_start().len();
        if key.is_empty() {
            return Err(ParseError::new(
                number,
                col_of(body, eq),
                "missing key before '='",
            ));
        }
        let value = &body[eq + 1..];
        out.push(Line {
            number,
            key,
            key_column: col_of(body, key_start),
            value,
            value_column: col_of(body, eq + 1),
        });
    }
    Ok(out)
}

fn col_of(s: &str, byte: usize) -> usize {
    s[..byte].chars().count() + 1
}

/// Parse a model file with its metadata.
pub fn parse_model_file(text: &str) -> Result<ModelFile> {
    let lines = split_lines(text)?;
    let mut ring: Option<Ring> = None;
    let mut name = None;
    let mut comment = None;
    let mut slots: [Option<&Line>; 5] = [None, None, None, None, None];
    let mut seen: Vec<(&str, usize)> = Vec::new();
    for l in &lines {
        if let Some((_, first)) = seen.iter().find(|(k, _)| *k == l.key) {
            return Err(ParseError::new(
                l.number,
                l.key_column,
                format!("duplicate key '{}' (first set on line {})", l.key, first),
            ));
        }
        seen.push((l.key, l.number));
        match l.key {
            "ring" => ring = Some(parse_ring_at(l.value, l.number, l.value_column)?),
            "name" => name = Some(l.value.trim().to_string()),
            "comment" => comment = Some(l.value.trim().to_string()),
            k => {
                match NAMES.iter().position(|n| *n == k) {
                    Some(i) => slots[i] = Some(l),
                    None => return Err(ParseError::new(
                        l.number,
                        l.key_column,
                        format!(
                            "unknown key '{}' (expected ring, a1, a2, a3, a4, a6, name or comment)",
                            k
                        ),
                    )),
                }
            }
        }
    }
    let first_coeff = slots.iter().flatten().map(|l| l.number).min();
    let Some(ring) = ring else {
        return Err(ParseError::new(
            first_coeff.unwrap_or(1),
            1,
            "missing 'ring = ...' line",
        ));
    };
    let end = lines.last().map(|l| l.number + 1).unwrap_or(1);
    let mut coeffs = Vec::with_capacity(5);
    for (i, slot) in slots.iter().enumerate() {
        let Some(l) = slot else {
            return Err(ParseError::new(
                end,
                1,
                format!("missing coefficient {}", NAMES[i]),
            ));
        };
        let p = parse_expr_at(&ring, l.value, l.number, l.value_column)?;
        if let Some(d) = p.degree() {
            if d > WEIGHTS[i] as usize {
                return Err(ParseError::new(
                    l.number,
                    l.key_column,
                    format!("deg {} = {} exceeds the bound {}", NAMES[i], d, WEIGHTS[i]),
                ));
            }
        }
        coeffs.push(p);
    }
    let a: [Poly; 5] = coeffs.try_into().expect("five coefficients");
    let model = WeierstrassModel::from_array(a).expect("coefficients share the parsed ring");
    Ok(ModelFile {
        name,
        comment,
        model,
    })
}

pub fn parse_model(text: &str) -> Result<WeierstrassModel> {
    parse_model_file(text).map(|f| f.model)
}

/// Render a model file. The output parses back to an equal model for
/// ℤ, ℤ[i], ℤ[w], 𝔽_p and GF(p^k) rings.
pub fn render_model_file(
    m: &WeierstrassModel,
    name: Option<&str>,
    comment: Option<&str>,
) -> String {
    let mut out = String::new();
    if let Some(n) = name {
        out.push_str(&format!("name = {}\n", n));
    }
    if let Some(c) = comment {
        out.push_str(&format!("comment = {}\n", c));
    }
    out.push_str(&format!("ring = {}\n", m.ring()));
    for (n, p) in NAMES.iter().zip(m.coeffs()) {
        out.push_str(&format!("{} = {}\n", n, p));
    }
    out
}
