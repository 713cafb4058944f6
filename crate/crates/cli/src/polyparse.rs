//! Recursive-descent parser for polynomial input.
//!
//! ```text
//! poly   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := integer | name ["^" integer]
//! ```
//!
//! Whitespace is ignored between tokens. Like terms are not merged here.

use semidual_core::poly::{Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct PolyError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn integer(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        self.src[start..self.pos].parse().map_err(|_| PolyError {
            offset: start,
            message: "integer too large".into(),
        })
    }

    fn name(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            let ok = if self.pos == start {
                c.is_alphabetic() || c == '_'
            } else {
                c.is_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            self.pos += c.len_utf8();
        }
        (self.pos > start).then(|| self.src[start..self.pos].to_string())
    }

    fn term(&mut self, sign: i64) -> Result<(i64, Monomial), PolyError> {
        let mut coeff = sign;
        let mut mono = Monomial::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    let n = self.integer()?;
                    coeff = i64::try_from(n)
                        .ok()
                        .and_then(|n| coeff.checked_mul(n))
                        .ok_or(PolyError {
                            offset: start,
                            message: "coefficient too large".into(),
                        })?;
                }
                _ => {
                    let Some(v) = self.name() else {
                        return self.error("expected a variable or an integer");
                    };
                    let e = if self.eat('^') {
                        let start = self.pos;
                        u32::try_from(self.integer()?).map_err(|_| PolyError {
                            offset: start,
                            message: "exponent too large".into(),
                        })?
                    } else {
                        1
                    };
                    if e > 0 {
                        *mono.entry(v).or_insert(0) += e;
                    }
                }
            }
            if !self.eat('*') {
                return Ok((coeff, mono));
            }
        }
    }
}

pub fn parse_poly(src: &str) -> Result<Poly, PolyError> {
    let mut p = Parser { src, pos: 0 };
    let mut terms = Vec::new();
    let mut sign = if p.eat('-') {
        -1
    } else {
        p.eat('+');
        1
    };
    loop {
        terms.push(p.term(sign)?);
        sign = if p.eat('+') {
            1
        } else if p.eat('-') {
            -1
        } else {
            break;
        };
    }
    p.skip_ws();
    if p.pos != src.len() {
        return p.error(format!("unexpected '{}'", p.peek().unwrap_or(' ')));
    }
    Ok(Poly { terms })
}
