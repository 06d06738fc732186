//! Text form of polynomials.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := INT ('/' INT)? | VAR INT ('^' INT)?
//! ```
//!
//! `VAR` is `x` for primal and `y` for dual polynomials. Whitespace is
//! ignored. Variables are numbered from 1 unless [`Indexing::ZeroBased`] is
//! requested, which is the usual choice for forms with a distinguished `x0`.

use num_bigint::BigInt;

use super::{ExponentVector, Polynomial, Side};
use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Indexing {
    ZeroBased,
    #[default]
    OneBased,
}

impl Indexing {
    fn offset(self) -> usize {
        match self {
            Indexing::ZeroBased => 0,
            Indexing::OneBased => 1,
        }
    }
}

/// Parses with 1-based variable names.
pub fn parse<K: Field>(text: &str, nvars: usize, side: Side) -> Result<Polynomial<K>> {
    parse_with(text, nvars, side, Indexing::OneBased)
}

pub fn parse_with<K: Field>(text: &str, nvars: usize, side: Side, indexing: Indexing) -> Result<Polynomial<K>> {
    Parser {
        chars: text.chars().collect(),
        pos: 0,
        nvars,
        side,
        indexing,
    }
    .polynomial()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    side: Side,
    indexing: Indexing,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn small_integer(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        let v = self.integer()?;
        match usize::try_from(&v) {
            Ok(x) if x <= u32::MAX as usize => Ok(x),
            _ => Err(Error::Syntax {
                pos: start,
                msg: format!("{what} too large"),
            }),
        }
    }

    fn polynomial<K: Field>(mut self) -> Result<Polynomial<K>> {
        let mut out = Polynomial::zero(self.nvars, self.side);
        if self.peek().is_none() {
            return self.error("empty input");
        }
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None => break,
                Some(_) if first => false,
                Some(c) => return self.error(format!("expected '+' or '-', found '{c}'")),
            };
            first = false;
            let (e, c) = self.term::<K>()?;
            out.add_term(e, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term<K: Field>(&mut self) -> Result<(ExponentVector, K)> {
        let mut exps = vec![0u32; self.nvars];
        let mut coeff = K::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    let num = self.integer()?;
                    let den = if self.peek() == Some('/') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        BigInt::from(1)
                    };
                    let v = K::from_ratio(&num, &den).ok_or(Error::DivisionByZero { pos: start })?;
                    coeff = coeff * v;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let letter = self.side.letter();
                    if c != letter {
                        return self.error(format!("unexpected '{c}', variables are named {letter}<i>"));
                    }
                    self.pos += 1;
                    let raw = self.small_integer("variable index")?;
                    let off = self.indexing.offset();
                    if raw < off || raw - off >= self.nvars {
                        return Err(Error::VariableOutOfRange {
                            letter,
                            index: raw,
                            nvars: self.nvars,
                        });
                    }
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.small_integer("exponent")? as u32
                    } else {
                        1
                    };
                    exps[raw - off] += e;
                }
                Some(c) => return self.error(format!("unexpected '{c}'")),
                None => return self.error("unexpected end of input"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((ExponentVector::new(exps), coeff))
    }
}

impl<K: Field> Polynomial<K> {
    /// Canonical text: terms in descending monomial order, unit coefficients
    /// omitted, `0` for the zero polynomial.
    pub fn to_text(&self, indexing: Indexing) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let letter = self.side.letter();
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            let constant = e.degree() == 0;
            if constant || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (var, &k) in e.as_slice().iter().enumerate() {
                let idx = var + indexing.offset();
                match k {
                    0 => {}
                    1 => factors.push(format!("{letter}{idx}")),
                    _ => factors.push(format!("{letter}{idx}^{k}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
