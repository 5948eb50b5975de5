//! Text forms for signatures and multivectors.
//!
//! Expression grammar (whitespace-insensitive):
//!
//! ```text
//! expr     := ('+' | '-')? term (('+' | '-') term)*
//! term     := factor ('*' factor | number-adjacent factor)*
//! factor   := rational | generator | '(' expr ')'
//! rational := INT ('/' POSINT)?
//! generator:= 'e' INT
//! ```
//!
//! Products are evaluated with the algebra's multiplication, so `e1*e0`
//! normalizes to `-e0*e1` and a repeated null generator annihilates the term.
//! Generators must be separated by an explicit `*`; `e12` is generator 12.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::blade::{Role, Signature};
use crate::error::{Error, Result};
use crate::multivector::{Multivector, Rational};

/// A parsed signature and, for role strings, where each input position went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedSignature {
    pub sig: Signature,
    /// `relabel[i]` is the canonical index of the `i`-th role in the input.
    pub relabel: Option<Vec<usize>>,
}

/// Accepts `p,q,z` or a role string over `+`, `-` and `0` such as `++-0`.
pub fn parse_signature(text: &str) -> Result<ParsedSignature> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse(0, "empty signature"));
    }
    if text.contains(',') {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::parse(
                0,
                format!("expected p,q,z with three counts, found {}", parts.len()),
            ));
        }
        let mut counts = [0usize; 3];
        let mut offset = 0;
        for (slot, part) in counts.iter_mut().zip(&parts) {
            *slot = part.trim().parse().map_err(|_| {
                Error::parse(
                    offset,
                    format!("'{}' is not a non-negative integer", part.trim()),
                )
            })?;
            offset += part.len() + 1;
        }
        return Ok(ParsedSignature {
            sig: Signature::new(counts[0], counts[1], counts[2])?,
            relabel: None,
        });
    }
    let mut roles = Vec::new();
    for (pos, ch) in text.char_indices() {
        roles.push(match ch {
            '+' => Role::Plus,
            '-' | '−' => Role::Minus,
            '0' => Role::Null,
            _ => {
                return Err(Error::parse(
                    pos,
                    format!("unexpected '{ch}' in role string"),
                ))
            }
        });
    }
    let count = |r: Role| roles.iter().filter(|x| **x == r).count();
    let (p, q, z) = (count(Role::Plus), count(Role::Minus), count(Role::Null));
    let sig = Signature::new(p, q, z)?;
    let mut next = [0, p, p + q];
    let relabel = roles
        .iter()
        .map(|r| {
            let slot = match r {
                Role::Plus => 0,
                Role::Minus => 1,
                Role::Null => 2,
            };
            next[slot] += 1;
            next[slot] - 1
        })
        .collect();
    Ok(ParsedSignature {
        sig,
        relabel: Some(relabel),
    })
}

pub fn parse_expression(sig: &Signature, text: &str) -> Result<Multivector> {
    let mut parser = Parser {
        sig: *sig,
        src: text.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error(format!("unexpected '{}'", parser.src[parser.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    sig: Signature,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Multivector> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Multivector> {
        let (mut acc, mut after_number) = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let (f, num) = self.factor()?;
                    acc = &acc * &f;
                    after_number = num;
                }
                Some(b'e') | Some(b'(') if after_number => {
                    let (f, _) = self.factor()?;
                    acc = &acc * &f;
                    after_number = false;
                }
                Some(b'e') => return Err(self.error("expected '*' between factors")),
                _ => return Ok(acc),
            }
        }
    }

    /// Returns the factor and whether it was a numeric literal.
    fn factor(&mut self) -> Result<(Multivector, bool)> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok((inner, false))
            }
            Some(b'e') => {
                let start = self.pos;
                self.pos += 1;
                let Some(digits) = self.digits() else {
                    return Err(self.error("expected generator index after 'e'"));
                };
                let index: usize = digits.parse().map_err(|_| {
                    Error::parse(start, format!("generator index {digits} too large"))
                })?;
                let g = Multivector::generator(self.sig, index).map_err(|_| {
                    Error::parse(
                        start,
                        format!(
                            "generator e{index} out of range for {} generators",
                            self.sig.generators()
                        ),
                    )
                })?;
                Ok((g, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let denom = self.integer()?;
                    if denom.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    Rational::new(numer, denom)
                } else {
                    Rational::from_integer(numer)
                };
                Ok((Multivector::scalar(self.sig, value), true))
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<BigInt> {
        let Some(d) = self.digits() else {
            return Err(self.error("expected an integer"));
        };
        Ok(d.parse().expect("ascii digits form an integer"))
    }
}
