use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::{Hybrid, Unit};
use crate::rings::{Rat, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Unit(Unit),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Slash => "'/'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Unit(u) => format!("unit '{}'", u.symbol()),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        let tok = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(p, c)) = chars.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    end = p + c.len_utf8();
                    chars.next();
                }
                let n: BigInt = text[pos..end].parse().expect("ascii digits");
                out.push((pos, Tok::Int(n)));
                continue;
            }
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            'i' => Tok::Unit(Unit::I),
            'e' => Tok::Unit(Unit::E),
            'h' => Tok::Unit(Unit::H),
            other => {
                return Err(ParseError {
                    position: pos,
                    expected: "integer, unit (i, e, h), '+', '-' or '/'".into(),
                    found: format!("'{other}'"),
                })
            }
        };
        chars.next();
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos(),
            expected: expected.into(),
            found: self.peek().map_or("end of input".into(), Tok::describe),
        }
    }

    /// term := coeff unit? | unit
    fn term(&mut self) -> Result<(Rat, Unit), ParseError> {
        match self.peek().cloned() {
            Some(Tok::Unit(u)) => {
                self.idx += 1;
                Ok((Rat::one(), u))
            }
            Some(Tok::Int(num)) => {
                self.idx += 1;
                let coeff = if self.peek() == Some(&Tok::Slash) {
                    self.idx += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(den)) if den != BigInt::from(0) => {
                            self.idx += 1;
                            BigRational::new(num, den)
                        }
                        _ => return Err(self.error("nonzero integer denominator")),
                    }
                } else {
                    BigRational::from_integer(num)
                };
                match self.peek() {
                    Some(Tok::Unit(u)) => {
                        let u = *u;
                        self.idx += 1;
                        Ok((coeff, u))
                    }
                    _ => Ok((coeff, Unit::One)),
                }
            }
            _ => Err(self.error("integer or unit (i, e, h)")),
        }
    }
}

/// Parses a hybrid literal such as `1+2i+3e+4h`, `-h` or `1/2 i - e`.
///
/// Units may appear in any order and repeat; repeated units accumulate.
pub fn parse_hybrid(text: &str) -> Result<Hybrid<Rat>, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        idx: 0,
        end: text.len(),
    };
    let mut coords = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    let mut negate = if p.peek() == Some(&Tok::Minus) {
        p.idx += 1;
        true
    } else {
        false
    };
    loop {
        let (coeff, unit) = p.term()?;
        let slot = &mut coords[unit.index()];
        *slot = if negate {
            slot.clone() - coeff
        } else {
            slot.clone() + coeff
        };
        match p.peek() {
            None => break,
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            Some(_) => return Err(p.error("'+', '-' or end of input")),
        }
        p.idx += 1;
    }
    Ok(Hybrid::from_coords(coords))
}
